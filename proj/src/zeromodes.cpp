#include "parafock/zeromodes.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parafock/algebra.hpp"
#include "parafock/specfun.hpp"

namespace parafock {

namespace {

void check_zero_mode_labels(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("zero mode labels must be nonnegative");
  if (j > k)
    throw std::invalid_argument("no b1^- zero mode with j > k (j=" + std::to_string(j) +
                                ", k=" + std::to_string(k) + ")");
}

void check_reach(const FockBasis& basis, int top_m12, const char* what) {
  if (top_m12 > basis.cutoff())
    throw std::invalid_argument(std::string(what) + ": cutoff " + std::to_string(basis.cutoff()) +
                                " too small, need " + std::to_string(top_m12));
}

double log_binomial(int n, int r) {
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) - std::lgamma(n - r + 1.0);
}

}  // namespace

std::vector<double> zero_mode_coeffs(int j, int k, double p) {
  check_zero_mode_labels(j, k);
  if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");

  // The r-product is shared by every c_i.
  double log_common = 0.0;
  for (int r = 0; r <= k - j; ++r)
    log_common += std::log((r + 1 + odd_indicator(r) * (p - 2.0 + 2.0 * j)) /
                           (k + 1 - r + odd_indicator(k - r) * (p - 2.0)));

  std::vector<double> c(static_cast<std::size_t>(j) + 1);
  double log_s = 0.0;  // running s-product
  int sign = 1;
  const int o = odd_indicator(k + j - 1);
  for (int i = 0; i <= j; ++i) {
    if (i > 0) {
      const int s = i;
      const double num = (j + 1 - s + even_indicator(j - s) * (p - 2.0)) * (k - j + 2 * s + o);
      const double den = (k + 1 + s + even_indicator(k + s - 1) * (p - 2.0)) * (k - j + 2 * s - o);
      log_s += std::log(num / den);
      if ((j - s) % 2 != 0) sign = -sign;
    }
    c[static_cast<std::size_t>(i)] =
        sign * std::exp(0.5 * (log_binomial(k - j + i, i) + log_common + log_s));
  }
  return c;
}

FockVector zero_mode_vector(const FockBasis& basis, int j, int k) {
  check_zero_mode_labels(j, k);
  check_reach(basis, j + k, "zero_mode_vector");
  FockVector v(basis);
  const auto c = zero_mode_coeffs(j, k, basis.p());
  for (int i = 0; i <= j; ++i) v.at(GZPattern{k + i, j - i, j}) = c[static_cast<std::size_t>(i)];
  return v;
}

KernelOracle kernel_oracle(const FockBasis& basis, int j, int k) {
  KernelOracle out;
  out.block = basis.weight_block(j, k);
  const auto cols = out.block.size();
  std::vector<std::size_t> rows;
  if (j >= 1) rows = basis.weight_block(j - 1, k);

  const auto b1m = build_generator(Generator::B1Minus, basis);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(std::max<std::size_t>(rows.size(), 1)),
                                            static_cast<Eigen::Index>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          b1m.at(rows[r], out.block[c]).real();

  // Pad to square so the full V of the SVD spans the column space.
  const auto n = static_cast<Eigen::Index>(cols);
  Eigen::MatrixXd sq = Eigen::MatrixXd::Zero(std::max(m.rows(), n), n);
  sq.topRows(m.rows()) = m;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(sq, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * scale) ++rank;

  out.dimension = static_cast<int>(n - rank);
  const auto& v = svd.matrixV();
  for (Eigen::Index col = rank; col < n; ++col) {
    std::vector<double> vec(cols);
    for (Eigen::Index r = 0; r < n; ++r) vec[static_cast<std::size_t>(r)] = v(r, col);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

double ladder_normalization(double p, int j, int n) {
  if (n < 0) throw std::invalid_argument("ladder index must be nonnegative");
  const int o = odd_indicator(n);
  const int half_low = (n - o) / 2;
  const int half_high = (n + o) / 2;
  const double log_sq = n * std::log(2.0) + std::lgamma(half_low + 1.0) +
                        log_pochhammer(p / 2.0 + j, half_high);
  return std::exp(0.5 * log_sq);
}

double ladder_raise_factor(double p, int j, int n) noexcept {
  return std::sqrt((p + 2.0 * j) * even_indicator(n) + n + odd_indicator(n));
}

FockVector ladder_state(const FockBasis& basis, int j, int k, int n) {
  check_zero_mode_labels(j, k);
  if (n < 0) throw std::invalid_argument("ladder index must be nonnegative");
  check_reach(basis, j + k + n, "ladder_state");
  auto v = zero_mode_vector(basis, j, k);
  if (n == 0) return v;
  const auto b1p = build_generator(Generator::B1Plus, basis);
  for (int i = 0; i < n; ++i) v = b1p.apply(v);
  v *= 1.0 / ladder_normalization(basis.p(), j, n);
  return v;
}

double b2sq_shift(int j, int k, double p, ShiftDirection dir) {
  check_zero_mode_labels(j, k);
  if (dir == ShiftDirection::Lower) {
    if (k - 2 < j) return 0.0;
    return std::sqrt((k - 1 - j + even_indicator(k - j)) *
                     (p + k - 2 + j + odd_indicator(k + j)));
  }
  return std::sqrt((k + 1 - j + even_indicator(k - j)) * (p + k + j + odd_indicator(k + j)));
}

}  // namespace parafock
