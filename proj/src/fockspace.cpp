#include "parafock/fockspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace parafock {

namespace {

// Patterns are stored as small integers; keep m12 + 1 well inside 16 bits.
constexpr int kMaxCutoff = 30000;

std::size_t partition_slot(int m12, int m22) noexcept {
  return static_cast<std::size_t>(m12) * static_cast<std::size_t>(m12 + 1) / 2 +
         static_cast<std::size_t>(m22);
}

}  // namespace

Weight weight_of(const GZPattern& m, double p) noexcept {
  return {p / 2.0 + m.m11, p / 2.0 + m.m12 + m.m22 - m.m11};
}

std::size_t basis_size(int cutoff) noexcept {
  std::size_t total = 0;
  for (int m12 = 0; m12 <= cutoff; ++m12)
    for (int m22 = 0; m22 <= m12; ++m22) total += static_cast<std::size_t>(m12 - m22 + 1);
  return total;
}

FockBasis::FockBasis(double p, int cutoff) : p_(p), cutoff_(cutoff) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw std::invalid_argument("order of statistics must satisfy p > 1, got " +
                                std::to_string(p));
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  if (cutoff > kMaxCutoff) throw std::invalid_argument("cutoff too large");

  patterns_.reserve(basis_size(cutoff));
  partition_start_.assign(partition_slot(cutoff, cutoff) + 1, 0);
  for (int degree = 0; degree <= 2 * cutoff; ++degree) {
    for (int m12 = (degree + 1) / 2; m12 <= std::min(degree, cutoff); ++m12) {
      const int m22 = degree - m12;
      partition_start_[partition_slot(m12, m22)] = patterns_.size();
      for (int m11 = m22; m11 <= m12; ++m11) patterns_.push_back({m12, m22, m11});
    }
  }
}

std::optional<std::size_t> FockBasis::find(const GZPattern& m) const noexcept {
  if (!m.valid() || m.m12 > cutoff_) return std::nullopt;
  return partition_start_[partition_slot(m.m12, m.m22)] +
         static_cast<std::size_t>(m.m11 - m.m22);
}

std::size_t FockBasis::index_of(const GZPattern& m) const {
  auto idx = find(m);
  if (!idx)
    throw std::out_of_range("pattern (" + std::to_string(m.m12) + "," + std::to_string(m.m22) +
                            ";" + std::to_string(m.m11) + ") not in basis");
  return *idx;
}

std::vector<std::size_t> FockBasis::interior(int depth) const {
  std::vector<std::size_t> out;
  const int max_degree = cutoff_ - depth;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    // ordering is by degree first
    if (patterns_[i].degree() > max_degree) break;
    out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FockBasis::weight_block(int j, int k) const {
  if (j < 0 || k < 0 || j + k > cutoff_)
    throw std::out_of_range("weight block (" + std::to_string(j) + "," + std::to_string(k) +
                            ") outside the truncated basis");
  std::vector<std::size_t> out;
  const int degree = j + k;
  for (int m22 = 0; m22 <= std::min(j, k); ++m22) {
    const GZPattern m{degree - m22, m22, j};
    if (auto idx = find(m)) out.push_back(*idx);
  }
  return out;
}

FockBasis enumerate_basis(double p, int cutoff) { return FockBasis(p, cutoff); }

FockVector::FockVector(const FockBasis& basis) : basis_(&basis), coeffs_(basis.size()) {}

FockVector::FockVector(const FockBasis& basis, std::vector<Complex> coeffs)
    : basis_(&basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis.size())
    throw std::invalid_argument("coefficient count does not match basis size");
}

double FockVector::norm() const noexcept {
  double s = 0.0;
  for (const auto& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

Complex FockVector::dot(const FockVector& other) const {
  check_compatible(other);
  Complex s{};
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s += std::conj(coeffs_[i]) * other.coeffs_[i];
  return s;
}

FockVector& FockVector::operator+=(const FockVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

FockVector& FockVector::operator*=(Complex s) noexcept {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void FockVector::check_compatible(const FockVector& other) const {
  if (other.coeffs_.size() != coeffs_.size())
    throw std::invalid_argument("FockVector size mismatch");
}

}  // namespace parafock
