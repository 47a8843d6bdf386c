#include "parafock/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parafock/algebra.hpp"
#include "parafock/specfun.hpp"

namespace parafock {

namespace {

constexpr int kNmaxCap = 200;

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must exceed 1");
}

void check_labels(int j, int k) {
  if (j < 0 || k < j)
    throw std::invalid_argument("coherent state labels need 0 <= j <= k (j=" + std::to_string(j) +
                                ", k=" + std::to_string(k) + ")");
}

// a_0..a_nmax by a_{n+1} = alpha a_n / s_n.
std::vector<Complex> ladder_coefficients(double p, int j, Complex alpha, int nmax) {
  std::vector<Complex> a(static_cast<std::size_t>(nmax) + 1);
  a[0] = 1.0;
  for (int n = 0; n < nmax; ++n)
    a[static_cast<std::size_t>(n) + 1] = a[static_cast<std::size_t>(n)] * alpha /
                                         ladder_raise_factor(p, j, n);
  return a;
}

double sum_sq(const std::vector<Complex>& v) {
  double s = 0.0;
  for (const auto& c : v) s += std::norm(c);
  return s;
}

// Gamma(nu) (x/2)^{1-nu} I_{nu-1}(x) and Gamma(nu) (x/2)^{1-nu} I_nu(x): the
// squared weights of the even and odd halves of an unnormalized state.
double even_mass(double nu, double x) {
  if (x == 0.0) return 1.0;
  return std::exp(std::lgamma(nu) + (1.0 - nu) * std::log(0.5 * x)) * bessel_i(nu - 1.0, x).value;
}

double odd_mass(double nu, double x) {
  if (x == 0.0) return 0.0;
  return std::exp(std::lgamma(nu) + (1.0 - nu) * std::log(0.5 * x)) * bessel_i(nu, x).value;
}

}  // namespace

double CoherentState::norm_squared() const noexcept { return sum_sq(coeffs); }

namespace {

FockVector expand_on_basis(const CoherentState& s, const FockBasis& basis,
                           const SparseOperator& b1p) {
  if (s.j + s.k + s.nmax() > basis.cutoff())
    throw std::invalid_argument("to_fock_vector: cutoff " + std::to_string(basis.cutoff()) +
                                " too small for j+k+nmax = " + std::to_string(s.j + s.k + s.nmax()));
  FockVector rung = zero_mode_vector(basis, s.j, s.k);
  FockVector out = s.coeffs[0] * rung;
  for (int n = 1; n <= s.nmax(); ++n) {
    rung = b1p.apply(rung);
    rung *= 1.0 / ladder_raise_factor(s.p, s.j, n - 1);
    out += s.coeffs[static_cast<std::size_t>(n)] * rung;
  }
  return out;
}

}  // namespace

FockVector CoherentState::to_fock_vector(const FockBasis& basis) const {
  return expand_on_basis(*this, basis, build_generator(Generator::B1Plus, basis));
}

Complex coherent_coefficient(double p, int j, Complex alpha, int n) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("coefficient index must be nonnegative");
  if (n == 0) return 1.0;
  if (alpha == Complex{}) return 0.0;
  const double mag = std::exp(n * std::log(std::abs(alpha))) / ladder_normalization(p, j, n);
  return std::polar(mag, n * std::arg(alpha));
}

int default_nmax(double p, int j, Complex alpha) {
  check_p(p);
  const auto a = ladder_coefficients(p, j, alpha, kNmaxCap);
  double peak = 0.0;
  for (int n = 0; n <= kNmaxCap; ++n) {
    peak = std::max(peak, std::abs(a[static_cast<std::size_t>(n)]));
    if (n >= 4 && n % 2 == 0 && std::abs(a[static_cast<std::size_t>(n)]) < 1e-16 * peak) return n;
  }
  return kNmaxCap;
}

CoherentState build_coherent(double p, int j, int k, Complex alpha, std::optional<int> nmax,
                             bool normalized) {
  check_p(p);
  check_labels(j, k);
  const int n = nmax.value_or(default_nmax(p, j, alpha));
  if (n < 4) throw std::invalid_argument("nmax must be at least 4");
  const double q = std::abs(alpha) / std::sqrt(n + 1.0);
  if (q >= 1.0)
    throw std::invalid_argument("nmax " + std::to_string(n) +
                                " too small: coefficients not yet decaying for |alpha| = " +
                                std::to_string(std::abs(alpha)));

  CoherentState s;
  s.p = p;
  s.j = j;
  s.k = k;
  s.alpha = alpha;
  s.coeffs = ladder_coefficients(p, j, alpha, n);
  s.tail_bound = std::norm(s.coeffs.back()) * q * q / (1.0 - q * q);
  if (normalized) {
    const double nrm = coherent_norm(p, j, alpha);
    for (auto& c : s.coeffs) c /= std::sqrt(nrm);
    s.tail_bound /= nrm;
    s.normalized = true;
  }
  return s;
}

double eigen_residual(const CoherentState& s) {
  const int n = s.nmax();
  double sq = 0.0;
  for (int m = 0; m <= n; ++m) {
    const Complex lowered =
        m < n ? ladder_raise_factor(s.p, s.j, m) * s.coeffs[static_cast<std::size_t>(m) + 1]
              : Complex{};
    sq += std::norm(lowered - s.alpha * s.coeffs[static_cast<std::size_t>(m)]);
  }
  return std::sqrt(sq);
}

double eigen_residual_matrix(const CoherentState& s, const FockBasis& basis) {
  const auto v = s.to_fock_vector(basis);
  const auto b1m = build_generator(Generator::B1Minus, basis);
  auto r = b1m.apply(v);
  r -= s.alpha * v;
  return r.norm();
}

double coherent_norm(double p, int j, Complex alpha) {
  check_p(p);
  const double nu = p / 2.0 + j;
  const double x = std::norm(alpha);
  return even_mass(nu, x) + odd_mass(nu, x);
}

double coherent_norm_series(double p, int j, Complex alpha) {
  check_p(p);
  const double nu = p / 2.0 + j;
  const double x = std::norm(alpha);
  const double q = 0.25 * x * x;
  return hyp0f1(nu, q).value + x / (2.0 * nu) * hyp0f1(nu + 1.0, q).value;
}

Complex coherent_overlap(double p, int j, Complex alpha_prime, Complex alpha) {
  check_p(p);
  const double nu = p / 2.0 + j;
  const Complex z = std::conj(alpha_prime) * alpha;
  const Complex q = 0.25 * z * z;
  const Complex raw = hyp0f1(nu, q).value + z / (2.0 * nu) * hyp0f1(nu + 1.0, q).value;
  return raw / std::sqrt(coherent_norm(p, j, alpha_prime) * coherent_norm(p, j, alpha));
}

double antipodal_overlap(double p, int j, Complex alpha) {
  check_p(p);
  const double nu = p / 2.0 + j;
  const double x = std::norm(alpha);
  if (x == 0.0) return 1.0;
  const double im1 = bessel_i(nu - 1.0, x).value;
  const double i0 = bessel_i(nu, x).value;
  return (im1 - i0) / (im1 + i0);
}

double cat_mass(double p, int j, Complex alpha, CatSign sign) {
  check_p(p);
  const double nu = p / 2.0 + j;
  const double x = std::norm(alpha);
  return sign == CatSign::Plus ? even_mass(nu, x) : odd_mass(nu, x);
}

CoherentState cat_state(const CoherentState& s, CatSign sign) {
  if (sign == CatSign::Minus && s.alpha == Complex{})
    throw std::invalid_argument("odd cat state at alpha = 0 is the zero vector");
  CoherentState out = s;
  const int keep = sign == CatSign::Plus ? 0 : 1;
  double kept = 0.0;
  for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
    // psi(-alpha) has coefficients (-1)^n a_n.
    const double parity = (n % 2 == 0) ? 1.0 : -1.0;
    const double factor = sign == CatSign::Plus ? 1.0 + parity : 1.0 - parity;
    out.coeffs[n] *= factor;
    if (static_cast<int>(n % 2) == keep) kept += std::norm(out.coeffs[n]);
  }
  const double nrm = std::sqrt(kept);
  for (auto& c : out.coeffs) c /= nrm;
  out.tail_bound = 4.0 * s.tail_bound / kept;
  out.normalized = true;
  return out;
}

CoherentState cat_state_closed_form(double p, int j, int k, Complex alpha, CatSign sign,
                                    std::optional<int> nmax) {
  if (sign == CatSign::Minus && alpha == Complex{})
    throw std::invalid_argument("odd cat state at alpha = 0 is the zero vector");
  auto s = build_coherent(p, j, k, alpha, nmax, false);
  const double mass = cat_mass(p, j, alpha, sign);
  const std::size_t keep = sign == CatSign::Plus ? 0 : 1;
  for (std::size_t n = 0; n < s.coeffs.size(); ++n)
    s.coeffs[n] = (n % 2 == keep) ? s.coeffs[n] / std::sqrt(mass) : Complex{};
  s.tail_bound /= mass;
  s.normalized = true;
  return s;
}

Complex b2_element(double p, int jp, Complex alpha_prime, int j, int k, Complex alpha) {
  check_p(p);
  check_labels(j, k);
  if (k < 1) throw std::invalid_argument("b2_element needs k >= 1");
  if (jp < 0 || jp > k - 1) return 0.0;  // no zero mode zeta_{jp,k-1}
  const double nu = p / 2.0 + j;
  const Complex w = alpha * std::conj(alpha_prime);
  const Complex q = 0.25 * w * w;
  const double sgn_j = (j % 2 == 0) ? 1.0 : -1.0;

  if (jp == j - 1) {
    const double r = std::sqrt(j * (p - 2.0 + j) * (p + k + j - 1.0 - even_indicator(k - j))) /
                     std::pow(p + 2.0 * j - 2.0, 1.5);
    return hyp0f1(nu, q).value * (-2.0 * sgn_j) * std::conj(alpha_prime) * r;
  }
  if (jp == j) {
    const double s = std::sqrt(k - j + odd_indicator(k - j) * (p - 1.0 + 2.0 * j));
    // (p-2)/(p-2+2j) is 0/0 at p = 2, j = 0; its value there is 1.
    const double lead = j == 0 ? 1.0 : (p - 2.0) / (p - 2.0 + 2.0 * j);
    return hyp0f1(nu, q).value * lead * s -
           hyp0f1(nu + 1.0, q).value * w * (p - 2.0) / ((p + 2.0 * j) * (p + 2.0 * j)) * s;
  }
  if (jp == j + 1) {
    const double r = std::sqrt((j + 1.0) * (p - 1.0 + j) * (k - j - odd_indicator(k - j))) /
                     std::pow(p + 2.0 * j, 1.5);
    return hyp0f1(nu + 1.0, q).value * 2.0 * alpha * sgn_j * r;
  }
  return 0.0;
}

OracleValue b2_element_oracle(const FockBasis& basis, int jp, Complex alpha_prime, int j, int k,
                              Complex alpha, int nmax) {
  check_labels(j, k);
  if (k < 1) throw std::invalid_argument("b2_element_oracle needs k >= 1");
  if (std::max(j, jp) + k + nmax > basis.cutoff())
    throw std::invalid_argument("b2_element_oracle: cutoff too small for max(j,jp)+k+nmax");
  if (jp < 0 || jp > k - 1) return {0.0, 0.0};

  const auto ket = build_coherent(basis.p(), j, k, alpha, nmax);
  const auto bra = build_coherent(basis.p(), jp, k - 1, alpha_prime, nmax);
  const auto vket = ket.to_fock_vector(basis);
  const auto vbra = bra.to_fock_vector(basis);
  const auto b2m = build_generator(Generator::B2Minus, basis);
  const Complex value = vbra.dot(b2m.apply(vket));

  // ||b2^- v||^2 <= <v|{b2^-, b2^+}|v> = 2 <v|h2|v>; h2 <= p/2 + degree. The
  // dropped ladder tails sit at degree below the cutoff plus a few rungs;
  // 4 * cutoff + p bounds it generously.
  const double op = std::sqrt(basis.p() + 4.0 * basis.cutoff() + 4.0 * nmax);
  const double tk = std::sqrt(ket.tail_bound), tb = std::sqrt(bra.tail_bound);
  const double budget =
      op * (std::sqrt(bra.norm_squared()) * tk + std::sqrt(ket.norm_squared()) * tb + tk * tb);
  return {value, budget};
}

double b2sq_on_coherent(double p, int j, int k, ShiftDirection dir) {
  check_p(p);
  return b2sq_shift(j, k, p, dir);
}

BicoherentState bicoherent(double p, int j, int l, Complex alpha, Complex beta, int kmax,
                           std::optional<int> nmax) {
  check_p(p);
  if (j < 0) throw std::invalid_argument("bicoherent: j must be nonnegative");
  if (l != j && l != j + 1) throw std::invalid_argument("bicoherent: l must be j or j+1");
  if (kmax < 2) throw std::invalid_argument("bicoherent: kmax must be at least 2");

  BicoherentState s;
  s.p = p;
  s.j = j;
  s.l = l;
  s.alpha = alpha;
  s.beta = beta;
  s.kmax = kmax;
  s.ladder = build_coherent(p, j, l, alpha, nmax);

  // c_k by integer powers of beta, so beta^0 = 1 even at beta = 0.
  s.prefactors.resize(static_cast<std::size_t>(kmax) + 1);
  Complex beta_pow = 1.0;
  for (int i = 0; i < l / 2; ++i) beta_pow *= beta;
  double log_den = 0.0;  // log((2k)!! prod_{i<k} (p + 2l + 2i))
  for (int kk = 0; kk <= kmax; ++kk) {
    if (kk > 0) {
      beta_pow *= beta;
      log_den += std::log(2.0 * kk) + std::log(p + 2.0 * l + 2.0 * (kk - 1));
    }
    s.prefactors[static_cast<std::size_t>(kk)] = beta_pow * std::exp(-0.5 * log_den);
  }

  const double psi_norm = std::sqrt(s.ladder.norm_squared());
  const double c_norm = std::sqrt(sum_sq(s.prefactors));
  s.norm = c_norm * psi_norm;
  if (s.norm == 0.0) return s;  // Psi vanishes identically (beta = 0, l >= 2)

  // b1^-: components have disjoint h2 weights, so the residual adds in
  // quadrature over k and each component carries the ladder residual.
  const double ladder_res = eigen_residual(s.ladder);
  s.b1_residual = ladder_res * c_norm / s.norm;
  s.b1_bound = std::abs(alpha) * std::abs(s.ladder.coeffs.back()) * c_norm / s.norm;

  // (b2^-)^2 maps psi~_{j,2k+l} to lower(j,2k+l) psi~_{j,2k+l-2}.
  double sq = 0.0;
  for (int kk = 0; kk <= kmax; ++kk) {
    const Complex next =
        kk < kmax ? s.prefactors[static_cast<std::size_t>(kk) + 1] *
                        b2sq_shift(j, 2 * (kk + 1) + l, p, ShiftDirection::Lower)
                  : Complex{};
    sq += std::norm(next - beta * s.prefactors[static_cast<std::size_t>(kk)]);
  }
  s.b2sq_residual = std::sqrt(sq) * psi_norm / s.norm;
  s.b2sq_bound = std::abs(beta) * std::abs(s.prefactors.back()) * psi_norm / s.norm;
  return s;
}

FockVector bicoherent_to_fock(const BicoherentState& s, const FockBasis& basis) {
  const int top = s.j + 2 * s.kmax + s.l + s.ladder.nmax();
  if (top > basis.cutoff())
    throw std::invalid_argument("bicoherent_to_fock: cutoff " + std::to_string(basis.cutoff()) +
                                " too small, need " + std::to_string(top));
  const auto b1p = build_generator(Generator::B1Plus, basis);
  FockVector out(basis);
  for (int kk = 0; kk <= s.kmax; ++kk) {
    CoherentState comp = s.ladder;
    comp.k = 2 * kk + s.l;
    out += s.prefactors[static_cast<std::size_t>(kk)] * expand_on_basis(comp, basis, b1p);
  }
  return out;
}

BicoherentResiduals bicoherent_matrix_residuals(const BicoherentState& s, const FockBasis& basis) {
  const auto v = bicoherent_to_fock(s, basis);
  const auto b1m = build_generator(Generator::B1Minus, basis);
  const auto b2m = build_generator(Generator::B2Minus, basis);
  BicoherentResiduals r;
  r.norm = v.norm();
  if (r.norm == 0.0) return r;
  auto e1 = b1m.apply(v);
  e1 -= s.alpha * v;
  auto e2 = b2m.apply(b2m.apply(v));
  e2 -= s.beta * v;
  r.b1 = e1.norm() / r.norm;
  r.b2sq = e2.norm() / r.norm;
  return r;
}

}  // namespace parafock
