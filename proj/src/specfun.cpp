#include "parafock/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "parafock/quadrature.hpp"

namespace parafock {

namespace {

constexpr double kRelStop = 1e-17;
constexpr int kMaxTerms = 100000;
constexpr double kSeamWidth = 1e-6;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

void check_bessel_x(double x, bool allow_zero) {
  if (!std::isfinite(x) || x < 0.0 || (!allow_zero && x == 0.0))
    throw std::invalid_argument("Bessel argument out of domain: " + std::to_string(x));
  if (x > kMaxBesselArgument)
    throw std::invalid_argument("Bessel argument beyond the validated range (x <= 500)");
}

void check_series_parameter(double a) {
  if (!std::isfinite(a)) throw std::invalid_argument("0F1 parameter must be finite");
  if (a <= 0.0 && std::abs(a - std::round(a)) < 1e-9)
    throw std::invalid_argument("0F1 parameter at a pole (nonpositive integer)");
}

// Shared 0F1 summation over a scalar type T (double or complex). With
// max_terms > 0 exactly that many terms are summed.
template <class T>
void sum_0f1(double a, T x, int max_terms, T& sum, int& used, double& tail) {
  sum = T(1.0);
  T term(1.0);
  int k = 0;
  const bool fixed = max_terms > 0;
  const int limit = fixed ? max_terms : kMaxTerms;
  for (;;) {
    term *= x / ((a + k) * (k + 1.0));
    ++k;
    // `term` is now term k, the first one not yet added.
    const double ratio = std::abs(x) / std::abs((a + k) * (k + 1.0));
    const bool decaying = a + k > 0.0 && ratio <= 0.5;
    if (fixed) {
      if (k >= limit) {
        used = k;
        tail = decaying ? 2.0 * std::abs(term) : std::numeric_limits<double>::infinity();
        return;
      }
    } else if (decaying && std::abs(term) <= kRelStop * std::abs(sum)) {
      used = k;
      tail = 2.0 * std::abs(term);
      return;
    } else if (k >= limit) {
      throw std::runtime_error("0F1 series did not converge");
    }
    sum += term;
  }
}

double pow_half(double x, double nu) { return std::pow(0.5 * x, nu); }

}  // namespace

SeriesResult hyp0f1(double a, double x) {
  check_series_parameter(a);
  SeriesResult r;
  sum_0f1<double>(a, x, 0, r.value, r.terms_used, r.tail_bound);
  return r;
}

ComplexSeriesResult hyp0f1(double a, std::complex<double> z) {
  check_series_parameter(a);
  ComplexSeriesResult r;
  sum_0f1<std::complex<double>>(a, z, 0, r.value, r.terms_used, r.tail_bound);
  return r;
}

SeriesResult hyp0f1_partial(double a, double x, int terms) {
  check_series_parameter(a);
  if (terms < 1) throw std::invalid_argument("hyp0f1_partial: terms must be positive");
  SeriesResult r;
  sum_0f1<double>(a, x, terms, r.value, r.terms_used, r.tail_bound);
  return r;
}

namespace {

SeriesResult bessel_i_from(double nu, double x, int terms) {
  if (!(nu > -1.0)) throw std::invalid_argument("bessel_i requires nu > -1");
  check_bessel_x(x, true);
  if (x == 0.0) {
    if (nu < 0.0) throw std::invalid_argument("I_nu(0) is infinite for nu < 0");
    return {nu == 0.0 ? 1.0 : 0.0, 1, 0.0};
  }
  const auto s = terms > 0 ? hyp0f1_partial(nu + 1.0, 0.25 * x * x, terms)
                           : hyp0f1(nu + 1.0, 0.25 * x * x);
  const double pre = pow_half(x, nu) * reciprocal_gamma(nu + 1.0);
  return {pre * s.value, s.terms_used, pre * s.tail_bound};
}

}  // namespace

SeriesResult bessel_i(double nu, double x) { return bessel_i_from(nu, x, 0); }

SeriesResult bessel_i_partial(double nu, double x, int terms) {
  if (terms < 1) throw std::invalid_argument("bessel_i_partial: terms must be positive");
  return bessel_i_from(nu, x, terms);
}

SeriesResult bessel_i_any_order(double nu, double x) {
  if (nu > -1.0) return bessel_i(nu, x);
  check_bessel_x(x, false);
  // Terms with n + nu + 1 <= 0 carry 1/Gamma of a nonpositive argument; they
  // are evaluated one by one, the rest by the ratio recurrence.
  const double lx = std::log(0.5 * x);
  const int n0 = static_cast<int>(std::floor(-nu)) ;
  double sum = 0.0;
  for (int n = 0; n < n0; ++n)
    sum += std::exp((2.0 * n + nu) * lx - std::lgamma(n + 1.0)) * reciprocal_gamma(n + nu + 1.0);
  // n0 + nu + 1 > 0 from here on.
  double term =
      std::exp((2.0 * n0 + nu) * lx - std::lgamma(n0 + 1.0)) * reciprocal_gamma(n0 + nu + 1.0);
  const double q = 0.25 * x * x;
  int n = n0;
  for (; n < n0 + kMaxTerms; ++n) {
    const double ratio = q / ((n + 1.0) * (n + nu + 1.0));
    if (ratio <= 0.5 && std::abs(term) <= kRelStop * std::abs(sum) && n > n0) break;
    sum += term;
    term *= ratio;
  }
  return {sum, n, 2.0 * std::abs(term)};
}

SeriesResult bessel_k_reflection(double nu, double x) {
  check_bessel_x(x, false);
  nu = std::abs(nu);
  const double s = std::sin(std::numbers::pi * nu);
  if (nu == std::round(nu) || s == 0.0)
    throw std::invalid_argument("reflection form of K is undefined at integer order");
  const auto ineg = bessel_i_any_order(-nu, x);
  const auto ipos = bessel_i_any_order(nu, x);
  const double f = std::numbers::pi / (2.0 * s);
  return {f * (ineg.value - ipos.value), std::max(ineg.terms_used, ipos.terms_used),
          std::abs(f) * (ineg.tail_bound + ipos.tail_bound)};
}

SeriesResult bessel_k_integer(int n, double x) {
  check_bessel_x(x, false);
  n = std::abs(n);
  const double h = 0.5 * x;
  const double lh = std::log(h);

  double finite = 0.0;
  for (int k = 0; k < n; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    finite += sign * std::exp(std::lgamma(n - k + 0.0) - std::lgamma(k + 1.0) + (2.0 * k - n) * lh);
  }
  finite *= 0.5;

  // u_k = h^{n+2k} / (k! (n+k)!), bracket = ln h - psi(k+1)/2 - psi(n+k+1)/2.
  double u = std::exp(n * lh - std::lgamma(n + 1.0));
  double psi_k1 = -kEulerGamma;            // psi(1)
  double psi_nk1 = digamma_int(n + 1);     // psi(n+1)
  double series = 0.0;
  int k = 0;
  double next = 0.0;
  for (; k < kMaxTerms; ++k) {
    const double term = u * (lh - 0.5 * psi_k1 - 0.5 * psi_nk1);
    const double ratio = h * h / ((k + 1.0) * (n + k + 1.0));
    if (k > 0 && ratio <= 0.25 && std::abs(term) <= kRelStop * std::abs(series)) {
      next = term;
      break;
    }
    series += term;
    u *= ratio;
    psi_k1 += 1.0 / (k + 1.0);
    psi_nk1 += 1.0 / (n + k + 1.0);
  }
  const double sign = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  return {finite + sign * series, k, 2.0 * std::abs(next)};
}

SeriesResult bessel_k_continued_fraction(double nu, double x) {
  check_bessel_x(x, false);
  nu = std::abs(nu);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;  // |mu| <= 1/2
  const double eps = 1e-17;

  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  int i = 1;
  double dels = 0.0;
  for (; i < kMaxTerms; ++i) {
    a -= 2.0 * i;
    c = -a * c / (i + 1.0);
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  if (i >= kMaxTerms) throw std::runtime_error("K continued fraction did not converge");
  h *= a1;
  double kmu = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  double k1 = kmu * (mu + x + 0.5 - h) / x;
  for (int m = 1; m <= nl; ++m) {
    const double next = (mu + m) * (2.0 / x) * k1 + kmu;
    kmu = k1;
    k1 = next;
  }
  return {kmu, i, std::abs(dels / s) * std::abs(kmu)};
}

SeriesResult bessel_k(double nu, double x) {
  check_bessel_x(x, false);
  nu = std::abs(nu);
  if (x > 2.0) return bessel_k_continued_fraction(nu, x);
  const double n = std::round(nu);
  const double delta = nu - n;
  if (std::abs(delta) > kSeamWidth) return bessel_k_reflection(nu, x);

  const int order = static_cast<int>(n);
  auto r = bessel_k_integer(order, x);
  if (delta != 0.0 && order > 0) {
    // dK_nu/dnu at nu = n: (n!/2) (x/2)^{-n} sum_{k<n} (x/2)^k K_k(x) / ((n-k) k!)
    const double lh = std::log(0.5 * x);
    double deriv = 0.0;
    for (int k = 0; k < order; ++k)
      deriv += std::exp(k * lh - std::lgamma(k + 1.0)) * bessel_k_integer(k, x).value /
               (order - k);
    deriv *= 0.5 * std::exp(std::lgamma(order + 1.0) - order * lh);
    r.value += delta * deriv;
    r.tail_bound += 0.5 * delta * delta * std::abs(deriv) * (1.0 + std::abs(lh));
  }
  return r;
}

double bessel_k_oracle(double nu, double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw std::invalid_argument("bessel_k_oracle requires z > 0");
  nu = std::abs(nu);
  const double a = 2.0 * z;
  const double tpk = std::asinh(nu / a);
  const double log_peak = -a * std::cosh(tpk) + nu * tpk;
  auto g = [&](double t) { return -a * std::cosh(t) + nu * t - log_peak; };
  auto f = [&](double t) { return std::exp(g(t)) * 0.5 * (1.0 + std::exp(-2.0 * nu * t)); };

  const double cut = std::log(1e-18);
  double width = 1.0;
  while (g(tpk + width) > cut) width *= 2.0;
  // Shrink back by bisection so panels are not wasted on a flat zero tail.
  double lo = tpk + 0.5 * width, hi = tpk + width;
  if (width == 1.0) lo = tpk;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > cut ? lo : hi) = mid;
  }
  const double upper = hi;

  int panels = 8;
  double prev = integrate_panels(f, 0.0, upper, panels, 20);
  for (;;) {
    panels *= 2;
    const double cur = integrate_panels(f, 0.0, upper, panels, 20);
    if (std::abs(cur - prev) <= 1e-15 * std::abs(cur) || panels >= 8192) {
      return std::exp(log_peak) * cur;
    }
    prev = cur;
  }
}

double gamma_fn(double x) { return std::tgamma(x); }

double log_gamma(double x) { return std::lgamma(x); }

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::round(x)) return 0.0;
  if (x < 0.5) {
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    return std::sin(std::numbers::pi * x) * std::tgamma(1.0 - x) / std::numbers::pi;
  }
  if (x > 170.0) return std::exp(-std::lgamma(x));
  return 1.0 / std::tgamma(x);
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::invalid_argument("digamma requires x > 0");
  double r = 0.0;
  while (x < 10.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  const double x2 = 1.0 / (x * x);
  const double series =
      x2 * (1.0 / 12 -
            x2 * (1.0 / 120 -
                  x2 * (1.0 / 252 -
                        x2 * (1.0 / 240 - x2 * (1.0 / 132 - x2 * (691.0 / 32760 - x2 / 12))))));
  return r + std::log(x) - 0.5 / x - series;
}

double digamma_int(int n) {
  if (n < 1) throw std::invalid_argument("digamma_int requires n >= 1");
  double h = 0.0;
  for (int m = n - 1; m >= 1; --m) h += 1.0 / m;
  return -kEulerGamma + h;
}

double log_pochhammer(double a, int m) {
  if (!(a > 0.0)) throw std::invalid_argument("log_pochhammer requires a > 0");
  if (m < 0) throw std::invalid_argument("log_pochhammer requires m >= 0");
  if (m == 0) return 0.0;
  if (m <= 32) {
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += std::log(a + i);
    return s;
  }
  return std::lgamma(a + m) - std::lgamma(a);
}

}  // namespace parafock
