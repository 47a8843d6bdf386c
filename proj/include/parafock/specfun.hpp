#pragma once

#include <complex>

namespace parafock {

/// Value of a truncated series together with a bound on what was dropped.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  double tail_bound = 0.0;
};

struct ComplexSeriesResult {
  std::complex<double> value{};
  int terms_used = 0;
  double tail_bound = 0.0;
};

/// Largest argument accepted by the Bessel routines.
inline constexpr double kMaxBesselArgument = 500.0;

/// 0F1(;a;x) = sum_k x^k / ((a)_k k!).
///
/// Summation stops once the next term is below 1e-17 of the running sum and
/// the term ratio has dropped to 1/2 or less; from there on the ratios keep
/// shrinking, so twice the first omitted term bounds the tail. Throws
/// std::invalid_argument when a lies within 1e-9 of a nonpositive integer.
SeriesResult hyp0f1(double a, double x);
ComplexSeriesResult hyp0f1(double a, std::complex<double> z);

/// The first `terms` terms of the 0F1 series, with the tail bound of the
/// next term when the ratio condition holds there (infinity otherwise).
SeriesResult hyp0f1_partial(double a, double x, int terms);

/// I_nu(x) for nu > -1, x >= 0 by its power series.
SeriesResult bessel_i(double nu, double x);
SeriesResult bessel_i_partial(double nu, double x, int terms);

/// I_nu(x) for any real order (x > 0); negative orders use 1/Gamma on the
/// nonpositive axis. Needed by the reflection form of K.
SeriesResult bessel_i_any_order(double nu, double x);

/// K_nu(x) for real nu and 0 < x <= kMaxBesselArgument; K_{-nu} = K_nu.
///
/// For x <= 2 the series forms are used: the reflection form
/// pi (I_{-nu} - I_nu) / (2 sin(nu pi)) when nu is more than 1e-6 away from
/// an integer, the integer-order series otherwise (plus a first-order
/// correction in the order offset). For x > 2 the Temme continued fraction
/// with upward recurrence in the order is used.
SeriesResult bessel_k(double nu, double x);

/// The individual routes, exposed for cross-validation.
SeriesResult bessel_k_reflection(double nu, double x);
SeriesResult bessel_k_integer(int n, double x);
SeriesResult bessel_k_continued_fraction(double nu, double x);

/// K_nu(2z) = int_0^inf exp(-2z cosh t) cosh(nu t) dt by panelled
/// Gauss-Legendre quadrature, truncated where the integrand falls below
/// 1e-18 of its peak. Independent of every series above.
double bessel_k_oracle(double nu, double z);

double gamma_fn(double x);
double log_gamma(double x);  // log |Gamma(x)|
/// 1/Gamma(x); exactly zero at nonpositive integers.
double reciprocal_gamma(double x);
/// psi(x) = Gamma'(x)/Gamma(x) for x > 0.
double digamma(double x);
/// psi(n) for integer n >= 1, as -gamma_E + H_{n-1}.
double digamma_int(int n);
/// log((a)_m) = log Gamma(a+m) - log Gamma(a), a > 0, m >= 0.
double log_pochhammer(double a, int m);

}  // namespace parafock
