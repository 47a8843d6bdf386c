#include "parafock/resolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "parafock/coherent.hpp"
#include "parafock/parallel.hpp"
#include "parafock/quadrature.hpp"
#include "parafock/specfun.hpp"

namespace parafock {

namespace {

constexpr int kGradedPanels = 60;

void check_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("p must exceed 1");
}

double order_of(MeasureKind kind, double nu) { return kind == MeasureKind::I ? nu - 1.0 : nu; }

// Measure at x = rho^2 given the K value.
double measure_from_k(double nu, double x, double k) { return 4.0 * std::pow(0.5 * x, nu) * k; }

void add_panel(QuadratureGrid& g, const GaussRule& rule, double lo, double hi) {
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    g.nodes.push_back(mid + half * rule.nodes[q]);
    g.weights.push_back(half * rule.weights[q]);
  }
}

}  // namespace

double measure(MeasureKind kind, double p, int j, double rho) {
  check_p(p);
  if (!(rho > 0.0)) throw std::invalid_argument("measure requires rho > 0");
  const double nu = p / 2.0 + j;
  const double x = rho * rho;
  return measure_from_k(nu, x, bessel_k(order_of(kind, nu), x).value);
}

double measure_integer_form(MeasureKind kind, int m, int j, double rho) {
  if (m < 1) throw std::invalid_argument("integer form needs p = 2m with m >= 1");
  if (!(rho > 0.0)) throw std::invalid_argument("measure requires rho > 0");
  const int order = kind == MeasureKind::I ? m + j - 1 : m + j;
  const double x = rho * rho;
  const double k = x <= 2.0 ? bessel_k_integer(order, x).value
                            : bessel_k_continued_fraction(order, x).value;
  return measure_from_k(m + j, x, k);
}

QuadratureGrid make_grid(double power, int points_per_panel) {
  if (!(power >= 0.0)) throw std::invalid_argument("make_grid: power must be nonnegative");
  const auto& rule = gauss_legendre(points_per_panel);
  QuadratureGrid g;
  for (int i = kGradedPanels - 1; i >= 0; --i)
    add_panel(g, rule, std::ldexp(1.0, -(i + 1)), std::ldexp(1.0, -i));

  const double target = std::log(1e-16) + std::lgamma(power + 1.0);
  double upper = std::max(2.0, std::ceil(power) + 1.0);
  while (power * std::log(upper) - upper > target && upper < kMaxBesselArgument) upper += 1.0;
  g.upper = upper;
  for (double lo = 1.0; lo < upper; lo += 1.0) add_panel(g, rule, lo, lo + 1.0);
  return g;
}

double stieltjes_closed_form(MeasureKind kind, double p, int j, int n) {
  check_p(p);
  if (n < 0) throw std::invalid_argument("moment index must be nonnegative");
  const double nu = p / 2.0 + j;
  if (kind == MeasureKind::I)
    return std::exp(2.0 * n * std::log(2.0) + std::lgamma(n + 1.0) + std::lgamma(nu + n));
  return std::exp((2.0 * n + 1.0) * std::log(2.0) + std::lgamma(n + 1.0) + std::lgamma(nu + n + 1.0));
}

MomentCheck stieltjes_moment_check(MeasureKind kind, double p, int j, int n) {
  check_p(p);
  if (n < 0 || n > 8) throw std::invalid_argument("moment index must lie in 0..8");
  const double nu = p / 2.0 + j;
  // rho d rho = dx / 2; kind I carries x^{2n}, kind II x^{2n+1}.
  const int xpow = kind == MeasureKind::I ? 2 * n : 2 * n + 1;
  const auto grid = make_grid(xpow + nu + 1.0);

  std::vector<double> f(grid.nodes.size());
  parallel_for(grid.nodes.size(), [&](std::size_t i) {
    const double x = grid.nodes[i];
    f[i] = measure_from_k(nu, x, bessel_k(order_of(kind, nu), x).value);
  });

  MomentCheck out;
  out.min_measure = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.min_measure = std::min(out.min_measure, f[i]);
    sum += grid.weights[i] * 0.5 * std::pow(grid.nodes[i], xpow) * f[i];
  }
  out.quadrature = sum;
  out.closed_form = stieltjes_closed_form(kind, p, j, n);
  out.rel_err = std::abs(out.quadrature - out.closed_form) / std::abs(out.closed_form);
  return out;
}

double angular_average(int m, int n) noexcept { return m == n ? 1.0 : 0.0; }

double diagonal_via_moment(double p, int j, int n) {
  if (n < 0) throw std::invalid_argument("ladder index must be nonnegative");
  const auto kind = n % 2 == 0 ? MeasureKind::I : MeasureKind::II;
  const auto m = stieltjes_moment_check(kind, p, j, n / 2);
  return m.quadrature / m.closed_form;
}

ResolutionReport resolution_identity_check(double p, int j, int n_check, ResolutionMode mode) {
  check_p(p);
  if (j < 0) throw std::invalid_argument("j must be nonnegative");
  if (n_check < 0 || n_check > 16) throw std::invalid_argument("n_check must lie in 0..16");
  const double nu = p / 2.0 + j;
  const auto grid = make_grid(n_check + nu + 1.0);
  const std::size_t nodes = grid.nodes.size();
  const std::size_t dim = static_cast<std::size_t>(n_check) + 1;

  // Radial integrand values per node and ladder index n (x = rho^2, alpha = rho).
  std::vector<double> integrand(nodes * dim);
  std::vector<double> min_f(nodes);
  parallel_for(nodes, [&](std::size_t i) {
    const double x = grid.nodes[i];
    const Complex alpha = std::sqrt(x);
    const double km1 = bessel_k(nu - 1.0, x).value;
    const double k0 = bessel_k(nu, x).value;
    min_f[i] = std::min(measure_from_k(nu, x, km1), measure_from_k(nu, x, k0));
    if (mode == ResolutionMode::OffDiagonal) {
      // x (I_{nu-1} + I_nu) [(K_{nu-1} + K_nu) |psi><psi| + (K_{nu-1} - K_nu) |psi><psi(-alpha)|]
      // on normalized states; <n|psi><psi(-alpha)|n> = (-1)^n |a_n|^2 / N.
      const double ipair = bessel_i(nu - 1.0, x).value + bessel_i(nu, x).value;
      const double nrm = coherent_norm(p, j, alpha);
      for (std::size_t n = 0; n < dim; ++n) {
        const double an2 = std::norm(coherent_coefficient(p, j, alpha, static_cast<int>(n)));
        const double sign = n % 2 == 0 ? 1.0 : -1.0;
        integrand[i * dim + n] = x * ipair * ((km1 + k0) + sign * (km1 - k0)) * an2 / nrm;
      }
    } else {
      // Measure rho d rho d theta / pi = 2 x (dx / 2) (d theta / 2 pi).
      const double ip = bessel_i(nu - 1.0, x).value;
      const double im = bessel_i(nu, x).value;
      const double mass_p = cat_mass(p, j, alpha, CatSign::Plus);
      const double mass_m = cat_mass(p, j, alpha, CatSign::Minus);
      for (std::size_t n = 0; n < dim; ++n) {
        const double an2 = std::norm(coherent_coefficient(p, j, alpha, static_cast<int>(n)));
        integrand[i * dim + n] =
            n % 2 == 0 ? 2.0 * x * ip * km1 * an2 / mass_p : 2.0 * x * im * k0 * an2 / mass_m;
      }
    }
  });

  ResolutionReport r;
  r.p = p;
  r.j = j;
  r.n_check = n_check;
  r.mode = mode;
  r.nodes = nodes;
  r.min_measure = *std::min_element(min_f.begin(), min_f.end());
  r.entries.assign(dim, std::vector<double>(dim, 0.0));
  for (std::size_t m = 0; m < dim; ++m) {
    for (std::size_t n = 0; n < dim; ++n) {
      const double ang = angular_average(static_cast<int>(m), static_cast<int>(n));
      if (ang == 0.0) continue;  // the radial factor is never needed
      double s = 0.0;
      for (std::size_t i = 0; i < nodes; ++i) s += grid.weights[i] * 0.5 * integrand[i * dim + n];
      r.entries[m][n] = ang * s;
    }
  }
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t n = 0; n < dim; ++n)
      r.max_abs_deviation =
          std::max(r.max_abs_deviation, std::abs(r.entries[m][n] - (m == n ? 1.0 : 0.0)));
  return r;
}

}  // namespace parafock
