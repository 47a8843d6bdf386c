#pragma once

#include <vector>

namespace parafock {

enum class MeasureKind { I, II };

/// F_I(rho) = 4 (rho^2/2)^{nu} K_{nu-1}(rho^2), F_II(rho) = 4 (rho^2/2)^{nu} K_nu(rho^2),
/// nu = p/2 + j. Throws for rho <= 0 or p <= 1.
double measure(MeasureKind kind, double p, int j, double rho);

/// The same measure at p = 2m evaluated with the integer-order K series
/// (valid while rho^2 <= 2, where that series is used).
double measure_integer_form(MeasureKind kind, int m, int j, double rho);

/// Gauss-Legendre nodes and weights on x = rho^2 in (0, upper].
///
/// The interval (0, 1] is split geometrically into [2^{-(i+1)}, 2^{-i}],
/// i < 60, which resolves the algebraic (and, at integer order, logarithmic)
/// behaviour of K near 0; [1, upper] uses unit panels.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  double upper = 0.0;
};

/// Grid for integrands bounded by x^power e^{-x}: upper is the first x past
/// the peak where x^power e^{-x} / Gamma(power + 1) < 1e-16.
QuadratureGrid make_grid(double power, int points_per_panel = 20);

/// Closed forms 4^n n! Gamma(nu+n) (kind I) and 2^{2n+1} n! Gamma(nu+n+1) (kind II).
double stieltjes_closed_form(MeasureKind kind, double p, int j, int n);

struct MomentCheck {
  double quadrature = 0.0;
  double closed_form = 0.0;
  double rel_err = 0.0;
  double min_measure = 0.0;  // smallest measure value over the nodes used
};

/// int_0^inf rho^{4n+1} F_I drho (kind I) or rho^{4n+3} F_II drho (kind II)
/// against its closed form; 0 <= n <= 8.
MomentCheck stieltjes_moment_check(MeasureKind kind, double p, int j, int n);

enum class ResolutionMode { OffDiagonal, Cat };

/// (1/2 pi) int_0^{2 pi} e^{i (m - n) theta} d theta.
double angular_average(int m, int n) noexcept;

/// Entry (n, n) of the decomposition written as the ratio of a single
/// Stieltjes moment quadrature to its closed form.
double diagonal_via_moment(double p, int j, int n);

struct ResolutionReport {
  double p = 0.0;
  int j = 0;
  int n_check = 0;
  ResolutionMode mode = ResolutionMode::OffDiagonal;
  /// entries[m][n] for 0 <= m, n <= n_check.
  std::vector<std::vector<double>> entries;
  double max_abs_deviation = 0.0;
  /// Smallest F_I / F_II value seen at any node.
  double min_measure = 0.0;
  std::size_t nodes = 0;
};

/// Matrix elements <zeta; m| (decomposition) |zeta; n> by radial quadrature
/// with the angular integral taken analytically. OffDiagonal integrates the
/// coherent projectors with the K_{nu-1} +- K_nu weights (measure
/// rho d rho d theta / 2 pi); Cat integrates the even/odd cat projectors
/// with I K weights (measure rho d rho d theta / pi). 0 <= n_check <= 16.
ResolutionReport resolution_identity_check(double p, int j, int n_check, ResolutionMode mode);

}  // namespace parafock
