#pragma once

#include <optional>
#include <vector>

#include "parafock/fockspace.hpp"
#include "parafock/zeromodes.hpp"

namespace parafock {

/// A b1^- coherent state on the ladder |zeta_jk; n>, n = 0..nmax.
///
/// Coefficients are stored on the ladder basis; to_fock_vector() expands
/// them on a truncated Gelfand-Zetlin basis for the matrix-engine checks.
struct CoherentState {
  double p = 2.0;
  int j = 0;
  int k = 0;
  Complex alpha{};
  std::vector<Complex> coeffs;
  /// Bound on sum_{n > nmax} |a_n|^2 (same scaling as coeffs).
  double tail_bound = 0.0;
  bool normalized = false;

  int nmax() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double norm_squared() const noexcept;
  /// Requires j + k + nmax <= basis.cutoff().
  FockVector to_fock_vector(const FockBasis& basis) const;
};

/// Unnormalized a_n(alpha) = alpha^n / ladder_normalization(p, j, n).
Complex coherent_coefficient(double p, int j, Complex alpha, int n);

/// Smallest even N >= 4 with |a_N| < 1e-16 max_{n<=N} |a_n|, at most 200.
int default_nmax(double p, int j, Complex alpha);

/// Throws std::invalid_argument for p <= 1, labels outside 0 <= j <= k,
/// nmax < 4, or an nmax that has not reached the decaying regime
/// (|alpha| >= sqrt(nmax + 1)); the caller can retry with a larger nmax.
CoherentState build_coherent(double p, int j, int k, Complex alpha,
                             std::optional<int> nmax = std::nullopt, bool normalized = false);

/// ||b1^- psi - alpha psi|| evaluated on the ladder, b1^- |n+1> = s_n |n>.
double eigen_residual(const CoherentState& s);
/// The same residual with the b1^- matrix on a truncated basis.
double eigen_residual_matrix(const CoherentState& s, const FockBasis& basis);

/// Squared norm of the unnormalized state, Bessel form:
/// (x/2)^{1-nu} Gamma(nu) (I_{nu-1}(x) + I_nu(x)), x = |alpha|^2, nu = p/2 + j.
double coherent_norm(double p, int j, Complex alpha);
/// Same quantity as 0F1(;nu;x^2/4) + x/(2 nu) 0F1(;nu+1;x^2/4).
double coherent_norm_series(double p, int j, Complex alpha);

/// <psi(alpha')|psi(alpha)> for normalized states.
Complex coherent_overlap(double p, int j, Complex alpha_prime, Complex alpha);
/// (I_{nu-1}(x) - I_nu(x)) / (I_{nu-1}(x) + I_nu(x)), the overlap at alpha' = -alpha.
double antipodal_overlap(double p, int j, Complex alpha);

enum class CatSign { Plus, Minus };

/// Squared norm of the even (Plus) or odd (Minus) half of the unnormalized
/// state: Gamma(nu) (x/2)^{1-nu} I_{nu-1}(x), resp. the same with I_nu.
double cat_mass(double p, int j, Complex alpha, CatSign sign);

/// psi(alpha) +- psi(-alpha), normalized numerically. Minus at alpha = 0 is
/// the zero vector and is rejected.
CoherentState cat_state(const CoherentState& s, CatSign sign);
/// The same state from its closed form, normalized with I_{nu-1} (plus) or
/// I_nu (minus).
CoherentState cat_state_closed_form(double p, int j, int k, Complex alpha, CatSign sign,
                                    std::optional<int> nmax = std::nullopt);

/// <psi~_{jp,k-1}(alpha')| b2^- |psi~_{jk}(alpha)> for unnormalized states.
/// Nonzero only for jp in {j-1, j, j+1}; requires 0 <= j <= k, k >= 1.
Complex b2_element(double p, int jp, Complex alpha_prime, int j, int k, Complex alpha);

struct OracleValue {
  Complex value{};
  double error_budget = 0.0;
};

/// The matrix element above from assembled Fock vectors and the b2^- matrix.
/// Requires max(j, jp) + k + nmax <= basis.cutoff().
OracleValue b2_element_oracle(const FockBasis& basis, int jp, Complex alpha_prime, int j, int k,
                              Complex alpha, int nmax);

/// (b2^-)^2 and (b2^+)^2 commute with b1^+, so they act on psi~_jk(alpha)
/// with the zero-mode scalars.
double b2sq_on_coherent(double p, int j, int k, ShiftDirection dir);

/// Simultaneous eigenvector of b1^- and (b2^-)^2:
/// Psi = sum_{k=0}^{kmax} c_k psi~_{j,2k+l}(alpha),
/// c_k = beta^{k + floor(l/2)} / sqrt((2k)!! prod_{i<k} (p + 2l + 2i)).
struct BicoherentState {
  double p = 2.0;
  int j = 0;
  int l = 0;
  Complex alpha{};
  Complex beta{};
  int kmax = 0;
  std::vector<Complex> prefactors;  // c_0..c_kmax
  /// Ladder coefficients shared by every component (its k label is l).
  CoherentState ladder;

  double norm = 0.0;
  /// Residuals relative to ||Psi|| and the bounds they must respect.
  double b1_residual = 0.0;
  double b1_bound = 0.0;
  double b2sq_residual = 0.0;
  double b2sq_bound = 0.0;
};

/// Throws for l outside {j, j+1}, kmax < 2, or p <= 1.
BicoherentState bicoherent(double p, int j, int l, Complex alpha, Complex beta, int kmax,
                           std::optional<int> nmax = std::nullopt);

/// Requires j + 2 kmax + l + nmax <= basis.cutoff().
FockVector bicoherent_to_fock(const BicoherentState& s, const FockBasis& basis);

struct BicoherentResiduals {
  double norm = 0.0;
  double b1 = 0.0;    // ||b1^- Psi - alpha Psi|| / ||Psi||
  double b2sq = 0.0;  // ||(b2^-)^2 Psi - beta Psi|| / ||Psi||
};
BicoherentResiduals bicoherent_matrix_residuals(const BicoherentState& s, const FockBasis& basis);

}  // namespace parafock
