#pragma once

#include <cstddef>
#include <vector>

#include "parafock/fockspace.hpp"

namespace parafock {

/// Coefficients c_0..c_j of the b1^- zero mode zeta_jk on the patterns
/// |k+i, j-i; j). Evaluated in log space with the sign tracked separately;
/// c_0 > 0 fixes the global phase. Throws std::invalid_argument unless
/// 0 <= j <= k and p > 1.
std::vector<double> zero_mode_coeffs(int j, int k, double p);

/// zeta_jk as a vector of the truncated basis (requires j + k <= cutoff).
FockVector zero_mode_vector(const FockBasis& basis, int j, int k);

struct KernelOracle {
  int dimension = 0;
  /// Basis indices of the weight-(j, k) block the null vectors live on.
  std::vector<std::size_t> block;
  /// Orthonormal null vectors of b1^- restricted to the block.
  std::vector<std::vector<double>> vectors;
};

/// Brute-force null space of b1^- on the weight-(p/2+j, p/2+k) block by a
/// dense SVD of the (weight (j-1, k)) x (weight (j, k)) restriction.
KernelOracle kernel_oracle(const FockBasis& basis, int j, int k);

/// sqrt(2^n ((n - O_n)/2)! (p/2 + j)_{(n + O_n)/2}), the norm of (b1^+)^n zeta_jk.
double ladder_normalization(double p, int j, int n);

/// b1^+ |zeta_jk; n> = ladder_raise_factor(p, j, n) |zeta_jk; n+1>, and the
/// same factor for b1^- |zeta_jk; n+1>.
double ladder_raise_factor(double p, int j, int n) noexcept;

/// |zeta_jk; n>, the normalized n-th b1^+ raising of zeta_jk
/// (requires j + k + n <= cutoff).
FockVector ladder_state(const FockBasis& basis, int j, int k, int n);

enum class ShiftDirection { Lower, Raise };

/// (b2^-)^2 zeta_jk = s zeta_{j,k-2} (Lower) or (b2^+)^2 zeta_jk = s zeta_{j,k+2}
/// (Raise). Lower returns 0 when k - 2 < j (no target zero mode).
double b2sq_shift(int j, int k, double p, ShiftDirection dir);

}  // namespace parafock
