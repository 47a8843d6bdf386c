#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "parafock/fockspace.hpp"
#include "parafock/sparse.hpp"

namespace parafock {

enum class Generator { B1Plus, B1Minus, B2Plus, B2Minus, H1, H2 };

inline constexpr Generator kAllGenerators[] = {Generator::B1Plus, Generator::B1Minus,
                                               Generator::B2Plus, Generator::B2Minus,
                                               Generator::H1,     Generator::H2};

/// "b1+", "b1-", "b2+", "b2-", "h1", "h2".
std::string_view to_string(Generator g) noexcept;
std::optional<Generator> parse_generator(std::string_view name) noexcept;

/// Odd generator b_mode^sign, mode in {1, 2}, sign in {+1, -1}.
Generator odd_generator(int mode, int sign);

struct StructureF {
  double f1 = 0.0;
  double f2 = 0.0;
};

/// f1, f2 of the Gelfand-Zetlin action; requires m12 >= m22 >= 0.
StructureF structure_f(int m12, int m22, double p);

/// Matrix of a generator on the truncated basis. Raising operators drop
/// targets beyond the cutoff and record the affected source columns in
/// boundary_rows(). Coefficients with a vanishing integer square-root
/// argument are left structurally absent.
SparseOperator build_generator(Generator g, const FockBasis& basis);

SparseOperator adjoint(const SparseOperator& a);

enum class BracketKind { Anti, Comm };

/// AB + BA (Anti) or AB - BA (Comm).
SparseOperator bracket(const SparseOperator& a, const SparseOperator& b, BracketKind kind);

struct TripleRelation {
  int j = 1, k = 1, l = 1;        // modes
  int xi = 1, eta = 1, eps = 1;   // signs
  double max_deviation = 0.0;
  bool passed = false;

  std::string label() const;
};

struct TripleReport {
  std::vector<TripleRelation> relations;
  double tolerance = 0.0;
  std::size_t interior_columns = 0;

  bool all_passed() const noexcept;
  double max_deviation() const noexcept;
};

/// Checks [{b_j^xi, b_k^eta}, b_l^eps] = (eps-xi) d_jl b_k^eta + (eps-eta) d_kl b_j^xi
/// for all 64 sign/mode choices, column by column on patterns of degree
/// <= cutoff - 3. Failures are reported, never thrown.
TripleReport verify_triple_relations(const FockBasis& basis, double tol);

/// T1 = b1^- b1^+ eigenvalue on (b1^+)^n |zeta>, zeta1 the h1-eigenvalue of zeta.
double t1_eigenvalue(double zeta1, int n) noexcept;

/// Coefficient of b1^- (b1^+)^n |zeta> = c (b1^+)^(n-1) |zeta>.
double b1_lowering_factor(double zeta1, int n) noexcept;

/// Applies T1^{-1} to a vector in the span of (b1^+)^n |zeta>, where zeta is a
/// b1^- zero mode with m11 = zero_mode_m11 (zeta1 = p/2 + zero_mode_m11). The
/// component with m11 = zero_mode_m11 + n is divided by t1_eigenvalue(zeta1, n).
/// Throws std::invalid_argument if v has weight below the zero mode.
FockVector t1_inverse_apply(const FockVector& v, int zero_mode_m11);

}  // namespace parafock
