#include <doctest.h>

#include <cmath>

#include "../reference_values.hpp"
#include "helpers.hpp"
#include "parafock/algebra.hpp"
#include "parafock/coherent.hpp"
#include "parafock/zeromodes.hpp"

using namespace parafock;
using testing_util::rel_err;

TEST_CASE("alpha = 0 gives the zero mode") {
  const auto s = build_coherent(2.5, 1, 2, {0.0, 0.0});
  CHECK(s.coeffs[0] == Complex(1.0));
  for (std::size_t n = 1; n < s.coeffs.size(); ++n) CHECK(s.coeffs[n] == Complex(0.0));
  CHECK(coherent_norm(2.5, 1, 0.0) == 1.0);
}

TEST_CASE("norms against mpmath reference") {
  for (const auto& r : ref::coherent_norm) {
    const Complex a(r.ar, r.ai);
    CAPTURE(r.p);
    CAPTURE(r.j);
    CAPTURE(a);
    CHECK(rel_err(coherent_norm(r.p, r.j, a), r.value) <= 1e-13);
    CHECK(rel_err(coherent_norm_series(r.p, r.j, a), r.value) <= 1e-13);
    const auto s = build_coherent(r.p, r.j, r.j, a);
    CHECK(std::abs(s.norm_squared() - r.value) <= s.tail_bound + 1e-14 * r.value);
  }
}

TEST_CASE("overlaps against mpmath reference and their symmetries") {
  for (const auto& r : ref::coherent_overlap) {
    const Complex ap(r.apr, r.api), a(r.ar, r.ai);
    const auto got = coherent_overlap(r.p, r.j, ap, a);
    CHECK(rel_err(got, Complex(r.re, r.im)) <= 1e-13);
    CHECK(rel_err(coherent_overlap(r.p, r.j, a, ap), std::conj(got)) <= 1e-14);
    CHECK(std::abs(coherent_overlap(r.p, r.j, a, a) - 1.0) <= 1e-14);
    const double anti = antipodal_overlap(r.p, r.j, a);
    CHECK(std::abs(coherent_overlap(r.p, r.j, -a, a) - anti) <= 1e-13);
  }
}

TEST_CASE("ladder coefficients satisfy the eigen recursion") {
  const double p = 1.9;
  const Complex a(0.8, -1.3);
  for (int j = 0; j <= 3; ++j)
    for (int n = 0; n < 30; ++n) {
      const auto lhs = coherent_coefficient(p, j, a, n + 1) * ladder_raise_factor(p, j, n);
      CHECK(rel_err(lhs, a * coherent_coefficient(p, j, a, n)) <= 1e-13);
    }
}

TEST_CASE("truncation: the residual is exactly the clipped rung") {
  for (double p : {1.3, 2.0, 4.7})
    for (int j : {0, 2})
      for (double r : {0.3, 2.0, 4.0})
        for (int nmax : {20, 40}) {
          const Complex a = std::polar(r, 0.7);
          const auto s = build_coherent(p, j, j + 1, a, nmax);
          const double want = std::abs(a) * std::abs(s.coeffs.back());
          const double psi = std::sqrt(s.norm_squared());
          CHECK(std::abs(eigen_residual(s) - want) <= 1e-14 * psi);
        }
}

TEST_CASE("matrix engine confirms the ladder residual") {
  const double p = 2.5;
  const FockBasis b(p, 30);
  for (double r : {0.5, 1.5}) {
    const auto s = build_coherent(p, 1, 2, std::polar(r, -0.4), 14);
    const double psi = std::sqrt(s.norm_squared());
    CHECK(std::abs(eigen_residual_matrix(s, b) - eigen_residual(s)) <= 1e-13 * psi);
    const auto v = s.to_fock_vector(b);
    CHECK(rel_err(v.norm() * v.norm(), s.norm_squared()) <= 1e-13);
  }
}

TEST_CASE("default truncation and tails") {
  const auto n = default_nmax(2.5, 0, {1.0, 0.0});
  CHECK(n % 2 == 0);
  CHECK(n >= 4);
  CHECK(n <= 200);
  CHECK(default_nmax(2.5, 0, {0.0, 0.0}) == 4);
  CHECK_THROWS(build_coherent(2.5, 0, 0, {30.0, 0.0}, 10));
  const auto s = build_coherent(2.5, 0, 0, {1.0, 0.0}, n, true);
  CHECK(s.normalized);
  CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-14);
}

TEST_CASE("cat states") {
  const double p = 2.2;
  for (int j : {0, 1}) {
    const Complex a(1.1, 0.6);
    const auto s = build_coherent(p, j, j, a);
    const auto plus = cat_state(s, CatSign::Plus);
    const auto minus = cat_state(s, CatSign::Minus);
    CHECK(std::abs(plus.norm_squared() - 1.0) <= 1e-12);
    CHECK(std::abs(minus.norm_squared() - 1.0) <= 1e-12);
    Complex ov{};
    for (std::size_t n = 0; n < plus.coeffs.size(); ++n) ov += std::conj(plus.coeffs[n]) * minus.coeffs[n];
    CHECK(ov == Complex(0.0));
    for (std::size_t n = 1; n < plus.coeffs.size(); n += 2) CHECK(plus.coeffs[n] == Complex(0.0));
    const auto closed = cat_state_closed_form(p, j, j, a, CatSign::Minus, s.nmax());
    for (std::size_t n = 0; n < closed.coeffs.size(); ++n)
      CHECK(std::abs(closed.coeffs[n] - minus.coeffs[n]) <= 1e-13);
    CHECK(rel_err(cat_mass(p, j, a, CatSign::Plus) + cat_mass(p, j, a, CatSign::Minus), coherent_norm(p, j, a)) <=
          1e-14);
  }
  CHECK_THROWS(cat_state(build_coherent(2.2, 0, 0, {0.0, 0.0}), CatSign::Minus));
}

TEST_CASE("b2 matrix elements: closed forms against the matrix engine") {
  const int nmax = 30;
  const FockBasis basis(2.5, 4 + 4 + nmax);
  for (int j = 0; j <= 2; ++j)
    for (int k = std::max(1, j); k <= 4; ++k)
      for (Complex a : {Complex(0.3, 0.0), Complex(0.0, 0.7), Complex(1.0, 0.5)})
        for (Complex ap : {Complex(0.3, 0.0), Complex(1.0, 0.5)})
          for (int jp = std::max(0, j - 2); jp <= j + 2; ++jp) {
            const auto closed = b2_element(2.5, jp, ap, j, k, a);
            const auto orc = b2_element_oracle(basis, jp, ap, j, k, a, nmax);
            CAPTURE(j);
            CAPTURE(k);
            CAPTURE(jp);
            CHECK(std::abs(closed - orc.value) <= 1e-8 + orc.error_budget);
            if (jp < j - 1 || jp > j + 1) CHECK(closed == Complex(0.0));
          }
}

TEST_CASE("b2 matrix elements: special values") {
  // alpha = alpha' = 0, jp = j reduces to a single zero-mode element.
  const double p = 3.3;
  for (int j = 0; j <= 2; ++j)
    for (int k = std::max(1, j); k <= 4; ++k) {
      const int d = k - j;
      const double factor = j == 0 ? 1.0 : (p - 2) / (p - 2 + 2 * j);
      const double want = factor * std::sqrt(d + (d % 2) * (p - 1 + 2 * j));
      CHECK(b2_element(p, j, 0.0, j, k, 0.0).real() == doctest::Approx(want).epsilon(1e-13));
    }
  // At p = 2 the diagonal element vanishes once j >= 1; at j = 0 the limit is finite.
  CHECK(std::abs(b2_element(2.0, 1, {0.4, 0.1}, 1, 3, {0.7, -0.2})) == 0.0);
  CHECK(b2_element(2.0, 0, 0.0, 0, 1, 0.0).real() == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS(b2_element(2.5, 0, 0.0, 0, 0, 0.0));
}

TEST_CASE("(b2)^2 scalars on coherent states equal the zero-mode shifts") {
  for (int j = 0; j <= 2; ++j)
    for (int k = j; k <= 6; ++k)
      for (auto dir : {ShiftDirection::Lower, ShiftDirection::Raise})
        CHECK(b2sq_on_coherent(1.7, j, k, dir) == b2sq_shift(j, k, 1.7, dir));
}

TEST_CASE("bicoherent prefactors follow the ratio law") {
  const double p = 2.4;
  const Complex a(0.5, 0.5), beta(0.9, -0.4);
  for (int j = 0; j <= 2; ++j) {
    const auto s = bicoherent(p, j, j, a, beta, 10, 20);
    for (int k = 1; k <= 10; ++k) {
      const double f = std::sqrt(2.0 * k * (p + 2 * j + 2 * k - 2));
      CHECK(rel_err(s.prefactors[k] * f, beta * s.prefactors[k - 1]) <= 1e-13);
    }
    const auto s1 = bicoherent(p, j, j + 1, a, beta, 10, 20);
    for (int k = 1; k <= 10; ++k) {
      const double f = std::sqrt(2.0 * k * (p + 2 * (j + 1) + 2 * k - 2));
      CHECK(rel_err(s1.prefactors[k] * f, beta * s1.prefactors[k - 1]) <= 1e-12);
    }
  }
}

TEST_CASE("bicoherent residuals stay under the dropped-component bounds") {
  const int kmax = 12, nmax = 16;
  const double p = 2.5;
  const FockBasis basis(p, 1 + 2 * kmax + 2 + nmax);
  for (int j = 0; j <= 1; ++j)
    for (int l = j; l <= j + 1; ++l) {
      const auto s = bicoherent(p, j, l, {1.2, 0.3}, {-1.2, 0.6}, kmax, nmax);
      CHECK(s.norm > 0.0);
      CHECK(s.b1_residual <= s.b1_bound * (1 + 1e-10) + 1e-13);
      CHECK(s.b2sq_residual <= s.b2sq_bound * (1 + 1e-10) + 1e-13);
      const auto m = bicoherent_matrix_residuals(s, basis);
      CHECK(rel_err(m.norm, s.norm) <= 1e-12);
      CHECK(m.b1 <= s.b1_bound * (1 + 1e-10) + 1e-13);
      CHECK(m.b2sq <= s.b2sq_bound * (1 + 1e-10) + 1e-13);
    }
  CHECK_THROWS(bicoherent(p, 1, 3, 0.5, 0.5, 12));
  CHECK_THROWS(bicoherent(p, 0, 0, 0.5, 0.5, 1));
}

TEST_CASE("bicoherent at beta = 0") {
  const auto s = bicoherent(2.5, 0, 1, {0.4, 0.0}, {0.0, 0.0}, 4, 20);
  CHECK(s.prefactors[0] != Complex(0.0));
  for (int k = 1; k <= 4; ++k) CHECK(s.prefactors[k] == Complex(0.0));
  const auto z = bicoherent(2.5, 2, 2, {0.4, 0.0}, {0.0, 0.0}, 4, 20);
  CHECK(z.norm == 0.0);
}
