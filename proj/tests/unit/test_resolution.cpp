#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../reference_values.hpp"
#include "helpers.hpp"
#include "parafock/resolution.hpp"
#include "parafock/specfun.hpp"

using namespace parafock;
using testing_util::rel_err;

TEST_CASE("measures against mpmath reference") {
  for (const auto& r : ref::measure) {
    const auto kind = r.kind_one ? MeasureKind::I : MeasureKind::II;
    CAPTURE(r.p);
    CAPTURE(r.j);
    CAPTURE(r.rho);
    const double got = measure(kind, r.p, r.j, r.rho);
    CHECK(got > 0.0);
    CHECK(rel_err(got, r.value) <= 1e-12);
  }
  CHECK_THROWS(measure(MeasureKind::I, 2.5, 0, 0.0));
  CHECK_THROWS(measure(MeasureKind::I, 1.0, 0, 1.0));
}

TEST_CASE("half-integer measure has an elementary form") {
  for (double rho : {0.1, 0.7, 1.9, 3.0}) {
    const double x = rho * rho;
    const double want = 4.0 * std::pow(x / 2, 1.5) * std::sqrt(std::numbers::pi / (2 * x)) * std::exp(-x);
    CHECK(rel_err(measure(MeasureKind::I, 3.0, 0, rho), want) <= 1e-13);
  }
}

TEST_CASE("even p: integer-order forms agree with the generic form") {
  for (int m : {1, 2})
    for (int j : {0, 1, 3})
      for (double rho : {0.05, 0.5, 1.2, 1.5, 3.0, 5.0}) {
        for (auto kind : {MeasureKind::I, MeasureKind::II})
          CHECK(rel_err(measure_integer_form(kind, m, j, rho), measure(kind, 2.0 * m, j, rho)) <= 1e-13);
      }
}

TEST_CASE("positivity on a log-spaced grid") {
  for (double p : {1.3, 2.0, 2.00001, 4.7})
    for (int j : {0, 3})
      for (double t = -3.0; t <= std::log10(6.0); t += 0.05)
        for (auto kind : {MeasureKind::I, MeasureKind::II}) CHECK(measure(kind, p, j, std::pow(10.0, t)) > 0.0);
}

TEST_CASE("moment closed forms") {
  CHECK(stieltjes_closed_form(MeasureKind::I, 3.0, 0, 0) == doctest::Approx(std::sqrt(std::numbers::pi) / 2));
  CHECK(stieltjes_closed_form(MeasureKind::II, 2.5, 1, 0) == doctest::Approx(2 * std::tgamma(3.25)));
  CHECK(stieltjes_closed_form(MeasureKind::I, 2.5, 1, 3) == doctest::Approx(64 * 6 * std::tgamma(5.25)));
}

TEST_CASE("moments: quadrature against mpmath quadrature") {
  for (const auto& r : ref::moment) {
    const auto kind = r.kind_one ? MeasureKind::I : MeasureKind::II;
    CAPTURE(r.p);
    CAPTURE(r.j);
    CAPTURE(r.n);
    const auto m = stieltjes_moment_check(kind, r.p, r.j, r.n);
    CHECK(rel_err(m.quadrature, r.value) <= 1e-10);
    CHECK(rel_err(m.closed_form, r.value) <= 1e-13);
    CHECK(m.min_measure > 0.0);
  }
}

TEST_CASE("moments across the seam at p = 2") {
  for (double p : {2.0 - 1e-5, 2.0, 2.0 + 1e-5})
    for (int n = 0; n <= 5; ++n)
      for (auto kind : {MeasureKind::I, MeasureKind::II}) CHECK(stieltjes_moment_check(kind, p, 1, n).rel_err <= 1e-8);
  CHECK_THROWS(stieltjes_moment_check(MeasureKind::I, 2.5, 0, 9));
}

TEST_CASE("grid reaches far enough for the decay criterion") {
  const auto g = make_grid(12.0);
  CHECK(g.upper >= 13.0);
  CHECK(12.0 * std::log(g.upper) - g.upper <= std::log(1e-16) + std::lgamma(13.0));
  double s = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) s += g.weights[i];
  CHECK(s == doctest::Approx(g.upper).epsilon(1e-14));
}

TEST_CASE("resolution of identity in both modes") {
  for (double p : {1.3, 2.5})
    for (int j : {0, 2}) {
      const auto off = resolution_identity_check(p, j, 10, ResolutionMode::OffDiagonal);
      const auto cat = resolution_identity_check(p, j, 10, ResolutionMode::Cat);
      CHECK(off.max_abs_deviation <= 1e-6);
      CHECK(cat.max_abs_deviation <= 1e-6);
      CHECK(off.min_measure > 0.0);
      for (int m = 0; m <= 10; ++m)
        for (int n = 0; n <= 10; ++n) {
          CHECK(std::abs(off.entries[m][n] - cat.entries[m][n]) <= 1e-10);
          if (m != n) CHECK(off.entries[m][n] == 0.0);
        }
      for (int n = 0; n <= 10; ++n)
        CHECK(std::abs(off.entries[n][n] - diagonal_via_moment(p, j, n)) <= 1e-10);
    }
  CHECK(angular_average(3, 3) == 1.0);
  CHECK(angular_average(1, 3) == 0.0);
  CHECK_THROWS(resolution_identity_check(2.5, 0, 17, ResolutionMode::Cat));
}
