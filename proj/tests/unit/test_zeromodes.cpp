#include <doctest.h>

#include <cmath>

#include "parafock/algebra.hpp"
#include "parafock/zeromodes.hpp"

using namespace parafock;

TEST_CASE("small zero modes") {
  CHECK(zero_mode_coeffs(0, 0, 2.5) == std::vector<double>{1.0});
  const auto c01 = zero_mode_coeffs(0, 1, 1.7);
  REQUIRE(c01.size() == 1);
  CHECK(c01[0] == doctest::Approx(1.0));
  CHECK_THROWS_AS(zero_mode_coeffs(2, 1, 2.5), std::invalid_argument);
  CHECK_THROWS_AS(zero_mode_coeffs(0, 1, 1.0), std::invalid_argument);
}

TEST_CASE("zero mode (1,1) at p=3 is the null vector of the restricted lowering matrix") {
  const FockBasis b(3.0, 4);
  const auto c = zero_mode_coeffs(1, 1, 3.0);
  REQUIRE(c.size() == 2);
  const auto ko = kernel_oracle(b, 1, 1);
  REQUIRE(ko.dimension == 1);
  const auto z = zero_mode_vector(b, 1, 1);
  double dot = 0.0;
  for (std::size_t i = 0; i < ko.block.size(); ++i) dot += ko.vectors[0][i] * z[ko.block[i]].real();
  CHECK(std::abs(dot) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("normalization, annihilation and kernel dimension on the full grid") {
  for (double p : {1.3, 2.0, 2.5, 3.0, 4.7}) {
    const FockBasis b(p, 20);
    const auto down = build_generator(Generator::B1Minus, b);
    for (int k = 0; k <= 10; ++k)
      for (int j = 0; j <= 10; ++j) {
        const auto ko = kernel_oracle(b, j, k);
        if (j > k) {
          CHECK(ko.dimension == 0);
          continue;
        }
        CHECK(ko.dimension == 1);
        const auto c = zero_mode_coeffs(j, k, p);
        double s = 0.0;
        for (double ci : c) s += ci * ci;
        CHECK(std::abs(s - 1.0) <= 1e-12);
        CHECK(c[0] > 0.0);
        const auto z = zero_mode_vector(b, j, k);
        CHECK(down.apply(z).norm() <= 1e-12);
      }
  }
}

TEST_CASE("kernel example (1,3) at p=2.5 is collinear with the closed form") {
  const FockBasis b(2.5, 8);
  const auto ko = kernel_oracle(b, 1, 3);
  REQUIRE(ko.dimension == 1);
  const auto z = zero_mode_vector(b, 1, 3);
  double dot = 0.0;
  for (std::size_t i = 0; i < ko.block.size(); ++i) dot += ko.vectors[0][i] * z[ko.block[i]].real();
  CHECK(std::abs(std::abs(dot) - 1.0) <= 1e-12);
  CHECK(kernel_oracle(b, 0, 0).dimension == 1);
  CHECK(kernel_oracle(b, 2, 1).dimension == 0);
}

TEST_CASE("ladder states are orthonormal and climb with the raise factor") {
  for (double p : {1.3, 2.0, 3.7}) {
    const FockBasis b(p, 12);
    const auto up = build_generator(Generator::B1Plus, b);
    const auto down = build_generator(Generator::B1Minus, b);
    const int j = 1, k = 2;
    CHECK(ladder_state(b, j, k, 0).dot(zero_mode_vector(b, j, k)).real() == doctest::Approx(1.0));
    for (int n = 0; n + j + k < 12; ++n) {
      const auto s = ladder_state(b, j, k, n);
      CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-13));
      if (n + j + k + 1 > 12) break;
      const auto s1 = ladder_state(b, j, k, n + 1);
      CHECK(std::abs(s.dot(s1)) <= 1e-14);
      auto d = up.apply(s);
      d -= ladder_raise_factor(p, j, n) * s1;
      CHECK(d.norm() <= 1e-12);
      auto e = down.apply(s1);
      e -= ladder_raise_factor(p, j, n) * s;
      CHECK(e.norm() <= 1e-12);
    }
  }
}

TEST_CASE("ladder normalization matches the product of raise factors") {
  for (double p : {1.3, 2.6}) {
    for (int j = 0; j <= 3; ++j) {
      double prod = 1.0;
      for (int n = 0; n <= 30; ++n) {
        CHECK(ladder_normalization(p, j, n) == doctest::Approx(prod).epsilon(1e-12));
        prod *= ladder_raise_factor(p, j, n);
      }
    }
  }
}

TEST_CASE("(b2-)^2 shifts on zero modes") {
  const double p = 2.3;
  CHECK(b2sq_shift(0, 2, p, ShiftDirection::Lower) == doctest::Approx(std::sqrt(2 * p)));
  CHECK(b2sq_shift(2, 3, p, ShiftDirection::Lower) == 0.0);
  const FockBasis b(p, 14);
  const auto m2 = build_generator(Generator::B2Minus, b);
  const auto p2 = build_generator(Generator::B2Plus, b);
  const auto low = m2 * m2;
  const auto high = p2 * p2;
  for (int j = 0; j <= 3; ++j)
    for (int k = j; k <= 8; ++k) {
      const auto z = zero_mode_vector(b, j, k);
      auto r = high.apply(z);
      r -= b2sq_shift(j, k, p, ShiftDirection::Raise) * zero_mode_vector(b, j, k + 2);
      CHECK(r.norm() <= 1e-12);
      auto l = low.apply(z);
      if (k - 2 >= j) l -= b2sq_shift(j, k, p, ShiftDirection::Lower) * zero_mode_vector(b, j, k - 2);
      CHECK(l.norm() <= 1e-12);
    }
}

TEST_CASE("preconditions on the cutoff") {
  const FockBasis b(2.5, 4);
  CHECK_THROWS(zero_mode_vector(b, 2, 3));
  CHECK_THROWS(ladder_state(b, 1, 2, 2));
  CHECK_NOTHROW(ladder_state(b, 1, 2, 1));
}
