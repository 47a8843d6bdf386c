#include <doctest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "parafock/fockspace.hpp"

using namespace parafock;

TEST_CASE("enumeration matches hand counts") {
  CHECK(FockBasis(3.0, 0).size() == 1);
  const FockBasis b1(3.0, 1);
  REQUIRE(b1.size() == 4);
  CHECK(b1[0] == GZPattern{0, 0, 0});
  CHECK(b1[1] == GZPattern{1, 0, 0});
  CHECK(b1[2] == GZPattern{1, 0, 1});
  CHECK(b1[3] == GZPattern{1, 1, 1});
  CHECK(FockBasis(2.5, 2).size() == 10);
}

TEST_CASE("basis_size agrees with enumeration and all patterns are valid and distinct") {
  for (int n = 0; n <= 12; ++n) {
    const FockBasis b(1.7, n);
    CHECK(b.size() == basis_size(n));
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& m : b.patterns()) {
      CHECK(m.valid());
      CHECK(m.m12 <= n);
      seen.emplace(m.m12, m.m22, m.m11);
    }
    CHECK(seen.size() == b.size());
  }
}

TEST_CASE("ordering is by degree, then m12, then m11") {
  const FockBasis b(2.0, 7);
  for (std::size_t i = 1; i < b.size(); ++i) {
    const auto& a = b[i - 1];
    const auto& c = b[i];
    const auto ka = std::make_tuple(a.degree(), a.m12, a.m11);
    const auto kc = std::make_tuple(c.degree(), c.m12, c.m11);
    CHECK(ka < kc);
  }
}

TEST_CASE("find and index_of are inverse to indexing") {
  const FockBasis b(4.7, 6);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b[i]) == i);
  CHECK_FALSE(b.find(GZPattern{7, 0, 0}).has_value());
  CHECK_FALSE(b.contains(GZPattern{2, 3, 2}));
  CHECK_THROWS_AS(b.index_of(GZPattern{7, 0, 0}), std::out_of_range);
}

TEST_CASE("weights") {
  const auto w0 = weight_of({0, 0, 0}, 2.6);
  CHECK(w0.w1 == doctest::Approx(1.3));
  CHECK(w0.w2 == doctest::Approx(1.3));
  const auto w1 = weight_of({1, 0, 1}, 3.0);
  CHECK(w1.w1 == 2.5);
  CHECK(w1.w2 == 1.5);
  const auto w2 = weight_of({2, 1, 1}, 2.0);
  CHECK(w2.w1 == 2.0);
  CHECK(w2.w2 == 3.0);
}

TEST_CASE("parity indicators") {
  CHECK(parity_indicators(0).even == 1);
  CHECK(parity_indicators(0).odd == 0);
  CHECK(parity_indicators(7).odd == 1);
  CHECK(parity_indicators(-1).even == 0);
  CHECK(parity_indicators(-1).odd == 1);
  CHECK(parity_indicators(-4).even == 1);
}

TEST_CASE("weight blocks collect exactly the patterns of that weight") {
  const FockBasis b(2.5, 8);
  for (int j = 0; j <= 4; ++j)
    for (int k = 0; k <= 4; ++k) {
      const auto blk = b.weight_block(j, k);
      for (auto i : blk) {
        const auto w = weight_of(b[i], 2.5);
        CHECK(w.w1 == doctest::Approx(1.25 + j));
        CHECK(w.w2 == doctest::Approx(1.25 + k));
      }
      std::size_t count = 0;
      for (const auto& m : b.patterns())
        if (m.m11 == j && m.m12 + m.m22 - m.m11 == k) ++count;
      CHECK(blk.size() == count);
    }
}

TEST_CASE("interior patterns are those of degree at most cutoff - depth") {
  const FockBasis b(2.5, 8);
  for (int depth : {0, 2, 3}) {
    const auto in = b.interior(depth);
    std::size_t count = 0;
    for (const auto& m : b.patterns()) count += m.degree() <= 8 - depth ? 1 : 0;
    CHECK(in.size() == count);
    for (auto i : in) CHECK(b[i].m12 <= 8 - depth);
  }
  CHECK(b.interior(3).size() < b.interior(0).size());
}

TEST_CASE("invalid construction") {
  CHECK_THROWS_AS(FockBasis(1.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(0.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(FockBasis(2.0, -1), std::invalid_argument);
}

TEST_CASE("FockVector arithmetic") {
  const FockBasis b(2.0, 2);
  FockVector u(b), v(b);
  u[0] = {3.0, 0.0};
  v[0] = {0.0, 1.0};
  v[1] = {4.0, 0.0};
  CHECK(u.norm() == 3.0);
  CHECK((u + v).norm() == doctest::Approx(std::sqrt(10.0 + 16.0)));
  CHECK(u.dot(v) == std::complex<double>(0.0, 3.0));
  const FockBasis other(2.0, 3);
  FockVector w(other);
  CHECK_THROWS(u += w);
}
