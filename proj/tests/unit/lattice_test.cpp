#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "veronese/lattice.hpp"

using namespace veronese;

namespace {

IntMatrix diag_of(const SnfResult& s, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < s.d.size(); ++i) d(i, i) = s.d[i];
  return d;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

IntVector iv(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("smith normal form of small matrices") {
  SUBCASE("already diagonal") {
    const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 2}});
    CHECK(s.d == ints({2, 2}));
  }
  SUBCASE("zero matrix") {
    const auto s = smith_normal_form(IntMatrix(2, 2));
    CHECK(s.d == ints({0, 0}));
    CHECK(s.rank() == 0);
  }
  SUBCASE("2e1, 2e2, 2e3, e1+e2") {
    // index [Z^3 : L] = 4, so the invariant factors are 1, 2, 2
    const IntMatrix a{{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 0}};
    const auto s = smith_normal_form(a);
    CHECK(s.d == ints({1, 2, 2}));
  }
  SUBCASE("rank deficient") {
    const auto s = smith_normal_form(IntMatrix{{1, 2, 3}, {2, 4, 6}});
    CHECK(s.d == ints({1, 0}));
    CHECK(s.rank() == 1);
  }
}

TEST_CASE("smith normal form reconstructs random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 5;
    const IntMatrix a = random_matrix(rng, rows, cols, -6, 6);
    const auto s = smith_normal_form(a);
    const IntMatrix d = diag_of(s, rows, cols);
    CHECK(s.u * a * s.v == d);
    CHECK(s.u_inv * d * s.v_inv == a);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    CHECK(s.u * s.u_inv == IntMatrix::identity(rows));
    CHECK(s.v * s.v_inv == IntMatrix::identity(cols));
    for (std::size_t i = 0; i + 1 < s.d.size(); ++i) {
      CHECK(s.d[i] >= 0);
      if (s.d[i + 1] != 0) CHECK(s.d[i + 1] % s.d[i] == 0);
    }
  }
}

TEST_CASE("invariant factors ignore row and column order") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 2 + rng() % 3, cols = 2 + rng() % 3;
    const IntMatrix a = random_matrix(rng, rows, cols, -9, 9);
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    IntMatrix b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b(i, j) = a(rp[i], cp[j]);
    CHECK(smith_normal_form(a).d == smith_normal_form(b).d);
  }
}

TEST_CASE("lattice membership") {
  const IntMatrix two{{2, 0}, {0, 2}};
  CHECK(lattice_contains(two, iv({2, 2})));
  CHECK_FALSE(lattice_contains(two, iv({1, 1})));

  const std::vector<std::vector<long>> cols = {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}};
  const IntMatrix b = IntMatrix::from_columns(3, cols);
  CHECK(lattice_contains(b, iv({0, 1, 1})));
  const auto coords = lattice_coordinates(b, iv({0, 1, 1}));
  REQUIRE(coords);
  CHECK(b * *coords == iv({0, 1, 1}));
  CHECK_FALSE(lattice_contains(b, iv({0, 0, 1})));
}

TEST_CASE("minimal multiplier") {
  const IntMatrix two{{2, 0}, {0, 2}};
  CHECK(minimal_multiplier(two, iv({1, 1})) == Integer(2));
  CHECK(minimal_multiplier(IntMatrix::identity(2), iv({3, 5})) == Integer(1));
  CHECK(minimal_multiplier(two, iv({1, 0})) == Integer(2));
  CHECK(minimal_multiplier(two, iv({1, 3})) == Integer(2));
  // outside the rational span
  CHECK_FALSE(minimal_multiplier(IntMatrix{{1}, {0}}, iv({0, 1})));
  CHECK_THROWS(minimal_multiplier(two, iv({0, 0})));
}

TEST_CASE("minimal multiplier agrees with a search over d") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 2 + rng() % 2;
    const IntMatrix b = random_matrix(rng, rows, rows, -4, 4);
    if (determinant(b) == 0) continue;
    IntVector v(rows);
    for (auto& c : v) c = coord(rng);
    if (is_zero(v)) continue;
    const auto m = minimal_multiplier(b, v);
    REQUIRE(m);
    // search oracle; |det b| * v always lies in the lattice
    Integer brute = 0;
    for (long d = 1; d <= abs(determinant(b)); ++d) {
      IntVector dv = v;
      for (auto& c : dv) c *= d;
      if (lattice_contains(b, dv)) {
        brute = d;
        break;
      }
    }
    CHECK(*m == brute);
    for (long d = 1; d <= 12; ++d) {
      IntVector dv = v;
      for (auto& c : dv) c *= d;
      CHECK(lattice_contains(b, dv) == (Integer(d) % *m == 0));
    }
  }
}

TEST_CASE("lattice intersection") {
  // Z(2,0) + Z(0,2) meets Z(1,1) in Z(2,2)
  const IntMatrix a{{2, 0}, {0, 2}};
  const IntMatrix b{{1}, {1}};
  const IntMatrix l = lattice_intersection(a, b);
  REQUIRE(l.cols() == 1);
  IntVector g = l.column(0);
  if (g[0] < 0)
    for (auto& c : g) c = -c;
  CHECK(g == iv({2, 2}));

  CHECK(lattice_intersection(IntMatrix{{1}, {0}}, IntMatrix{{0}, {1}}).cols() == 0);
  CHECK(lattice_rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(content(iv({6, -4, 0})) == 2);
  CHECK(content(iv({0, 0})) == 0);
}
