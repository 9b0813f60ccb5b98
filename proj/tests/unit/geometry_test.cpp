#include <doctest.h>

#include <algorithm>
#include <random>

#include "veronese/geometry.hpp"
#include "veronese/sci.hpp"

using namespace veronese;

namespace {

using Points = std::vector<std::vector<Scalar>>;

std::vector<Scalar> random_u(std::mt19937& rng, unsigned n, Scalar r) {
  std::vector<Scalar> u(n);
  do {
    for (auto& c : u) c = rng() % r;
  } while (std::all_of(u.begin(), u.end(), [](Scalar c) { return c == 0; }));
  return u;
}

}  // namespace

TEST_CASE("rank over a prime field") {
  const PrimeField f5(5);
  CHECK(rank_mod({{1, 2}, {2, 4}}, f5) == 1);
  CHECK(rank_mod({{1, 2}, {3, 4}}, f5) == 2);
  CHECK(rank_mod({{0, 0}, {0, 0}}, f5) == 0);
  CHECK(rank_mod({{5, 0}}, PrimeField(7)) == 1);
  CHECK(rank_mod({{2, 4}, {1, 2}}, f5) == 1);
}

TEST_CASE("Jacobian rank examples for n=3, q=2") {
  const VeroneseRing ring(3, 2);
  const PrimeField f5(5);
  const auto gens = quadratic_generators(ring);

  const auto origin = jacobian_rank(ring, gens, std::vector<Scalar>(6, 0), 5);
  CHECK(origin.rank == 0);
  CHECK_FALSE(origin.triangular_submatrix_ok);

  const auto one = jacobian_rank(ring, gens, ring.parametrize({1, 1, 1}, f5), 5);
  CHECK(one.rank == 3);
  CHECK(one.codimension == 3);
  CHECK(one.triangular_submatrix_ok);
  CHECK(one.diagonal_value == 1);
  CHECK(one.permutation == IndexPermutation{0, 1, 2});

  // x11 vanishes, so index 2 moves into slot 1
  const auto shifted = jacobian_rank(ring, gens, ring.parametrize({0, 1, 1}, f5), 5);
  CHECK(shifted.rank == 3);
  CHECK(shifted.permutation == IndexPermutation{1, 0, 2});
  CHECK(shifted.triangular_submatrix_ok);
  CHECK(shifted.diagonal_value == 1);

  // off the cone the rank is still defined
  const auto off = jacobian_rank(ring, gens, {1, 1, 1, 1, 2, 1}, 3);
  CHECK(off.rank >= 1);
}

TEST_CASE("derivatives are reduced after differentiating over Z") {
  // d/dx12 of x12^2 - x11*x22 is 2*x12, which vanishes in characteristic 2
  const VeroneseRing ring(2, 2);
  const auto gens = quadratic_generators(ring);
  const auto m = jacobian_matrix(ring, gens, {1, 1, 1}, PrimeField(2));
  CHECK(m == FieldMatrix{{1, 0, 1}});
  const auto m3 = jacobian_matrix(ring, gens, {1, 1, 1}, PrimeField(3));
  CHECK(m3 == FieldMatrix{{1, 1, 1}});
}

TEST_CASE("Jacobian rank at random points of the cone") {
  std::mt19937 rng(99);
  for (auto [n, q, r] : {std::tuple{3u, 2u, 5u}, std::tuple{3u, 2u, 7u}, std::tuple{3u, 3u, 7u}, std::tuple{4u, 2u, 5u},
                         std::tuple{3u, 4u, 5u}}) {
    const VeroneseRing ring(n, q);
    const PrimeField f(r);
    const auto gens = quadratic_generators(ring);
    const std::size_t big_n = ring.num_vars() - n;
    for (int i = 0; i < 50; ++i) {
      const auto u = random_u(rng, n, r);
      const auto rep = jacobian_rank(ring, gens, ring.parametrize(u, f), r);
      INFO("n=" << n << " q=" << q << " r=" << r);
      CHECK(rep.rank == big_n);
      CHECK(rep.triangular_submatrix_ok);
      CHECK(rep.diagonal_value != 0);
    }
  }
}

TEST_CASE("shape of the triangular minor") {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned q = 2; q <= 4; ++q) {
      const VeroneseRing ring(n, q);
      const auto rows = triangular_shape(ring);
      CHECK(rows.size() == ring.num_vars() - n);
      CHECK(reduced_index_set(ring).size() == rows.size());
      for (const auto& row : rows) {
        CHECK(row.second_lex_smaller);
        // the off-diagonal term is missing exactly for (1, ..., 1, k, l)
        const bool ones = std::all_of(row.row.idx.begin(), row.row.idx.end() - 2, [](unsigned i) { return i == 1; });
        CHECK(row.second_in_index_set == !ones);
      }
    }
}

TEST_CASE("triangular generators lie in the ideal") {
  const VeroneseRing ring(4, 3);
  for (const IndexPermutation& perm : {IndexPermutation{0, 1, 2, 3}, IndexPermutation{2, 1, 0, 3}}) {
    const auto gs = triangular_generators(ring, perm);
    CHECK(gs.size() == ring.num_vars() - 4);
    for (const auto& g : gs) CHECK(binomial_in_ideal(ring, g.plus, g.minus));
  }
  CHECK(permute(IndexPermutation{1, 0, 2}, IndexTuple{{1, 1, 3}}) == IndexTuple{{2, 2, 3}});
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(2, PrimeField(5)) == std::vector<Scalar>{1, 4});
  CHECK(roots_of_unity(3, PrimeField(7)) == std::vector<Scalar>{1, 2, 4});
  CHECK(roots_of_unity(4, PrimeField(5)) == std::vector<Scalar>{1, 2, 3, 4});
  CHECK(roots_of_unity(3, PrimeField(5)) == std::vector<Scalar>{1});
}

TEST_CASE("fiber examples") {
  SUBCASE("q=2, r=5, u=(1,2,3)") {
    const auto rep = fiber_check(VeroneseRing(3, 2), 5, {1, 2, 3});
    CHECK(rep.fiber == Points{{1, 2, 3}, {4, 3, 2}});
    CHECK(rep.equal);
  }
  SUBCASE("q=3, r=7, u=(1,1,1)") {
    const auto rep = fiber_check(VeroneseRing(3, 3), 7, {1, 1, 1});
    CHECK(rep.fiber == Points{{1, 1, 1}, {2, 2, 2}, {4, 4, 4}});
    CHECK(rep.roots == std::vector<Scalar>{1, 2, 4});
    CHECK(rep.equal);
  }
  SUBCASE("zero coordinates") {
    const auto rep = fiber_check(VeroneseRing(3, 2), 5, {0, 1, 2});
    CHECK(rep.fiber == Points{{0, 1, 2}, {0, 4, 3}});
    CHECK(rep.equal);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(fiber_check(VeroneseRing(3, 4), 7, {1, 2, 3}), RootOfUnityDeficiency);
    CHECK_THROWS_AS(fiber_check(VeroneseRing(3, 3), 5, {1, 2, 3}), RootOfUnityDeficiency);
    CHECK_THROWS_AS(fiber_check(VeroneseRing(3, 2), 5, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(fiber_check(VeroneseRing(3, 2), 5, {1, 2}), std::invalid_argument);
  }
}

TEST_CASE("fibers equal orbits for random points") {
  std::mt19937 rng(4);
  for (auto [q, r] : {std::pair{2u, 5u}, std::pair{3u, 7u}, std::pair{4u, 5u}, std::pair{8u, 17u}, std::pair{2u, 13u}}) {
    const VeroneseRing ring(3, q);
    const PrimeField f(r);
    for (int i = 0; i < 20; ++i) {
      const auto u = random_u(rng, 3, r);
      const auto rep = fiber_check(ring, r, u);
      CHECK(rep.equal);
      CHECK(rep.fiber.size() == q);
      for (Scalar g : rep.roots) {
        auto gu = rep.u;
        for (auto& c : gu) c = f.mul(g, c);
        CHECK(ring.parametrize(gu, f) == rep.base);
      }
    }
  }
}

TEST_CASE("in characteristic p the fibers are single points") {
  std::mt19937 rng(8);
  for (auto [q, r] : {std::pair{2u, 2u}, std::pair{3u, 3u}, std::pair{4u, 2u}}) {
    const VeroneseRing ring(3, q);
    const PrimeField f(r);
    for (int i = 0; i < 5; ++i) {
      const auto u = random_u(rng, 3, r);
      CHECK(fiber_of(ring, f, u).size() == 1);
    }
  }
}
