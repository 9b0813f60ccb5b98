#include <doctest.h>

#include <algorithm>
#include <random>

#include "veronese/combinatorics.hpp"
#include "veronese/groebner.hpp"
#include "veronese/toric.hpp"

using namespace veronese;

namespace {

constexpr auto kDrl = MonomialOrder::DegRevLex;

Poly var(const PrimeField& f, VarId v, MonomialOrder o = kDrl) { return Poly::monomial(f, o, Monomial::var(v)); }

Poly naive_power(const Poly& f, std::uint64_t e) {
  Poly acc = Poly::constant(f.field(), f.order(), 1);
  for (std::uint64_t i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

Poly random_poly(std::mt19937& rng, const PrimeField& f, unsigned vars, unsigned terms) {
  std::vector<Term> ts;
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<Monomial::Entry> es;
    for (VarId v = 0; v < vars; ++v)
      if (rng() % 2) es.emplace_back(v, 1 + rng() % 2);
    ts.push_back(Term{Monomial(es), 1 + rng() % (f.modulus() - 1)});
  }
  return Poly(f, kDrl, ts);
}

std::vector<Poly> polys(const VeroneseRing& ring, const PrimeField& f, std::initializer_list<const char*> bs,
                        MonomialOrder o = kDrl) {
  std::vector<Poly> out;
  for (const char* s : bs) out.push_back(parse_binomial(s, ring).to_poly(f, o));
  return out;
}

bool same_set(std::vector<Poly> a, std::vector<Poly> b) {
  if (a.size() != b.size()) return false;
  for (const auto& p : a)
    if (std::find(b.begin(), b.end(), p) == b.end()) return false;
  return true;
}

}  // namespace

TEST_CASE("prime field") {
  CHECK(is_prime(2));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(PrimeField(6), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.mul(f.inv(3), 3) == 1);
  CHECK(f.pow(3, 6) == 1);
}

TEST_CASE("monomial orders") {
  const Monomial x = Monomial::var(0), y = Monomial::var(1), z = Monomial::var(2);
  CHECK(compare(x, y, MonomialOrder::Lex) > 0);
  CHECK(compare(y * y, x, MonomialOrder::Lex) < 0);
  CHECK(compare(y * y, x, kDrl) > 0);
  // degrevlex: x*z < y^2 since z is the smallest variable
  CHECK(compare(x * z, y * y, kDrl) < 0);
  CHECK(compare(x * z, y * y, MonomialOrder::Lex) > 0);
  CHECK(y.divides(x * y));
  CHECK((x * y).quotient_of(x * y * y * z) == y * z);
  CHECK((x * y).lcm(y * z) == x * y * z);
  CHECK((x * y).coprime(z));
}

TEST_CASE("polynomial arithmetic") {
  const PrimeField f5(5);
  const Poly x = var(f5, 0), y = var(f5, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK(x + Poly(f5, kDrl) == x);
  CHECK((x - x).is_zero());
  CHECK(x.scaled(5).is_zero());
  CHECK((x.scaled(3)).monic() == x);

  const VeroneseRing ring(3, 2);
  const Poly g = parse_binomial("x12^2 - x11*x22", ring).to_poly(f5, kDrl);
  const Poly h = g * Poly::monomial(f5, kDrl, ring.parse_monomial("x33"));
  CHECK(h.size() == 2);

  CHECK_THROWS_AS(x + var(PrimeField(7), 0), std::invalid_argument);
  CHECK_THROWS_AS(x + var(f5, 0, MonomialOrder::Lex), std::invalid_argument);
}

TEST_CASE("frobenius power") {
  const PrimeField f2(2);
  const Poly x = var(f2, 0), y = var(f2, 1);
  CHECK(frobenius_power(x - y, 2, 1) == x * x - y * y);
  CHECK(frobenius_power(x - y, 2, 1) == x * x + y * y);
  CHECK(frobenius_power(x - y, 2, 0) == x - y);

  const VeroneseRing ring(3, 2);
  const Poly g = parse_binomial("x12*x33 - x13*x23", ring).to_poly(f2, kDrl);
  CHECK(frobenius_power(g, 2, 1) == parse_binomial("x12^2*x33^2 - x13^2*x23^2", ring).to_poly(f2, kDrl));
  CHECK_THROWS(frobenius_power(g, 3, 1));
}

TEST_CASE("frobenius power matches repeated multiplication") {
  std::mt19937 rng(5);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (unsigned k = 0; k <= 2; ++k) {
      if (p == 5 && k == 2) continue;  // 25 products of growing polynomials, still fine but slow-ish
      for (int t = 0; t < 5; ++t) {
        const Poly g = random_poly(rng, f, 3, 3);
        std::uint64_t e = 1;
        for (unsigned i = 0; i < k; ++i) e *= p;
        CHECK(frobenius_power(g, p, k) == naive_power(g, e));
      }
    }
  }
}

TEST_CASE("reduction") {
  const VeroneseRing ring(3, 2);
  const PrimeField f2(2);
  const auto cert = polys(ring, f2, {"x12^2 - x11*x22", "x13^2 - x11*x33", "x23^2 - x22*x33"});
  const auto gb = buchberger(cert, kDrl);
  CHECK(reduce(cert[0], gb).is_zero());
  CHECK(reduce(Poly::constant(f2, kDrl, 1), gb) == Poly::constant(f2, kDrl, 1));
  const Poly target = parse_binomial("x12^2*x33^2 - x13^2*x23^2", ring).to_poly(f2, kDrl);
  CHECK(ideal_contains(gb, target));
  CHECK_FALSE(ideal_contains(gb, parse_binomial("x12*x33 - x13*x23", ring).to_poly(f2, kDrl)));

  // reduce(f*g + h) = reduce(h) for ideal members f*g
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    const Poly h = random_poly(rng, f2, 6, 3);
    const Poly fg = cert[t % 3] * random_poly(rng, f2, 6, 2);
    CHECK(reduce(fg + h, gb) == reduce(h, gb));
  }
}

TEST_CASE("buchberger basics") {
  const PrimeField f5(5);
  const Poly x = var(f5, 0), y = var(f5, 1);
  {
    const std::vector<Poly> g = {x * y};
    CHECK(buchberger(g, kDrl).generators == g);
  }
  {
    const std::vector<Poly> g = {x - y};
    const auto gb = buchberger(g, kDrl);
    REQUIRE(gb.generators.size() == 1);
    CHECK(gb.generators[0] == x - y);
  }
  {
    // ideal (x^2, xy + y^2) needs y^3
    const std::vector<Poly> g = {x * x, x * y + y * y};
    const auto gb = buchberger(g, kDrl);
    CHECK(is_groebner_basis(gb.generators));
    CHECK(ideal_contains(gb, y * y * y));
  }
}

TEST_CASE("buchberger matches an independent computation") {
  SUBCASE("six quadrics over F_3, degrevlex") {
    const VeroneseRing ring(3, 2);
    const PrimeField f3(3);
    const auto six = polys(ring, f3,
                           {"x12^2 - x11*x22", "x13^2 - x11*x33", "x23^2 - x22*x33", "x12*x33 - x13*x23",
                            "x13*x22 - x12*x23", "x23*x11 - x12*x13"});
    const auto gb = buchberger(six, kDrl);
    for (const auto& g : six) CHECK(ideal_contains(gb, g));
    CHECK(same_set(gb.generators, polys(ring, f3,
                                        {"x12^2 - x11*x22", "x12*x13 - x11*x23", "x13^2 - x11*x33",
                                         "x13*x22 - x12*x23", "x13*x23 - x12*x33", "x23^2 - x22*x33"})));
  }
  SUBCASE("three certificate binomials over F_2") {
    const VeroneseRing ring(3, 2);
    const PrimeField f2(2);
    const auto cert = polys(ring, f2, {"x12^2 - x11*x22", "x13^2 - x11*x33", "x23^2 - x22*x33"});
    CHECK(same_set(buchberger(cert, kDrl).generators, cert));
  }
  SUBCASE("n=3, q=3 quadrics over F_5") {
    const VeroneseRing ring(3, 3);
    const PrimeField f5(5);
    std::vector<Poly> gens;
    for (const auto& b : quadratic_generators(ring)) gens.push_back(b.to_poly(f5, kDrl));
    const auto expected = polys(
        ring, f5,
        {"x112^2 - x111*x122",   "x112*x113 - x111*x123", "x113^2 - x111*x133",    "x112*x122 - x111*x222",
         "x113*x122 - x111*x223", "x122^2 - x112*x222",    "x112*x123 - x111*x223", "x113*x123 - x111*x233",
         "x122*x123 - x112*x223", "x123^2 - x112*x233",    "x112*x133 - x111*x233", "x113*x133 - x111*x333",
         "x122*x133 - x112*x233", "x123*x133 - x112*x333", "x133^2 - x113*x333",    "x113*x222 - x112*x223",
         "x123*x222 - x122*x223", "x133*x222 - x122*x233", "x113*x223 - x112*x233", "x123*x223 - x122*x233",
         "x133*x223 - x122*x333", "x223^2 - x222*x233",    "x113*x233 - x112*x333", "x123*x233 - x122*x333",
         "x133*x233 - x123*x333", "x223*x233 - x222*x333", "x233^2 - x223*x333"});
    CHECK(same_set(buchberger(gens, kDrl).generators, expected));
  }
  SUBCASE("n=4, q=2 quadrics over F_5") {
    const VeroneseRing ring(4, 2);
    const PrimeField f5(5);
    std::vector<Poly> gens;
    for (const auto& b : quadratic_generators(ring)) gens.push_back(b.to_poly(f5, kDrl));
    const auto expected =
        polys(ring, f5,
              {"x12^2 - x11*x22", "x12*x13 - x11*x23", "x13^2 - x11*x33", "x12*x14 - x11*x24", "x13*x14 - x11*x34",
               "x14^2 - x11*x44", "x13*x22 - x12*x23", "x14*x22 - x12*x24", "x13*x23 - x12*x33", "x14*x23 - x12*x34",
               "x23^2 - x22*x33", "x13*x24 - x12*x34", "x14*x24 - x12*x44", "x23*x24 - x22*x34", "x24^2 - x22*x44",
               "x14*x33 - x13*x34", "x24*x33 - x23*x34", "x14*x34 - x13*x44", "x24*x34 - x23*x44",
               "x34^2 - x33*x44"});
    CHECK(same_set(buchberger(gens, kDrl).generators, expected));
  }
}

TEST_CASE("reduced basis does not depend on generator order") {
  const VeroneseRing ring(3, 3);
  const PrimeField f7(7);
  for (auto order : {kDrl, MonomialOrder::Lex}) {
    std::vector<Poly> gens;
    for (const auto& b : quadratic_generators(ring, GeneratorSet::Full)) gens.push_back(b.to_poly(f7, order));
    const auto reference = buchberger(gens, order).generators;
    CHECK(is_groebner_basis(reference));
    std::mt19937 rng(17);
    for (int t = 0; t < 3; ++t) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(gens, order).generators == reference);
    }
  }
}

TEST_CASE("pair limit is reported, not truncated") {
  const VeroneseRing ring(4, 3);
  const PrimeField f5(5);
  std::vector<Poly> gens;
  for (const auto& b : quadratic_generators(ring)) gens.push_back(b.to_poly(f5, MonomialOrder::Lex));
  CHECK_THROWS_AS(buchberger(gens, MonomialOrder::Lex, GroebnerOptions{10}), ResourceLimitError);
}

TEST_CASE("integer polynomials") {
  const Monomial x = Monomial::var(0), y = Monomial::var(1);
  IntPoly f = IntPoly::binomial(x * x * y, y);
  IntPoly dx;
  dx.add_term(x * y, 2);
  CHECK(f.derivative(0) == dx);
  CHECK(f.derivative(1) == IntPoly::binomial(x * x, Monomial()));
  CHECK((f - f).is_zero());
  CHECK(IntPoly::binomial(x, x).is_zero());
}
