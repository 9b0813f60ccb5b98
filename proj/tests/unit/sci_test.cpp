#include <doctest.h>

#include <map>
#include <set>

#include "veronese/sci.hpp"

using namespace veronese;

namespace {

std::vector<std::string> texts(const std::vector<Binomial>& bs, const VeroneseRing& ring) {
  std::vector<std::string> out;
  for (const auto& b : bs) out.push_back(format(b, ring));
  return out;
}

std::map<unsigned, std::size_t> k_profile(const std::vector<FrobeniusWitness>& ws) {
  std::map<unsigned, std::size_t> out;
  for (const auto& w : ws) ++out[w.k];
  return out;
}

// Straightforward recount: every point of F_r^6 tested against the
// equations; the cone as the set of all lambda * phi(u).
struct Brute {
  std::size_t zeros = 0;
  std::size_t cone = 0;
  std::size_t image = 0;
};

Brute brute_force(const VeroneseRing& ring, const std::vector<Binomial>& eqs, Scalar r) {
  const PrimeField f(r);
  std::set<std::vector<Scalar>> image, cone;
  for (Scalar a = 0; a < r; ++a)
    for (Scalar b = 0; b < r; ++b)
      for (Scalar c = 0; c < r; ++c) {
        const auto x = ring.parametrize({a, b, c}, f);
        image.insert(x);
        for (Scalar l = 0; l < r; ++l) {
          auto y = x;
          for (auto& v : y) v = f.mul(v, l);
          cone.insert(y);
        }
      }
  Brute out{0, cone.size(), image.size()};
  std::vector<Scalar> x(6);
  std::size_t total = 1;
  for (int i = 0; i < 6; ++i) total *= r;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 5; i >= 0; --i) {
      x[i] = c % r;
      c /= r;
    }
    bool zero = true;
    for (const auto& e : eqs) zero = zero && Poly::binomial(f, MonomialOrder::Lex, e.plus, e.minus).evaluate(x) == 0;
    if (zero) ++out.zeros;
  }
  return out;
}

}  // namespace

TEST_CASE("certificate binomials") {
  SUBCASE("n=3, q=2") {
    const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
    const VeroneseRing ring(cert.params);
    CHECK(texts(cert.binomials, ring) ==
          std::vector<std::string>{"x12^2 - x11*x22", "x13^2 - x11*x33", "x23^2 - x22*x33"});
  }
  SUBCASE("n=2, q=2") {
    const auto cert = build_certificate(VeroneseParams::make(2, 2, 1));
    CHECK(texts(cert.binomials, VeroneseRing(cert.params)) == std::vector<std::string>{"x12^2 - x11*x22"});
  }
  SUBCASE("n=3, q=3") {
    const auto cert = build_certificate(VeroneseParams::make(3, 3, 1));
    const VeroneseRing ring(cert.params);
    REQUIRE(cert.binomials.size() == 7);
    CHECK(format(cert.binomials[0], ring) == "x112^3 - x111^2*x222");
  }
  SUBCASE("sizes and contents") {
    for (unsigned n = 1; n <= 5; ++n)
      for (auto [p, h] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}}) {
        const auto params = VeroneseParams::make(n, p, h);
        const auto cert = build_certificate(params);
        const VeroneseRing ring(params);
        CHECK(cert.binomials.size() == ring.num_vars() - n);
        for (const auto& b : cert.binomials) CHECK(binomial_in_ideal(ring, b.plus, b.minus));
      }
  }
}

TEST_CASE("Frobenius verification in characteristic p") {
  SUBCASE("(3,2,1)") {
    auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
    const VeroneseRing ring(cert.params);
    const auto v = verify_char_p(cert);
    REQUIRE(v.success);
    CHECK(v.groebner_size == 3);
    CHECK(cert.witnesses == v.witnesses);
    const auto g = parse_binomial("x12*x33 - x13*x23", ring).normalized();
    bool seen = false;
    for (const auto& w : v.witnesses)
      if (w.generator == g) {
        seen = true;
        CHECK(w.k == 1);
      }
    CHECK(seen);
    // generators already in the certificate need no Frobenius power
    CHECK(k_profile(v.witnesses) == std::map<unsigned, std::size_t>{{0, 3}, {1, 3}});
  }
  SUBCASE("k profiles from an independent computation") {
    auto c331 = build_certificate(VeroneseParams::make(3, 3, 1));
    const auto v331 = verify_char_p(c331);
    REQUIRE(v331.success);
    CHECK(v331.groebner_size == 7);
    CHECK(k_profile(v331.witnesses) == std::map<unsigned, std::size_t>{{1, 27}});

    auto c421 = build_certificate(VeroneseParams::make(4, 2, 1));
    const auto v421 = verify_char_p(c421);
    REQUIRE(v421.success);
    CHECK(v421.groebner_size == 6);
    CHECK(k_profile(v421.witnesses) == std::map<unsigned, std::size_t>{{0, 6}, {1, 14}});
  }
  SUBCASE("(3,2,2) needs k <= h + 1") {
    auto cert = build_certificate(VeroneseParams::make(3, 2, 2));
    const auto v = verify_char_p(cert);
    REQUIRE(v.success);
    for (const auto& w : v.witnesses) CHECK(w.k <= 3);
  }
  SUBCASE("cap too small is reported per generator") {
    auto cert = build_certificate(VeroneseParams::make(3, 3, 1));
    CharPOptions opts;
    opts.k_max = 0;
    const auto v = verify_char_p(cert, opts);
    CHECK_FALSE(v.success);
    CHECK(v.failures.size() == 27);
    CHECK(v.failures.front().rfind("k_max exceeded for generator", 0) == 0);
    CHECK(cert.witnesses.empty());
  }
  SUBCASE("full generator set") {
    auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
    CharPOptions opts;
    opts.generators = GeneratorSet::Full;
    CHECK(verify_char_p(cert, opts).success);
  }
  SUBCASE("n = 1 has nothing to certify") {
    auto cert = build_certificate(VeroneseParams::make(1, 2, 1));
    CHECK(cert.binomials.empty());
    CHECK(verify_char_p(cert).success);
  }
}

TEST_CASE("point surveys for n=3, q=2") {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const VeroneseRing ring(cert.params);
  struct Row {
    std::uint64_t r, image, cone, cert_zeros;
    std::vector<Scalar> witness;
  };
  const std::vector<Row> table = {{2, 8, 8, 8, {}},
                                  {3, 14, 27, 35, {1, 1, 1, 1, 2, 1}},
                                  {5, 63, 125, 189, {1, 1, 1, 1, 4, 1}},
                                  {7, 172, 343, 559, {1, 1, 1, 1, 6, 1}}};
  for (const auto& row : table) {
    INFO("r = " << row.r);
    const auto rep = point_survey(cert, row.r, SurveyMode::FullEnumeration);
    CHECK(rep.image_points == row.image);
    CHECK(rep.points_on_V == row.cone);
    CHECK(rep.points_on_zero_set == row.cert_zeros);
    CHECK(rep.cone_in_zero_set);
    if (row.witness.empty()) {
      CHECK_FALSE(rep.witness);
    } else {
      REQUIRE(rep.witness);
      CHECK(*rep.witness == row.witness);
    }
    const auto full = full_ideal_point_survey(cert.params, row.r);
    CHECK(full.points_on_zero_set == row.cone);
    CHECK_FALSE(full.witness);
  }
}

TEST_CASE("point surveys agree with a direct recount") {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const VeroneseRing ring(cert.params);
  for (Scalar r : {2u, 3u, 5u}) {
    const auto b = brute_force(ring, cert.binomials, r);
    const auto rep = point_survey(cert, r, SurveyMode::FullEnumeration);
    CHECK(rep.points_on_zero_set == b.zeros);
    CHECK(rep.points_on_V == b.cone);
    CHECK(rep.image_points == b.image);
    const auto full = brute_force(ring, quadratic_generators(ring), r);
    CHECK(full.zeros == b.cone);
  }
}

TEST_CASE("survey reports do not depend on the worker count") {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  for (std::uint64_t r : {3u, 5u}) {
    const auto one = point_survey(cert, r, SurveyMode::FullEnumeration, {10'000'000, 1});
    for (unsigned t : {2u, 3u, 7u}) CHECK(point_survey(cert, r, SurveyMode::FullEnumeration, {10'000'000, t}) == one);
  }
}

TEST_CASE("survey modes and budgets") {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const auto img = point_survey(cert, 11, SurveyMode::ImageOnly);
  CHECK_FALSE(img.points_on_zero_set);
  CHECK(img.cone_in_zero_set);
  CHECK(img.points_on_V == 11 * 11 * 11);
  CHECK_THROWS_AS(point_survey(cert, 11, SurveyMode::FullEnumeration, {1000, 1}), BudgetExceededError);
  CHECK_THROWS_AS(point_survey(cert, 4, SurveyMode::FullEnumeration), std::invalid_argument);

  // the cone always lies on the zero set of the certificate
  for (auto [n, p, h, r] : {std::tuple{3u, 3u, 1u, 2u}, std::tuple{4u, 2u, 1u, 3u}, std::tuple{3u, 2u, 2u, 5u}}) {
    const auto c = build_certificate(VeroneseParams::make(n, p, h));
    CHECK(point_survey(c, r, SurveyMode::ImageOnly).cone_in_zero_set);
  }

  const auto trivial = build_certificate(VeroneseParams::make(1, 2, 1));
  const auto t = point_survey(trivial, 5, SurveyMode::FullEnumeration);
  CHECK(t.points_on_zero_set == t.points_on_V);
  CHECK_FALSE(t.witness);
}
