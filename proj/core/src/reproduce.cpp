#include "veronese/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "veronese/cohomology.hpp"
#include "veronese/combinatorics.hpp"
#include "veronese/geometry.hpp"
#include "veronese/gluing.hpp"
#include "veronese/groebner.hpp"
#include "veronese/sci.hpp"
#include "veronese/toric.hpp"

namespace veronese {

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail.str("");
      ok = false;
      detail << what << "; ";
    }
  }
};

using Rng = std::mt19937_64;

const std::vector<VeroneseParams>& four_params() {
  static const std::vector<VeroneseParams> ps = {
      VeroneseParams::make(3, 2, 1), VeroneseParams::make(4, 2, 1),
      VeroneseParams::make(3, 3, 1), VeroneseParams::make(3, 2, 2)};
  return ps;
}

std::string label(const VeroneseParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.p) + "," + std::to_string(p.h) + ")";
}

std::vector<Binomial> normalized_sorted(std::vector<Binomial> bs) {
  for (auto& b : bs) b.normalize();
  std::sort(bs.begin(), bs.end());
  return bs;
}

void cardinality(Outcome& out, const AcceptanceOptions&) {
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned q : {2u, 3u, 4u, 8u, 9u}) {
      const auto listing = enumerate_T(n, q);
      const Integer expected = binomial_coefficient(n + q - 1, q);
      const std::set<IndexTuple> distinct(listing.tuples.begin(), listing.tuples.end());
      const bool ok = expected == listing.tuples.size() && distinct.size() == listing.tuples.size() &&
                      std::is_sorted(listing.tuples.begin(), listing.tuples.end());
      out.require(ok, "n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
  if (out.ok) out.detail << "30 (n,q) pairs match C(n+q-1,q)";
}

void golden_generators(Outcome& out, const AcceptanceOptions&) {
  const VeroneseRing ring(VeroneseParams::make(3, 2, 1));
  std::vector<Binomial> reference;
  for (const char* s : {"x12^2 - x11*x22", "x13^2 - x11*x33", "x23^2 - x22*x33", "x12*x33 - x13*x23",
                        "x13*x22 - x12*x23", "x23*x11 - x12*x13"})
    reference.push_back(parse_binomial(s, ring));
  const auto gens = normalized_sorted(quadratic_generators(ring));
  out.require(gens == normalized_sorted(reference), "generators differ from the reference six");
  out.require(gens == normalized_sorted(symmetric_two_minors(ring)), "generators differ from the 2x2 minors");
  if (out.ok) out.detail << gens.size() << " binomials match both references";
}

IndexTuple random_tuple(Rng& rng, unsigned n, unsigned q) {
  std::uniform_int_distribution<unsigned> d(1, n);
  IndexTuple t;
  for (unsigned i = 0; i < q; ++i) t.idx.push_back(d(rng));
  std::sort(t.idx.begin(), t.idx.end());
  return t;
}

void degree_two_generation(Outcome& out, const AcceptanceOptions& opts) {
  Rng rng(opts.seed);
  const PrimeField f5(5);
  constexpr auto order = MonomialOrder::DegRevLex;
  std::map<std::pair<unsigned, unsigned>, GroebnerBasis> bases;
  std::size_t steps = 0;
  for (int trial = 0; trial < 200 && out.ok; ++trial) {
    const unsigned n = std::uniform_int_distribution<unsigned>(2, 4)(rng);
    const unsigned q = std::uniform_int_distribution<unsigned>(2, 4)(rng);
    const VeroneseRing ring(n, q);
    TypeStarBinomial f;
    do {
      const unsigned s = std::uniform_int_distribution<unsigned>(2, 3)(rng);
      f.blocks.clear();
      for (unsigned b = 0; b < s; ++b) f.blocks.push_back(random_tuple(rng, n, q));
      f.sigma.resize(s * q);
      std::iota(f.sigma.begin(), f.sigma.end(), 1u);
      std::shuffle(f.sigma.begin(), f.sigma.end(), rng);
    } while (f.left(ring) == f.right(ring));

    const auto cert = rewrite(ring, f);
    steps += cert.steps.size();
    const std::string where = "trial " + std::to_string(trial);
    out.require(expand(cert) == IntPoly::binomial(f.left(ring), f.right(ring)), where + ": expansion differs");
    out.require(verify(ring, cert), where + ": certificate does not verify");

    auto it = bases.find({n, q});
    if (it == bases.end()) {
      std::vector<Poly> gens;
      for (const auto& b : quadratic_generators(ring)) gens.push_back(b.to_poly(f5, order));
      it = bases.emplace(std::make_pair(n, q), buchberger(gens, order)).first;
    }
    const Poly fp = Binomial{f.left(ring), f.right(ring)}.to_poly(f5, order);
    out.require(ideal_contains(it->second, fp), where + ": not reduced to 0 by GB(B)");
  }
  if (out.ok) out.detail << "200 binomials certified (" << steps << " steps), " << bases.size() << " bases over F_5";
}

void gluing(Outcome& out, const AcceptanceOptions&) {
  for (const auto& p : four_params()) {
    const auto search = completely_p_glued(veronese_semigroup(p.n, p.q), p.p, p.h);
    if (!search.tree) {
      out.require(false, label(p) + ": " + search.failure);
      continue;
    }
    out.require(validate_tree(*search.tree, p.p), label(p) + ": witness tree fails revalidation");
    if (out.ok) out.detail << label(p) << " depth " << search.tree->depth() << " ";
  }
}

void char_p_certificate(Outcome& out, const AcceptanceOptions&) {
  for (const auto& p : four_params()) {
    SciCertificate cert = build_certificate(p);
    const auto v = verify_char_p(cert);
    out.require(v.success, label(p) + ": " + (v.failures.empty() ? "failed" : v.failures.front()));
    unsigned k_max = 0;
    for (const auto& w : v.witnesses) k_max = std::max(k_max, w.k);
    out.require(k_max <= p.h + 1, label(p) + ": witness exponent above h+1");
    if (out.ok) out.detail << label(p) << " max k " << k_max << " ";
  }
}

void char_p_points(Outcome& out, const AcceptanceOptions& opts) {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const auto report = point_survey(cert, 2, SurveyMode::FullEnumeration, {10'000'000, opts.threads});
  out.require(report.points_on_zero_set == 8u, "certificate zero set is not 8 points");
  out.require(report.image_points == 8 && report.points_on_V == 8, "image is not 8 points");
  out.require(!report.witness, "unexpected witness");
  if (out.ok) out.detail << "8 = 8 over F_2, no witness";
}

// Independent check that x is a zero of the certificate but not of I(V).
bool is_genuine_witness(const SciCertificate& cert, const std::vector<Scalar>& x, std::uint64_t r) {
  const VeroneseRing ring(cert.params);
  const PrimeField field(r);
  auto eval = [&](const Monomial& m) {
    Scalar acc = 1;
    for (const auto& [v, e] : m.entries()) acc = field.mul(acc, field.pow(x.at(v), e));
    return acc;
  };
  for (const auto& b : cert.binomials)
    if (eval(b.plus) != eval(b.minus)) return false;
  for (const auto& b : quadratic_generators(ring))
    if (eval(b.plus) != eval(b.minus)) return true;
  return false;
}

void char_other_refutation(Outcome& out, const AcceptanceOptions& opts) {
  const auto cert = build_certificate(VeroneseParams::make(3, 2, 1));
  const std::map<std::uint64_t, std::vector<Scalar>> first_witness = {
      {3, {1, 1, 1, 1, 2, 1}}, {5, {1, 1, 1, 1, 4, 1}}, {7, {1, 1, 1, 1, 6, 1}}};
  for (const auto& [r, expected] : first_witness) {
    const auto report = point_survey(cert, r, SurveyMode::FullEnumeration, {10'000'000, opts.threads});
    const std::string where = "F_" + std::to_string(r);
    if (!report.witness) {
      out.require(false, where + ": no witness");
      continue;
    }
    out.require(*report.witness == expected, where + ": unexpected lex-first witness");
    out.require(is_genuine_witness(cert, *report.witness, r), where + ": witness does not recheck");
    if (out.ok)
      out.detail << where << " " << *report.points_on_zero_set << " > " << report.points_on_V << " ";
  }
}

void full_ideal(Outcome& out, const AcceptanceOptions& opts) {
  const auto params = VeroneseParams::make(3, 2, 1);
  for (std::uint64_t r : {2u, 3u, 5u}) {
    const auto report = full_ideal_point_survey(params, r, {10'000'000, opts.threads});
    const std::string where = "F_" + std::to_string(r);
    out.require(report.points_on_zero_set == report.points_on_V, where + ": counts differ");
    out.require(!report.witness, where + ": witness found");
    if (out.ok) out.detail << where << " " << report.points_on_V << " ";
  }
}

std::vector<Scalar> random_nonzero(Rng& rng, unsigned n, std::uint64_t r, bool allow_zero_coords) {
  std::uniform_int_distribution<Scalar> d(allow_zero_coords ? 0 : 1, r - 1);
  std::vector<Scalar> u(n);
  do {
    for (auto& c : u) c = d(rng);
  } while (std::all_of(u.begin(), u.end(), [](Scalar c) { return c == 0; }));
  return u;
}

void jacobian(Outcome& out, const AcceptanceOptions& opts) {
  Rng rng(opts.seed + 9);
  const std::vector<std::pair<VeroneseParams, std::uint64_t>> cases = {
      {VeroneseParams::make(3, 2, 1), 5}, {VeroneseParams::make(3, 3, 1), 7}};
  for (const auto& [params, r] : cases) {
    const VeroneseRing ring(params);
    const PrimeField field(r);
    const auto gens = quadratic_generators(ring);
    const std::size_t big_n = ring.num_vars() - ring.n();
    const std::string where = label(params) + " F_" + std::to_string(r);

    out.require(jacobian_rank(ring, gens, std::vector<Scalar>(ring.num_vars(), 0), r).rank == 0,
                where + ": origin has nonzero rank");
    for (int i = 0; i < 50; ++i) {
      const auto w = ring.parametrize(random_nonzero(rng, ring.n(), r, true), field);
      const auto report = jacobian_rank(ring, gens, w, r);
      out.require(report.rank == big_n, where + ": rank " + std::to_string(report.rank));
      out.require(report.triangular_submatrix_ok, where + ": minor not triangular");
    }
    for (const auto& row : triangular_shape(ring))
      out.require(!row.second_in_index_set || row.second_lex_smaller, where + ": shape not triangular");
    if (out.ok) out.detail << where << " rank " << big_n << " ";
  }
}

void fibers(Outcome& out, const AcceptanceOptions& opts) {
  Rng rng(opts.seed + 10);
  for (const auto& [q, r] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 5}, {3, 7}, {4, 5}}) {
    const VeroneseRing ring(3, q);
    for (int i = 0; i < 20; ++i) {
      auto u = random_nonzero(rng, ring.n(), r, true);
      if (i < 3) {  // pin a few zero coordinates
        u.assign(ring.n(), 0);
        u[i % ring.n()] = 1 + i;
        if (i == 2) u[0] = 1;
      }
      const auto report = fiber_check(ring, r, u);
      out.require(report.equal && report.fiber.size() == q,
                  "q=" + std::to_string(q) + " r=" + std::to_string(r) + ": fiber differs from orbit");
    }
    if (out.ok) out.detail << "q=" << q << "/F_" << r << " ";
  }
}

std::uint64_t brute_kernel(std::uint64_t m, std::uint64_t q) {
  std::uint64_t count = 0;
  for (std::uint64_t x = 0; x < q; ++x)
    if (m * x % q == 0) ++count;
  return count;
}

std::uint64_t brute_image(std::uint64_t m, std::uint64_t q) {
  std::set<std::uint64_t> im;
  for (std::uint64_t x = 0; x < q; ++x) im.insert(m * x % q);
  return im.size();
}

void cohomology(Outcome& out, const AcceptanceOptions&) {
  std::size_t actions = 0;
  for (std::uint64_t q : {2u, 4u, 8u, 3u, 9u}) {
    for (std::uint64_t a : admissible_actions(q)) {
      ++actions;
      const auto act = CyclicAction::make(q, a);
      const auto t = cohomology_orders(act, 6);
      const std::string where = "q=" + std::to_string(q) + " a=" + std::to_string(a);
      out.require(a % act.p == 1 % act.p, where + ": a != 1 mod p");
      out.require(std::all_of(t.orders.begin(), t.orders.end(),
                              [&](std::uint64_t o) { return o == t.orders.front() && o > 1; }),
                  where + ": orders not all equal and > 1");
      const std::uint64_t h0 = brute_kernel(t.difference, q);
      const std::uint64_t odd = brute_kernel(t.norm, q) / brute_image(t.difference, q);
      const std::uint64_t even = brute_kernel(t.difference, q) / brute_image(t.norm, q);
      for (std::size_t i = 0; i < t.orders.size(); ++i) {
        const std::uint64_t expect = i == 0 ? h0 : (i % 2 == 1 ? odd : even);
        out.require(t.orders[i] == expect, where + ": H^" + std::to_string(i) + " differs from enumeration");
      }
    }
  }
  if (out.ok) out.detail << actions << " admissible actions";
}

struct Criterion {
  const char* name;
  double limit;
  void (*run)(Outcome&, const AcceptanceOptions&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"cardinality of T", 1, cardinality},
    {"golden generators (3,2,1)", 1, golden_generators},
    {"degree-2 generation", 30, degree_two_generation},
    {"complete p-gluing", 30, gluing},
    {"char-p Frobenius certificate", 60, char_p_certificate},
    {"char-p point equality", 1, char_p_points},
    {"char != p refutation", 60, char_other_refutation},
    {"full ideal cuts V", 30, full_ideal},
    {"Jacobian rank", 10, jacobian},
    {"Galois fibers", 10, fibers},
    {"cyclic cohomology", 5, cohomology},
};

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id " + std::to_string(id));
  const Criterion& c = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = c.name;
  result.limit_seconds = c.limit;
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(out, options);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.correct = out.ok;
  result.detail = out.detail.str();
  while (!result.detail.empty() && (result.detail.back() == ' ' || result.detail.back() == ';'))
    result.detail.pop_back();
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace veronese
