#include "veronese/gluing.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "veronese/combinatorics.hpp"

namespace veronese {

void SemigroupGens::validate() const {
  std::set<NatVector> seen;
  for (const auto& g : gens) {
    if (g.size() != dim) throw std::invalid_argument("semigroup generator has wrong dimension");
    if (std::any_of(g.begin(), g.end(), [](long x) { return x < 0; }))
      throw std::invalid_argument("semigroup generator has a negative entry");
    if (std::all_of(g.begin(), g.end(), [](long x) { return x == 0; }))
      throw std::invalid_argument("semigroup generator is zero");
    if (!seen.insert(g).second) throw std::invalid_argument("semigroup generators are not distinct");
  }
}

IntMatrix SemigroupGens::matrix() const {
  return IntMatrix::from_columns(dim, std::span<const std::vector<long>>(gens));
}

SemigroupGens veronese_semigroup(unsigned n, unsigned q) {
  SemigroupGens out{n, {}};
  for (const auto& a : enumerate_T(n, q).exponents) out.gens.emplace_back(a.a.begin(), a.a.end());
  return out;
}

NatVector combine(const SemigroupGens& gens, const std::vector<std::uint64_t>& coefficients) {
  if (coefficients.size() != gens.gens.size())
    throw std::invalid_argument("combine: coefficient count mismatch");
  NatVector out(gens.dim, 0);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    for (unsigned j = 0; j < gens.dim; ++j)
      out[j] += static_cast<long>(coefficients[i]) * gens.gens[i][j];
  return out;
}

namespace {

long coordinate_sum(const NatVector& v) {
  long s = 0;
  for (long x : v) s += x;
  return s;
}

class MemberSearch {
 public:
  MemberSearch(const SemigroupGens& gens, std::uint64_t max_terms)
      : gens_(gens), max_terms_(max_terms), coeffs_(gens.gens.size(), 0) {}

  bool run(const NatVector& b) {
    NatVector rest = b;
    return dfs(0, rest, 0);
  }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }

 private:
  bool dfs(std::size_t start, NatVector& rest, std::uint64_t used) {
    if (std::all_of(rest.begin(), rest.end(), [](long x) { return x == 0; })) return true;
    if (used == max_terms_) return false;
    if (failed_.contains({{start, used}, rest})) return false;
    for (std::size_t i = start; i < gens_.gens.size(); ++i) {
      const auto& g = gens_.gens[i];
      bool fits = true;
      for (unsigned j = 0; j < gens_.dim && fits; ++j) fits = g[j] <= rest[j];
      if (!fits) continue;
      for (unsigned j = 0; j < gens_.dim; ++j) rest[j] -= g[j];
      ++coeffs_[i];
      if (dfs(i, rest, used + 1)) return true;
      --coeffs_[i];
      for (unsigned j = 0; j < gens_.dim; ++j) rest[j] += g[j];
    }
    failed_.insert({{start, used}, rest});
    return false;
  }

  const SemigroupGens& gens_;
  std::uint64_t max_terms_;
  std::vector<std::uint64_t> coeffs_;
  std::set<std::pair<std::pair<std::size_t, std::uint64_t>, NatVector>> failed_;
};

}  // namespace

Membership semigroup_member(const SemigroupGens& gens, const NatVector& b,
                            std::optional<std::uint64_t> bound) {
  gens.validate();
  if (b.size() != gens.dim) throw std::invalid_argument("semigroup_member: wrong dimension");
  if (std::any_of(b.begin(), b.end(), [](long x) { return x < 0; }))
    throw std::invalid_argument("semigroup_member: target has a negative entry");

  Membership out;
  const long total = coordinate_sum(b);
  if (total == 0) {
    out.status = MembershipStatus::Member;
    out.coefficients.assign(gens.gens.size(), 0);
    return out;
  }
  if (gens.gens.empty()) return out;

  long min_sum = coordinate_sum(gens.gens.front());
  bool graded = true;
  for (const auto& g : gens.gens) {
    const long s = coordinate_sum(g);
    graded = graded && s == min_sum;
    min_sum = std::min(min_sum, s);
  }
  if (graded && total % min_sum != 0) return out;

  const auto natural = static_cast<std::uint64_t>(total / min_sum);
  const std::uint64_t limit = bound ? std::min(*bound, natural) : natural;
  MemberSearch search(gens, limit);
  if (search.run(b)) {
    out.status = MembershipStatus::Member;
    out.coefficients = search.coefficients();
  } else if (limit < natural) {
    out.status = MembershipStatus::Undecided;
  }
  return out;
}

std::string to_string(GluingFailure f) {
  switch (f) {
    case GluingFailure::None: return "none";
    case GluingFailure::IntersectionRank: return "intersection rank != 1";
    case GluingFailure::NotSignDefinite: return "intersection generator not sign-definite";
    case GluingFailure::NoExponentWithinCap: return "no s within cap";
    case GluingFailure::NotPowerOfP: return "lattice multiplier is not a power of p";
  }
  return "unknown";
}

namespace {

NatVector scaled(const NatVector& v, long k) {
  NatVector out = v;
  for (auto& x : out) x *= k;
  return out;
}

void check_split(const SemigroupGens& t1, const SemigroupGens& t2) {
  if (t1.gens.empty() || t2.gens.empty()) throw std::invalid_argument("p-gluing needs nonempty parts");
  if (t1.dim != t2.dim) throw std::invalid_argument("p-gluing parts have different dimensions");
  t1.validate();
  t2.validate();
  for (const auto& g : t1.gens)
    if (std::find(t2.gens.begin(), t2.gens.end(), g) != t2.gens.end())
      throw std::invalid_argument("p-gluing parts are not disjoint");
}

}  // namespace

GluingCheck check_p_gluing(const SemigroupGens& t1, const SemigroupGens& t2, unsigned p,
                           unsigned s_cap) {
  check_split(t1, t2);
  GluingCheck out;
  const IntMatrix meet = lattice_intersection(t1.matrix(), t2.matrix());
  if (meet.cols() != 1) {
    out.reason = GluingFailure::IntersectionRank;
    out.detail = "rank " + std::to_string(meet.cols());
    return out;
  }
  IntVector g = meet.column(0);
  const bool nonneg = std::all_of(g.begin(), g.end(), [](const Integer& x) { return x >= 0; });
  const bool nonpos = std::all_of(g.begin(), g.end(), [](const Integer& x) { return x <= 0; });
  if (!nonneg && !nonpos) {
    out.reason = GluingFailure::NotSignDefinite;
    return out;
  }
  NatVector alpha(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    Integer x = abs(g[i]);
    if (!x.fits_slong_p()) throw std::overflow_error("check_p_gluing: generator too large");
    alpha[i] = x.get_si();
  }

  long power = 1;
  for (unsigned s = 0; s <= s_cap; ++s, power *= static_cast<long>(p)) {
    const NatVector target = scaled(alpha, power);
    const Membership m1 = semigroup_member(t1, target);
    if (m1.status != MembershipStatus::Member) continue;
    const Membership m2 = semigroup_member(t2, target);
    if (m2.status != MembershipStatus::Member) continue;
    out.witness = GluingWitness{alpha, s, m1.coefficients, m2.coefficients};
    return out;
  }
  out.reason = GluingFailure::NoExponentWithinCap;
  out.detail = "s_cap = " + std::to_string(s_cap);
  return out;
}

bool validate_witness(const SemigroupGens& t1, const SemigroupGens& t2, unsigned p,
                      const GluingWitness& w) {
  try {
    check_split(t1, t2);
  } catch (const std::invalid_argument&) {
    return false;
  }
  if (w.alpha.size() != t1.dim) return false;
  if (std::any_of(w.alpha.begin(), w.alpha.end(), [](long x) { return x < 0; })) return false;
  const IntVector alpha = to_int_vector(w.alpha);
  if (is_zero(alpha)) return false;

  const IntMatrix b1 = t1.matrix();
  const IntMatrix b2 = t2.matrix();
  if (!lattice_contains(b1, alpha) || !lattice_contains(b2, alpha)) return false;

  // rank(L1 n L2) = rank L1 + rank L2 - rank(L1 + L2)
  const std::size_t meet_rank = lattice_rank(b1) + lattice_rank(b2) - lattice_rank(b1.hconcat(b2));
  if (meet_rank != 1) return false;

  // the intersection is then Q alpha n L1 n L2, generated by lcm(d1, d2) * primitive(alpha)
  IntVector primitive = alpha;
  const Integer c = content(alpha);
  for (auto& x : primitive) x /= c;
  const auto d1 = minimal_multiplier(b1, primitive);
  const auto d2 = minimal_multiplier(b2, primitive);
  if (!d1 || !d2) return false;
  Integer l;
  mpz_lcm(l.get_mpz_t(), d1->get_mpz_t(), d2->get_mpz_t());
  if (l != c) return false;

  long power = 1;
  for (unsigned i = 0; i < w.s; ++i) power *= static_cast<long>(p);
  const NatVector target = scaled(w.alpha, power);
  if (w.rep1.size() != t1.gens.size() || w.rep2.size() != t2.gens.size()) return false;
  return combine(t1, w.rep1) == target && combine(t2, w.rep2) == target;
}

std::size_t GluingTree::depth() const {
  std::size_t d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

bool is_free(const SemigroupGens& gens) {
  if (gens.gens.empty()) return true;
  return lattice_rank(gens.matrix()) == gens.gens.size();
}

namespace {

bool contains_pure_powers(const SemigroupGens& gens, long q) {
  for (unsigned j = 0; j < gens.dim; ++j) {
    NatVector e(gens.dim, 0);
    e[j] = q;
    if (std::find(gens.gens.begin(), gens.gens.end(), e) == gens.gens.end()) return false;
  }
  return true;
}

bool is_power_of(Integer d, unsigned p) {
  while (d > 1 && d % p == 0) d /= p;
  return d == 1;
}

struct Split {
  SemigroupGens rest;
  SemigroupGens single;
};

Split peel(const SemigroupGens& gens, std::size_t idx) {
  Split s{SemigroupGens{gens.dim, {}}, SemigroupGens{gens.dim, {gens.gens[idx]}}};
  for (std::size_t i = 0; i < gens.gens.size(); ++i)
    if (i != idx) s.rest.gens.push_back(gens.gens[i]);
  return s;
}

GluingTree leaf(const SemigroupGens& gens) { return GluingTree{gens, std::nullopt, {}}; }

// Peeling along {q e_j}: every non-pure generator beta has q*beta in N T0.
GluingSearch peel_along_pure_powers(const SemigroupGens& gens, unsigned p, long q, unsigned s_cap,
                                    std::mt19937_64* rng) {
  GluingSearch out;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < gens.gens.size(); ++i) {
    const auto& g = gens.gens[i];
    const bool pure = std::count(g.begin(), g.end(), 0L) == static_cast<long>(gens.dim) - 1 &&
                      *std::max_element(g.begin(), g.end()) == q;
    if (!pure) candidates.push_back(i);
  }
  if (candidates.empty()) {
    out.tree = leaf(gens);
    return out;
  }
  std::size_t pick = candidates.back();
  if (rng != nullptr) {
    std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
    pick = candidates[dist(*rng)];
  }
  Split split = peel(gens, pick);
  const IntVector beta = to_int_vector(split.single.gens.front());
  const auto d = minimal_multiplier(split.rest.matrix(), beta);
  if (!d || !is_power_of(*d, p)) {
    out.failure = "multiplier of peeled generator is not a power of p";
    return out;
  }
  GluingCheck check = check_p_gluing(split.rest, split.single, p, s_cap);
  if (!check) {
    out.failure = "split failed: " + to_string(check.reason) + " " + check.detail;
    return out;
  }
  NatVector expected = split.single.gens.front();
  for (auto& x : expected) x *= d->get_si();
  if (check.witness->alpha != expected) {
    out.failure = "intersection generator differs from multiplier * peeled generator";
    return out;
  }
  GluingSearch sub = peel_along_pure_powers(split.rest, p, q, s_cap, rng);
  if (!sub.tree) return sub;
  out.tree = GluingTree{gens, std::move(check.witness), {std::move(*sub.tree), leaf(split.single)}};
  return out;
}

class BacktrackingSearch {
 public:
  BacktrackingSearch(unsigned p, unsigned s_cap) : p_(p), s_cap_(s_cap) {}

  std::optional<GluingTree> run(const SemigroupGens& gens) {
    if (is_free(gens)) return leaf(gens);
    if (failed_.contains(gens.gens)) return std::nullopt;
    for (std::size_t i = gens.gens.size(); i-- > 0;) {
      Split split = peel(gens, i);
      GluingCheck check = check_p_gluing(split.rest, split.single, p_, s_cap_);
      if (!check) continue;
      auto sub = run(split.rest);
      if (!sub) continue;
      return GluingTree{gens, std::move(check.witness), {std::move(*sub), leaf(split.single)}};
    }
    failed_.insert(gens.gens);
    return std::nullopt;
  }

 private:
  unsigned p_;
  unsigned s_cap_;
  std::set<std::vector<NatVector>> failed_;
};

}  // namespace

GluingSearch completely_p_glued(const SemigroupGens& gens, unsigned p, unsigned h,
                                const GluingOptions& options) {
  gens.validate();
  if (gens.gens.empty()) throw std::invalid_argument("completely_p_glued: no generators");
  long q = 1;
  for (unsigned i = 0; i < h; ++i) q *= static_cast<long>(p);
  const unsigned s_cap = options.s_cap.value_or(h + 8);

  if (contains_pure_powers(gens, q)) {
    std::optional<std::mt19937_64> rng;
    if (options.peel_seed) rng.emplace(*options.peel_seed);
    return peel_along_pure_powers(gens, p, q, s_cap, rng ? &*rng : nullptr);
  }

  GluingSearch out;
  out.used_fallback = true;
  out.tree = BacktrackingSearch(p, s_cap).run(gens);
  if (!out.tree) out.failure = "no peel order yields a completely p-glued tree";
  return out;
}

bool validate_tree(const GluingTree& tree, unsigned p) {
  if (tree.is_leaf()) return !tree.witness && is_free(tree.gens);
  if (tree.children.size() != 2 || !tree.witness) return false;
  const auto& t1 = tree.children[0].gens;
  const auto& t2 = tree.children[1].gens;
  std::vector<NatVector> joined = t1.gens;
  joined.insert(joined.end(), t2.gens.begin(), t2.gens.end());
  std::vector<NatVector> parent = tree.gens.gens;
  std::sort(joined.begin(), joined.end());
  std::sort(parent.begin(), parent.end());
  if (joined != parent) return false;
  if (!validate_witness(t1, t2, p, *tree.witness)) return false;
  return validate_tree(tree.children[0], p) && validate_tree(tree.children[1], p);
}

}  // namespace veronese
