#pragma once

// Affine semigroups N T, p-gluings of a split T = T1 u T2, and witness trees
// showing a semigroup is completely p-glued.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

using NatVector = std::vector<long>;

struct SemigroupGens {
  unsigned dim = 0;
  std::vector<NatVector> gens;

  /// Throws std::invalid_argument unless generators are distinct, nonzero,
  /// nonnegative and of length dim.
  void validate() const;
  IntMatrix matrix() const;  // generators as columns
  bool operator==(const SemigroupGens&) const = default;
};

/// Generators of N T for the Veronese exponent set T(n, q), in tuple order.
SemigroupGens veronese_semigroup(unsigned n, unsigned q);

enum class MembershipStatus { Member, NotMember, Undecided };

struct Membership {
  MembershipStatus status = MembershipStatus::NotMember;
  std::vector<std::uint64_t> coefficients;  // valid when Member
};

/// Nonnegative integer combination of the generators equal to b, by
/// depth-first search. Since generators are nonzero and nonnegative, any
/// representation uses at most sum(b) / min generator sum terms, so the
/// answer is always decided unless a smaller `bound` is imposed.
Membership semigroup_member(const SemigroupGens& gens, const NatVector& b,
                            std::optional<std::uint64_t> bound = std::nullopt);

NatVector combine(const SemigroupGens& gens, const std::vector<std::uint64_t>& coefficients);

struct GluingWitness {
  NatVector alpha;
  unsigned s = 0;
  std::vector<std::uint64_t> rep1;  // p^s alpha over T1
  std::vector<std::uint64_t> rep2;  // p^s alpha over T2
  bool operator==(const GluingWitness&) const = default;
};

enum class GluingFailure {
  None,
  IntersectionRank,
  NotSignDefinite,
  NoExponentWithinCap,
  NotPowerOfP,
};

std::string to_string(GluingFailure f);

struct GluingCheck {
  std::optional<GluingWitness> witness;
  GluingFailure reason = GluingFailure::None;
  std::string detail;
  explicit operator bool() const { return witness.has_value(); }
};

/// Decides whether T1 u T2 is a p-gluing, searching s = 0..s_cap.
GluingCheck check_p_gluing(const SemigroupGens& t1, const SemigroupGens& t2, unsigned p,
                           unsigned s_cap = 16);

/// Revalidates a witness from scratch: the rank of Z T1 n Z T2 from ranks of
/// the sum lattice, primitivity of alpha from minimal multipliers, and the
/// two nonnegative representations of p^s alpha.
bool validate_witness(const SemigroupGens& t1, const SemigroupGens& t2, unsigned p,
                      const GluingWitness& w);

/// Leaf: free semigroup on linearly independent generators.
/// Node: p-gluing of children[0] (T1) and children[1] (T2).
struct GluingTree {
  SemigroupGens gens;
  std::optional<GluingWitness> witness;
  std::vector<GluingTree> children;

  bool is_leaf() const { return children.empty(); }
  std::size_t depth() const;
  bool operator==(const GluingTree&) const = default;
};

bool is_free(const SemigroupGens& gens);

struct GluingOptions {
  std::optional<unsigned> s_cap;           // default h + 8
  std::optional<std::uint64_t> peel_seed;  // randomize the peel order
};

struct GluingSearch {
  std::optional<GluingTree> tree;
  std::string failure;
  bool used_fallback = false;
};

/// When {q e_1, ..., q e_n} (q = p^h) is among the generators, peels one
/// other generator per level and validates each split; otherwise runs a
/// backtracking peel search over every choice.
GluingSearch completely_p_glued(const SemigroupGens& gens, unsigned p, unsigned h,
                                const GluingOptions& options = {});

/// Recursively revalidates every node with validate_witness and every leaf
/// for freeness; checks children partition the parent's generators.
bool validate_tree(const GluingTree& tree, unsigned p);

}  // namespace veronese
