#pragma once

// Pointwise Jacobian rank of the toric ideal's generators (with the
// triangular N x N minor that certifies smoothness off the origin) and
// brute-force fibers of the parametrization over prime fields.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "veronese/combinatorics.hpp"
#include "veronese/toric.hpp"

namespace veronese {

using FieldMatrix = std::vector<std::vector<Scalar>>;

/// Rows: generators; columns: variables; entries: partial derivatives at w
/// (differentiated over Z, then reduced mod r).
FieldMatrix jacobian_matrix(const VeroneseRing& ring, const std::vector<Binomial>& generators,
                            const std::vector<Scalar>& w, const PrimeField& field);

std::size_t rank_mod(FieldMatrix m, const PrimeField& field);

/// Index permutation of 1..n stored 0-based: perm[i] is the image of i + 1, minus one.
using IndexPermutation = std::vector<unsigned>;

IndexTuple permute(const IndexPermutation& perm, const IndexTuple& t);

/// The N generators F_i = x_{1..1} x_i - x_{1..1 i_q} x_{1 i_1..i_{q-1}},
/// i in P minus {(1,..,1,k)}, written in coordinates relabelled by perm.
/// Rows come in ascending lex order of the unrelabelled tuple i.
std::vector<Binomial> triangular_generators(const VeroneseRing& ring, const IndexPermutation& perm);

/// Tuples of P' in ascending lex order.
std::vector<IndexTuple> reduced_index_set(const VeroneseRing& ring);

struct TriangularRowShape {
  IndexTuple row;
  IndexTuple second;         // (1, i_1, ..., i_{q-1})
  bool second_in_index_set;  // false: the off-diagonal entry is absent
  bool second_lex_smaller;
};

/// Structural shape of the N x N minor: where each row's off-diagonal entry sits.
std::vector<TriangularRowShape> triangular_shape(const VeroneseRing& ring);

struct JacobianReport {
  std::vector<Scalar> point;
  std::uint64_t r = 0;
  std::size_t rank = 0;
  std::size_t codimension = 0;
  IndexPermutation permutation;  // relabelling applied before building the minor
  bool triangular_submatrix_ok = false;
  Scalar diagonal_value = 0;
};

JacobianReport jacobian_rank(const VeroneseRing& ring, const std::vector<Binomial>& generators,
                             const std::vector<Scalar>& w, std::uint64_t r);

class RootOfUnityDeficiency : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Elements g of F_r^* with g^q = 1, ascending.
std::vector<Scalar> roots_of_unity(unsigned q, const PrimeField& field);

/// All v in F_r^n with phi(v) = phi(u), in lex order.
std::vector<std::vector<Scalar>> fiber_of(const VeroneseRing& ring, const PrimeField& field,
                                          const std::vector<Scalar>& u);

struct FiberReport {
  std::uint64_t r = 0;
  std::vector<Scalar> u;
  std::vector<Scalar> base;  // phi(u)
  std::vector<Scalar> roots;
  std::vector<std::vector<Scalar>> fiber;
  std::vector<std::vector<Scalar>> orbit;
  bool equal = false;
};

/// Requires r = 1 mod q (so F_r holds q distinct q-th roots of unity) and u != 0.
FiberReport fiber_check(const VeroneseRing& ring, std::uint64_t r, const std::vector<Scalar>& u);

}  // namespace veronese
