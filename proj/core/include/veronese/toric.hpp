#pragma once

// Binomials of the toric ideal of the Veronese cone: the content criterion,
// the quadratic generating set, and certified rewriting of an arbitrary
// binomial into quadratic steps.

#include <stdexcept>
#include <string>
#include <vector>

#include "veronese/combinatorics.hpp"
#include "veronese/poly.hpp"

namespace veronese {

/// plus - minus
struct Binomial {
  Monomial plus;
  Monomial minus;

  bool is_zero() const { return plus == minus; }
  /// Orientation with the lex-larger monomial carrying +1. Returns the sign
  /// flip applied (+1 or -1).
  int normalize();
  Binomial normalized() const;

  Poly to_poly(const PrimeField& field, MonomialOrder order) const;
  IntPoly to_int_poly() const { return IntPoly::binomial(plus, minus); }

  bool operator==(const Binomial&) const = default;
  auto operator<=>(const Binomial&) const = default;
};

std::string format(const Binomial& b, const VeroneseRing& ring);
Binomial parse_binomial(const std::string& text, const VeroneseRing& ring);

/// m1 - m2 lies in I(V) iff the two monomials carry the same content.
bool binomial_in_ideal(const VeroneseRing& ring, const Monomial& m1, const Monomial& m2);

enum class GeneratorSet {
  Star,  // within each content class {m_1..m_k}: m_1 - m_j
  Full,  // all pairwise differences within a class
};

/// Quadratic binomials of I(V), normalized and deduplicated.
std::vector<Binomial> quadratic_generators(const VeroneseRing& ring,
                                           GeneratorSet set = GeneratorSet::Star);

/// Nonzero 2x2 minors of the symmetric n x n matrix (x_{min(i,j) max(i,j)}),
/// normalized and deduplicated. Requires a ring with q = 2.
std::vector<Binomial> symmetric_two_minors(const VeroneseRing& ring);

/// x_{block_1} ... x_{block_s} - (same with the flattened indices permuted).
struct TypeStarBinomial {
  std::vector<IndexTuple> blocks;
  std::vector<unsigned> sigma;  // 1-based images of 1..s*q

  std::size_t s() const { return blocks.size(); }
  std::vector<unsigned> flattened() const;
  /// Blocks of the permuted side, each re-sorted.
  std::vector<IndexTuple> permuted_blocks() const;
  Monomial left(const VeroneseRing& ring) const;
  Monomial right(const VeroneseRing& ring) const;
  void validate(const VeroneseRing& ring) const;
};

struct RewriteStep {
  Binomial quadratic;  // normalized element of the quadratic generating set
  Monomial cofactor;
  int sign = 1;
  bool operator==(const RewriteStep&) const = default;
};

/// sum(sign * cofactor * quadratic) = left - right.
struct RewriteCertificate {
  Monomial left;
  Monomial right;
  std::vector<RewriteStep> steps;
  bool operator==(const RewriteCertificate&) const = default;
};

class ZeroBinomialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expresses F as a telescoping sum of quadratic relations. Common block
/// factors are split off first; throws ZeroBinomialError when F = 0.
RewriteCertificate rewrite(const VeroneseRing& ring, const TypeStarBinomial& f);

/// Exact integer expansion of the certificate.
IntPoly expand(const RewriteCertificate& cert);

/// Expansion equals left - right and every step is a content-equal quadratic.
bool verify(const VeroneseRing& ring, const RewriteCertificate& cert);

/// Number of flattened positions whose index differs between the two sides
/// after matching blocks positionally.
std::size_t misplaced_indices(const TypeStarBinomial& f);

}  // namespace veronese
