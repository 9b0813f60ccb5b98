#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "veronese/poly.hpp"

namespace veronese {

/// Raised when a configured work cap (pairs, points, search depth) is hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GroebnerOptions {
  std::size_t pair_limit = 2'000'000;  // S-polynomials formed before giving up
};

/// Reduced Groebner basis: monic, tail-reduced, sorted by decreasing
/// leading monomial.
struct GroebnerBasis {
  PrimeField field;
  MonomialOrder order;
  std::vector<Poly> generators;
};

/// Full normal form of f modulo the divisors (leading terms taken in f's order).
Poly reduce(const Poly& f, std::span<const Poly> divisors);
Poly reduce(const Poly& f, const GroebnerBasis& gb);

bool ideal_contains(const GroebnerBasis& gb, const Poly& f);

Poly s_polynomial(const Poly& f, const Poly& g);

/// Buchberger completion with the coprime-leading-term criterion, followed
/// by reduction. Throws ResourceLimitError past options.pair_limit.
GroebnerBasis buchberger(std::span<const Poly> gens, MonomialOrder order,
                         const GroebnerOptions& options = {});

/// Checks that every S-polynomial of the generators reduces to zero.
bool is_groebner_basis(std::span<const Poly> gens);

}  // namespace veronese
