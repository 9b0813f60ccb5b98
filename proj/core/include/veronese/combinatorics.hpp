#pragma once

// The exponent set T of degree-q monomials in n parameters, the index
// tuples naming the coordinates of the Veronese cone, and the ring whose
// variables they are.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "veronese/lattice.hpp"
#include "veronese/poly.hpp"

namespace veronese {

inline constexpr unsigned kDefaultQCap = 16;

struct VeroneseParams {
  unsigned n = 0;
  unsigned p = 0;
  unsigned h = 0;
  unsigned q = 0;  // p^h

  /// Validates p prime, h >= 1, n >= 1, p^h <= q_cap. Throws std::invalid_argument.
  static VeroneseParams make(unsigned n, unsigned p, unsigned h, unsigned q_cap = kDefaultQCap);

  /// Human-readable caveats (e.g. n < 3, where the cohomological argument does not apply).
  std::vector<std::string> warnings() const;

  bool operator==(const VeroneseParams&) const = default;
};

/// Weakly increasing q-tuple over {1..n}.
struct IndexTuple {
  std::vector<unsigned> idx;
  auto operator<=>(const IndexTuple&) const = default;
};

/// Point of T: nonnegative exponents a_1..a_n.
struct ExponentVector {
  std::vector<unsigned> a;
  unsigned sum() const;
  auto operator<=>(const ExponentVector&) const = default;
};

/// Multiset of parameters u_j (with repetition) carried by a monomial.
struct Content {
  std::vector<std::uint64_t> mult;
  Content& operator+=(const Content& other);
  friend Content operator+(Content a, const Content& b) { return a += b; }
  std::uint64_t total() const;
  bool operator==(const Content&) const = default;
  auto operator<=>(const Content&) const = default;
};

Integer binomial_coefficient(unsigned n, unsigned k);

struct TListing {
  std::vector<ExponentVector> exponents;
  std::vector<IndexTuple> tuples;  // ascending lexicographic order
};

/// All compositions of q into n parts, listed by ascending index tuple.
TListing enumerate_T(unsigned n, unsigned q);

IndexTuple tuple_of(const ExponentVector& a);
ExponentVector exponent_of(const IndexTuple& t, unsigned n);
bool is_valid_tuple(const IndexTuple& t, unsigned n, unsigned q);

/// Name of the coordinate x_t: digits concatenated for n <= 9, braces and
/// commas beyond (x{10,10}).
std::string tuple_name(const IndexTuple& t, unsigned n);

/// Polynomial ring whose variables are the index tuples of P in ascending
/// lexicographic order (VarId 0 = (1,...,1)).
class VeroneseRing {
 public:
  explicit VeroneseRing(const VeroneseParams& params);
  /// Ring for an arbitrary degree q (need not be a prime power).
  VeroneseRing(unsigned n, unsigned q);

  unsigned n() const { return n_; }
  unsigned q() const { return q_; }
  std::size_t num_vars() const { return listing_.tuples.size(); }

  const TListing& listing() const { return listing_; }
  const IndexTuple& tuple(VarId v) const { return listing_.tuples.at(v); }
  const ExponentVector& exponent(VarId v) const { return listing_.exponents.at(v); }
  VarId var(const IndexTuple& t) const;
  std::optional<VarId> find_var(const IndexTuple& t) const;
  /// Variable x_{j...j}, j in 1..n.
  VarId pure_var(unsigned j) const;
  bool is_pure(VarId v) const;

  std::string var_name(VarId v) const;
  VarNamer namer() const;
  std::string format(const Monomial& m) const;
  /// Parses "x12^2*x33" (or "1") into a monomial of this ring.
  Monomial parse_monomial(std::string_view text) const;

  Content content_of(const Monomial& m) const;
  Content content_of(VarId v) const;

  /// Coordinates of the parametrization at u, over F_r.
  std::vector<Scalar> parametrize(const std::vector<Scalar>& u, const PrimeField& field) const;

 private:
  unsigned n_;
  unsigned q_;
  TListing listing_;
  std::unordered_map<std::string, VarId> lookup_;
};

}  // namespace veronese
