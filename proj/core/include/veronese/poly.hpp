#pragma once

// Prime-field scalars and sparse multivariate polynomials.
//
// Variables are dense indices into an ambient variable list owned by the
// caller (for the Veronese rings: the ascending-lex list of index tuples).
// Index 0 is the largest variable in every order.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "veronese/lattice.hpp"

namespace veronese {

using VarId = std::uint32_t;
using Exponent = std::uint32_t;
using Scalar = std::uint64_t;

/// Z/r for a prime r < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t r);

  std::uint64_t modulus() const { return r_; }
  std::uint64_t characteristic() const { return r_; }

  Scalar reduce(std::int64_t x) const;
  Scalar add(Scalar a, Scalar b) const { return (a + b) % r_; }
  Scalar sub(Scalar a, Scalar b) const { return (a + r_ - b) % r_; }
  Scalar mul(Scalar a, Scalar b) const { return (a * b) % r_; }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : r_ - a; }
  Scalar pow(Scalar a, std::uint64_t e) const;
  Scalar inv(Scalar a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint64_t r_;
};

bool is_prime(std::uint64_t r);

/// Sparse power product: (variable, exponent) pairs sorted by variable, no
/// zero exponents.
class Monomial {
 public:
  using Entry = std::pair<VarId, Exponent>;

  Monomial() = default;
  /// Accepts unsorted input with repeats; zero exponents are dropped.
  explicit Monomial(std::vector<Entry> entries);
  static Monomial var(VarId v, Exponent e = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_one() const { return entries_.empty(); }
  std::uint64_t degree() const;
  Exponent exponent(VarId v) const;

  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Entry> entries_;
};

enum class MonomialOrder { Lex, DegRevLex };

/// Three-way comparison in the given order; positive when a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

using VarNamer = std::function<std::string(VarId)>;
std::string default_var_name(VarId v);
std::string format(const Monomial& m, const VarNamer& name = default_var_name);

struct Term {
  Monomial monomial;
  Scalar coeff;
  bool operator==(const Term&) const = default;
};

/// Polynomial over a prime field. Terms are kept sorted by decreasing
/// monomial in the polynomial's order, with nonzero coefficients only.
class Poly {
 public:
  Poly(PrimeField field, MonomialOrder order);
  Poly(PrimeField field, MonomialOrder order, std::vector<Term> terms);

  static Poly constant(PrimeField field, MonomialOrder order, std::int64_t c);
  static Poly monomial(PrimeField field, MonomialOrder order, const Monomial& m,
                       std::int64_t c = 1);
  /// m1 - m2
  static Poly binomial(PrimeField field, MonomialOrder order, const Monomial& m1,
                       const Monomial& m2);

  const PrimeField& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator-() const;
  Poly operator*(const Poly& other) const;
  Poly scaled(Scalar c) const;
  Poly times(const Monomial& m, Scalar c) const;
  Poly monic() const;
  /// Same terms re-sorted under another order.
  Poly with_order(MonomialOrder order) const;

  /// Evaluates at a point given as field elements indexed by variable.
  Scalar evaluate(const std::vector<Scalar>& point) const;

  bool operator==(const Poly& other) const;

 private:
  void check_compatible(const Poly& other) const;
  void normalize();

  PrimeField field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

std::string format(const Poly& f, const VarNamer& name = default_var_name);

/// f^(p^k), computed termwise. Requires char(f.field()) == p.
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned k);

/// Integer-coefficient polynomial, used for exact identity checks.
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly binomial(const Monomial& m1, const Monomial& m2);

  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Integer& c);
  IntPoly operator+(const IntPoly& other) const;
  IntPoly operator-(const IntPoly& other) const;
  IntPoly times(const Monomial& m, const Integer& c) const;
  /// Formal partial derivative.
  IntPoly derivative(VarId v) const;

  bool operator==(const IntPoly&) const = default;

 private:
  std::map<Monomial, Integer> terms_;
};

}  // namespace veronese
