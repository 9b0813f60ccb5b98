#include "veronese/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace veronese {

bool is_prime(std::uint64_t r) {
  if (r < 2) return false;
  for (std::uint64_t d = 2; d * d <= r; ++d)
    if (r % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t r) : r_(r) {
  if (r >= (std::uint64_t{1} << 31)) throw std::invalid_argument("PrimeField: modulus too large");
  if (!is_prime(r)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(r) + " is not prime");
}

Scalar PrimeField::reduce(std::int64_t x) const {
  const auto r = static_cast<std::int64_t>(r_);
  std::int64_t m = x % r;
  if (m < 0) m += r;
  return static_cast<Scalar>(m);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const {
  Scalar base = a % r_;
  Scalar acc = 1 % r_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % r_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, r_ - 2);
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (const auto& [v, e] : entries) {
    if (e == 0) continue;
    if (!entries_.empty() && entries_.back().first == v)
      entries_.back().second += e;
    else
      entries_.emplace_back(v, e);
  }
}

Monomial Monomial::var(VarId v, Exponent e) { return Monomial({{v, e}}); }

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

Exponent Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{v, 0});
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::pow(std::uint64_t k) const {
  if (k == 0) return {};
  Monomial out = *this;
  for (auto& [v, e] : out.entries_) e = static_cast<Exponent>(e * k);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first < v) ++b;
    if (b == other.entries_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  auto a = entries_.begin();
  for (const auto& [v, e] : other.entries_) {
    while (a != entries_.end() && a->first < v) ++a;
    Exponent sub = (a != entries_.end() && a->first == v) ? a->second : 0;
    if (sub > e) throw std::invalid_argument("Monomial: quotient is not a monomial");
    if (e > sub) out.entries_.emplace_back(v, e - sub);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.entries_.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.entries_.push_back(*b++);
    } else {
      out.entries_.emplace_back(a->first, std::max(a->second, b->second));
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial out;
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first < v) ++b;
    if (b != other.entries_.end() && b->first == v) out.entries_.emplace_back(v, std::min(e, b->second));
  }
  return out;
}

bool Monomial::coprime(const Monomial& other) const {
  auto b = other.entries_.begin();
  for (const auto& [v, e] : entries_) {
    while (b != other.entries_.end() && b->first < v) ++b;
    if (b != other.entries_.end() && b->first == v) return false;
  }
  return true;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  if (order == MonomialOrder::Lex) {
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i].first == eb[j].first) {
        if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second ? 1 : -1;
        ++i;
        ++j;
      } else {
        // the monomial holding the smaller (= larger-ranked) variable wins
        return ea[i].first < eb[j].first ? 1 : -1;
      }
    }
    if (i < ea.size()) return 1;
    if (j < eb.size()) return -1;
    return 0;
  }

  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  std::size_t i = ea.size(), j = eb.size();
  while (i > 0 && j > 0) {
    const auto& x = ea[i - 1];
    const auto& y = eb[j - 1];
    if (x.first == y.first) {
      if (x.second != y.second) return x.second < y.second ? 1 : -1;
      --i;
      --j;
    } else {
      // the monomial using the later variable has the larger exponent there
      return x.first > y.first ? -1 : 1;
    }
  }
  if (i > 0) return -1;
  if (j > 0) return 1;
  return 0;
}

std::string default_var_name(VarId v) { return "x" + std::to_string(v); }

std::string format(const Monomial& m, const VarNamer& name) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.entries()) {
    if (!out.empty()) out += '*';
    out += name(v);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

Poly::Poly(PrimeField field, MonomialOrder order) : field_(field), order_(order) {}

Poly::Poly(PrimeField field, MonomialOrder order, std::vector<Term> terms)
    : field_(field), order_(order), terms_(std::move(terms)) {
  normalize();
}

Poly Poly::constant(PrimeField field, MonomialOrder order, std::int64_t c) {
  return Poly(field, order, {Term{Monomial{}, field.reduce(c)}});
}

Poly Poly::monomial(PrimeField field, MonomialOrder order, const Monomial& m, std::int64_t c) {
  return Poly(field, order, {Term{m, field.reduce(c)}});
}

Poly Poly::binomial(PrimeField field, MonomialOrder order, const Monomial& m1,
                    const Monomial& m2) {
  return Poly(field, order, {Term{m1, 1}, Term{m2, field.neg(1)}});
}

void Poly::normalize() {
  for (auto& t : terms_) t.coeff %= field_.modulus();
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return compare(a.monomial, b.monomial, order_) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().monomial == t.monomial)
      merged.back().coeff = field_.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

void Poly::check_compatible(const Poly& other) const {
  if (!(field_ == other.field_))
    throw std::invalid_argument("Poly: operands over different prime fields");
  if (order_ != other.order_) throw std::invalid_argument("Poly: operands use different orders");
}

Poly Poly::operator+(const Poly& other) const {
  check_compatible(other);
  Poly out(field_, order_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int c;
    if (a == terms_.end())
      c = -1;
    else if (b == other.terms_.end())
      c = 1;
    else
      c = compare(a->monomial, b->monomial, order_);
    if (c > 0) {
      out.terms_.push_back(*a++);
    } else if (c < 0) {
      out.terms_.push_back(*b++);
    } else {
      Scalar s = field_.add(a->coeff, b->coeff);
      if (s != 0) out.terms_.push_back(Term{a->monomial, s});
      ++a;
      ++b;
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = field_.neg(t.coeff);
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  check_compatible(other);
  std::map<Monomial, Scalar> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) {
      auto& slot = acc[a.monomial * b.monomial];
      slot = field_.add(slot, field_.mul(a.coeff, b.coeff));
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back(Term{m, c});
  return Poly(field_, order_, std::move(terms));
}

Poly Poly::scaled(Scalar c) const {
  c %= field_.modulus();
  if (c == 0) return Poly(field_, order_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = field_.mul(t.coeff, c);
  return out;
}

Poly Poly::times(const Monomial& m, Scalar c) const {
  c %= field_.modulus();
  if (c == 0) return Poly(field_, order_);
  Poly out = *this;
  // multiplying by a monomial preserves the term order
  for (auto& t : out.terms_) {
    t.monomial = t.monomial * m;
    t.coeff = field_.mul(t.coeff, c);
  }
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(terms_.front().coeff));
}

Poly Poly::with_order(MonomialOrder order) const { return Poly(field_, order, terms_); }

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  Scalar acc = 0;
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (const auto& [var, e] : t.monomial.entries()) {
      if (var >= point.size()) throw std::out_of_range("Poly::evaluate: point too short");
      v = field_.mul(v, field_.pow(point[var], e));
    }
    acc = field_.add(acc, v);
  }
  return acc;
}

bool Poly::operator==(const Poly& other) const {
  if (!(field_ == other.field_)) return false;
  if (order_ != other.order_) return terms_ == other.with_order(order_).terms_;
  return terms_ == other.terms_;
}

std::string format(const Poly& f, const VarNamer& name) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto r = f.field().modulus();
  for (const auto& t : f.terms()) {
    // print r-1 as a minus sign, which reads naturally for binomials
    const bool negative = r > 2 && t.coeff == r - 1;
    const Scalar mag = negative ? 1 : t.coeff;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (t.monomial.is_one()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += format(t.monomial, name);
    }
  }
  return out;
}

Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned k) {
  if (f.field().characteristic() != p)
    throw std::invalid_argument("frobenius_power: field characteristic " +
                                std::to_string(f.field().characteristic()) + " differs from p = " +
                                std::to_string(p));
  std::uint64_t e = 1;
  for (unsigned i = 0; i < k; ++i) e *= p;
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back(Term{t.monomial.pow(e), f.field().pow(t.coeff, e)});
  return Poly(f.field(), f.order(), std::move(terms));
}

// ---------------------------------------------------------------------------

IntPoly IntPoly::binomial(const Monomial& m1, const Monomial& m2) {
  IntPoly out;
  out.add_term(m1, 1);
  out.add_term(m2, -1);
  return out;
}

void IntPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
  IntPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

IntPoly IntPoly::operator-(const IntPoly& other) const {
  IntPoly out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
  return out;
}

IntPoly IntPoly::times(const Monomial& m, const Integer& c) const {
  IntPoly out;
  if (c == 0) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono * m, coeff * c);
  return out;
}

IntPoly IntPoly::derivative(VarId v) const {
  IntPoly out;
  for (const auto& [m, c] : terms_) {
    const Exponent e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(Monomial::var(v).quotient_of(m), c * e);
  }
  return out;
}

}  // namespace veronese
