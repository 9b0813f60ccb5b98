#include "veronese/groebner.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace veronese {

Poly reduce(const Poly& f, std::span<const Poly> divisors) {
  const PrimeField& field = f.field();
  std::vector<Term> remainder;
  Poly h = f;
  while (!h.is_zero()) {
    const Term lead = h.leading_term();
    const Poly* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.is_zero()) continue;
      if (g.leading_monomial().divides(lead.monomial)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      h = h - Poly(field, h.order(), {lead});
      continue;
    }
    const Scalar c = field.mul(lead.coeff, field.inv(divisor->leading_term().coeff));
    h = h - divisor->times(divisor->leading_monomial().quotient_of(lead.monomial), c);
  }
  return Poly(field, f.order(), std::move(remainder));
}

Poly reduce(const Poly& f, const GroebnerBasis& gb) {
  if (!(f.field() == gb.field)) throw std::invalid_argument("reduce: field mismatch");
  if (f.order() != gb.order) return reduce(f.with_order(gb.order), gb.generators);
  return reduce(f, gb.generators);
}

bool ideal_contains(const GroebnerBasis& gb, const Poly& f) { return reduce(f, gb).is_zero(); }

Poly s_polynomial(const Poly& f, const Poly& g) {
  const Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  const PrimeField& field = f.field();
  const Poly a = f.times(f.leading_monomial().quotient_of(l), field.inv(f.leading_term().coeff));
  const Poly b = g.times(g.leading_monomial().quotient_of(l), field.inv(g.leading_term().coeff));
  return a - b;
}

namespace {

struct Pair {
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;
};

struct PairAfter {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  }
};

std::vector<Poly> minimize_and_reduce(std::vector<Poly> g, MonomialOrder order) {
  // drop generators whose leading monomial is divisible by another's
  std::sort(g.begin(), g.end(), [order](const Poly& a, const Poly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) < 0;
  });
  std::vector<Poly> minimal;
  for (auto& p : g) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Poly& m) {
      return m.leading_monomial().divides(p.leading_monomial());
    });
    if (!redundant) minimal.push_back(std::move(p));
  }

  std::vector<Poly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    const Poly& p = minimal[i];
    const Poly lead(p.field(), order, {p.leading_term()});
    const Poly tail = reduce(p - lead, others);
    reduced.push_back((lead + tail).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [order](const Poly& a, const Poly& b) {
    return compare(a.leading_monomial(), b.leading_monomial(), order) > 0;
  });
  return reduced;
}

}  // namespace

GroebnerBasis buchberger(std::span<const Poly> gens, MonomialOrder order,
                         const GroebnerOptions& options) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  const PrimeField field = gens.front().field();

  std::vector<Poly> basis;
  for (const auto& f : gens) {
    if (!(f.field() == field)) throw std::invalid_argument("buchberger: generators over different fields");
    if (f.is_zero()) continue;
    basis.push_back(f.with_order(order).monic());
  }
  if (basis.empty()) return GroebnerBasis{field, order, {}};

  std::priority_queue<Pair, std::vector<Pair>, PairAfter> pairs;
  auto push_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      const auto deg = basis[i].leading_monomial().lcm(basis[j].leading_monomial()).degree();
      pairs.push(Pair{deg, i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  std::size_t formed = 0;
  while (!pairs.empty()) {
    const Pair pr = pairs.top();
    pairs.pop();
    const Poly& f = basis[pr.i];
    const Poly& g = basis[pr.j];
    if (f.leading_monomial().coprime(g.leading_monomial())) continue;
    if (++formed > options.pair_limit)
      throw ResourceLimitError("buchberger: pair limit " + std::to_string(options.pair_limit) +
                               " exceeded");
    Poly r = reduce(s_polynomial(f, g), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs_for(basis.size() - 1);
  }

  return GroebnerBasis{field, order, minimize_and_reduce(std::move(basis), order)};
}

bool is_groebner_basis(std::span<const Poly> gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!reduce(s_polynomial(gens[i], gens[j]), gens).is_zero()) return false;
  return true;
}

}  // namespace veronese
