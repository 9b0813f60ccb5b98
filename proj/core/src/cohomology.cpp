#include "veronese/cohomology.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace veronese {

namespace {

// moduli stay below 2^32 (checked in make), so products fit
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return (a % m) * (b % m) % m; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) acc = mulmod(acc, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return acc;
}

bool prime_power(std::uint64_t q, std::uint64_t& p, unsigned& h) {
  if (q < 2) return false;
  p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = q;
  h = 0;
  while (q % p == 0) {
    q /= p;
    ++h;
  }
  return q == 1;
}

std::uint64_t kernel_order(std::uint64_t m, std::uint64_t q) { return std::gcd(m % q, q); }
std::uint64_t image_order(std::uint64_t m, std::uint64_t q) { return q / kernel_order(m, q); }

}  // namespace

CyclicAction CyclicAction::make(std::uint64_t q, std::uint64_t a) {
  CyclicAction act;
  if (q >= (std::uint64_t{1} << 32)) throw std::invalid_argument("cyclic action: q too large");
  if (!prime_power(q, act.p, act.h))
    throw std::invalid_argument("cyclic action: q = " + std::to_string(q) + " is not a prime power");
  act.q = q;
  act.a = a % q;
  if (std::gcd(act.a, q) != 1)
    throw std::invalid_argument("cyclic action: a = " + std::to_string(a) + " is not a unit mod q");
  if (powmod(act.a, q, q) != 1 % q)
    throw std::invalid_argument("cyclic action: a^q != 1 mod q for a = " + std::to_string(a));
  // a^q = a^(p^h) = a (mod p) by Fermat, so the relation forces a = 1 (mod p)
  if (act.a % act.p != 1 % act.p) throw std::logic_error("cyclic action: a != 1 mod p");
  return act;
}

std::vector<std::uint64_t> admissible_actions(std::uint64_t q) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 1; a < q; ++a) {
    if (std::gcd(a, q) == 1 && powmod(a, q, q) == 1 % q) out.push_back(a);
  }
  return out;
}

CohomologyTable cohomology_orders(const CyclicAction& action, unsigned i_max) {
  const std::uint64_t q = action.q;
  CohomologyTable t;
  t.q = q;
  t.a = action.a;
  t.difference = (action.a + q - 1) % q;
  std::uint64_t power = 1;
  for (std::uint64_t j = 0; j < q; ++j) {
    t.norm = (t.norm + power) % q;
    power = mulmod(power, action.a, q);
  }
  // the complex is a complex: Nm * D = a^q - 1 = 0 in Z/q
  if (mulmod(t.norm, t.difference, q) != 0)
    throw std::logic_error("cyclic cohomology: Nm * D != 0 mod q");

  const std::uint64_t h0 = kernel_order(t.difference, q);
  const std::uint64_t odd = kernel_order(t.norm, q) / image_order(t.difference, q);
  const std::uint64_t even = kernel_order(t.difference, q) / image_order(t.norm, q);
  t.orders.push_back(h0);
  for (unsigned i = 1; i <= i_max; ++i) t.orders.push_back(i % 2 == 1 ? odd : even);
  return t;
}

std::uint64_t invariant_element(const CyclicAction& action) {
  std::uint64_t x = 1;
  for (unsigned i = 1; i < action.h; ++i) x *= action.p;
  x %= action.q;
  if (mulmod(action.a, x, action.q) != x)
    throw std::logic_error("invariant_element: p^(h-1) is not fixed by the action");
  return x;
}

}  // namespace veronese
