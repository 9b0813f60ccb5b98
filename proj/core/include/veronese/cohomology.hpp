#pragma once

// Cohomology of a cyclic group G of order q = p^h acting on Z/q by
// multiplication, through the 2-periodic resolution
//   0 -> A --D--> A --Nm--> A --D--> A -> ...
// with D = a - 1 and Nm = 1 + a + ... + a^(q-1).

#include <cstdint>
#include <vector>

namespace veronese {

struct CyclicAction {
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  std::uint64_t p = 0;  // the prime with q = p^h
  unsigned h = 0;

  /// Requires q a prime power, gcd(a, q) = 1 and a^q = 1 (mod q).
  static CyclicAction make(std::uint64_t q, std::uint64_t a);
};

/// All a in [1, q) giving a valid action.
std::vector<std::uint64_t> admissible_actions(std::uint64_t q);

struct CohomologyTable {
  std::uint64_t q = 0;
  std::uint64_t a = 0;
  std::uint64_t norm = 0;        // Nm mod q
  std::uint64_t difference = 0;  // D mod q
  std::vector<std::uint64_t> orders;  // |H^i| for i = 0..i_max
};

/// Orders from |ker(x -> m x)| = gcd(m, q) and |im| = q / gcd(m, q).
CohomologyTable cohomology_orders(const CyclicAction& action, unsigned i_max = 6);

/// p^(h-1) mod q, a G-fixed nonzero class of Z/q.
std::uint64_t invariant_element(const CyclicAction& action);

}  // namespace veronese
