#pragma once

#include "gammaseq/abelian/integer.hpp"
#include "gammaseq/rings/finite_ring.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace gammaseq {

/// Isomorphism-invariant fingerprint of a finite ring.
struct RingInvariants {
  std::uint64_t order = 1;
  std::uint64_t characteristic = 1;
  bool is_commutative = true;
  std::uint64_t unit_count = 1;
  std::uint64_t idempotent_count = 1;
  std::vector<std::uint64_t> additive_invariant_factors;  ///< of (R, +), divisibility chain

  friend bool operator==(const RingInvariants&, const RingInvariants&) = default;
  friend auto operator<=>(const RingInvariants&, const RingInvariants&) = default;

  std::string to_string() const {
    std::string add = "0";
    if (!additive_invariant_factors.empty()) {
      add.clear();
      for (auto d : additive_invariant_factors) add += (add.empty() ? "Z/" : " + Z/") + std::to_string(d);
    }
    return "order=" + std::to_string(order) + " char=" + std::to_string(characteristic) +
           (is_commutative ? " commutative" : " non-commutative") + " units=" + std::to_string(unit_count) +
           " idempotents=" + std::to_string(idempotent_count) + " additive=" + add;
  }
};

/// Invariant factors of a finite abelian group from the orders of all of its
/// elements: for each prime p the count of elements killed by p^j fixes
/// the p-primary partition.
inline std::vector<std::uint64_t> invariant_factors_from_element_orders(const std::vector<std::uint64_t>& orders) {
  const std::uint64_t n = orders.size();
  std::vector<std::uint64_t> result;
  if (n <= 1) return result;
  // per prime: exponents of cyclic factors, largest first
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> primary;
  for (const auto& [p_big, e_total] : factorize(Integer(n))) {
    const auto p = static_cast<std::uint64_t>(p_big);
    std::vector<unsigned> log_counts;  // log_p #{x : p^j x = 0}
    std::uint64_t pj = 1;
    for (unsigned j = 0;; ++j) {
      std::uint64_t count = 0;
      for (auto o : orders)
        if (pj % o == 0) ++count;
      unsigned s = 0;
      for (std::uint64_t c = count; c > 1; c /= p) ++s;
      log_counts.push_back(s);
      if (s == e_total) break;
      pj *= p;
    }
    // number of cyclic factors of order >= p^j is s_j - s_{j-1}
    std::vector<unsigned> exps;
    for (std::size_t j = log_counts.size() - 1; j >= 1; --j) {
      const unsigned at_least_j = log_counts[j] - log_counts[j - 1];
      const unsigned at_least_next = j + 1 < log_counts.size() ? log_counts[j + 1] - log_counts[j] : 0;
      for (unsigned k = at_least_next; k < at_least_j; ++k) exps.push_back(static_cast<unsigned>(j));
    }
    primary.emplace_back(p, std::move(exps));
  }
  std::size_t length = 0;
  for (const auto& [p, exps] : primary) length = std::max(length, exps.size());
  result.assign(length, 1);
  for (const auto& [p, exps] : primary)
    for (std::size_t k = 0; k < exps.size(); ++k) {
      std::uint64_t q = 1;
      for (unsigned e = 0; e < exps[k]; ++e) q *= p;
      result[k] *= q;  // k-th largest
    }
  std::reverse(result.begin(), result.end());
  return result;
}

/// Exact invariants by exhaustive scan of the tables.
inline RingInvariants ring_invariants(const FiniteRing& r) {
  RingInvariants inv;
  const std::size_t n = r.order();
  inv.order = n;
  inv.characteristic = r.additive_order(r.one());
  inv.is_commutative = true;
  for (std::size_t a = 0; a < n && inv.is_commutative; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (r.mul(a, b) != r.mul(b, a)) {
        inv.is_commutative = false;
        break;
      }
  inv.unit_count = 0;
  inv.idempotent_count = 0;
  for (std::size_t a = 0; a < n; ++a) {
    if (r.mul(a, a) == a) ++inv.idempotent_count;
    for (std::size_t b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        ++inv.unit_count;
        break;
      }
  }
  std::vector<std::uint64_t> orders(n);
  for (std::size_t a = 0; a < n; ++a) orders[a] = r.additive_order(a);
  inv.additive_invariant_factors = invariant_factors_from_element_orders(orders);
  return inv;
}

/// R = F_p^k iff |R| = p^k, R commutative, p x = 0 and x^p = x for all x.
/// Sufficient because a finite commutative unital ring in which x^p = x
/// holds is reduced, hence a product of finite fields, each of which has
/// every element a root of x^p - x and so equals F_p.
inline bool is_product_of_prime_fields(const FiniteRing& r, std::uint64_t p, std::uint64_t k) {
  if (!is_prime(Integer(p))) throw PreconditionError("is_product_of_prime_fields: " + std::to_string(p) + " is not prime");
  Integer expected = 1;
  for (std::uint64_t i = 0; i < k; ++i) expected *= p;
  if (Integer(r.order()) != expected) return false;
  const std::size_t n = r.order();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (r.mul(a, b) != r.mul(b, a)) return false;
  for (std::size_t a = 0; a < n; ++a) {
    if (r.scale(p, a) != r.zero()) return false;
    if (r.power(a, p) != a) return false;
  }
  return true;
}

}  // namespace gammaseq
