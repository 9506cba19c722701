#pragma once

#include "gammaseq/rings/finite_ring.hpp"

#include <string>
#include <vector>

namespace gammaseq {

/// R1 x R2 with componentwise tables; element (a, b) has index a * |R2| + b.
inline FiniteRing direct_product(const FiniteRing& r1, const FiniteRing& r2) {
  const std::size_t n1 = r1.order();
  const std::size_t n2 = r2.order();
  const std::size_t n = n1 * n2;
  if (n > FiniteRing::max_order) {
    throw CapExceeded("direct product of order " + std::to_string(n) + " exceeds the table cap");
  }
  std::vector<FiniteRing::Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a1 = 0; a1 < n1; ++a1)
    for (std::size_t a2 = 0; a2 < n2; ++a2) {
      const std::size_t a = a1 * n2 + a2;
      labels[a] = "(" + r1.label(a1) + ", " + r2.label(a2) + ")";
      for (std::size_t b1 = 0; b1 < n1; ++b1)
        for (std::size_t b2 = 0; b2 < n2; ++b2) {
          const std::size_t b = b1 * n2 + b2;
          add[a * n + b] = static_cast<FiniteRing::Index>(r1.add(a1, b1) * n2 + r2.add(a2, b2));
          mul[a * n + b] = static_cast<FiniteRing::Index>(r1.mul(a1, b1) * n2 + r2.mul(a2, b2));
        }
    }
  return FiniteRing(n, std::move(add), std::move(mul), r1.zero() * n2 + r2.zero(), r1.one() * n2 + r2.one(),
                    std::move(labels));
}

/// Does the index map f : R -> S preserve +, x and 1?
inline bool is_ring_homomorphism(const FiniteRing& r, const FiniteRing& s, const std::vector<std::size_t>& f) {
  if (f.size() != r.order()) return false;
  for (auto x : f)
    if (x >= s.order()) return false;
  if (f[r.one()] != s.one()) return false;
  for (std::size_t a = 0; a < r.order(); ++a)
    for (std::size_t b = 0; b < r.order(); ++b) {
      if (f[r.add(a, b)] != s.add(f[a], f[b])) return false;
      if (f[r.mul(a, b)] != s.mul(f[a], f[b])) return false;
    }
  return true;
}

/// R1 x_Z R2 = {(r1, r2) | f1(r1) = f2(r2)} for unital ring maps into Z.
/// Elements are listed in the order of the direct product.
inline FiniteRing pullback(const FiniteRing& r1, const FiniteRing& r2, const FiniteRing& z,
                           const std::vector<std::size_t>& f1, const std::vector<std::size_t>& f2) {
  if (!is_ring_homomorphism(r1, z, f1)) throw RingAxiomError("pullback: f1 is not a unital ring homomorphism");
  if (!is_ring_homomorphism(r2, z, f2)) throw RingAxiomError("pullback: f2 is not a unital ring homomorphism");
  const std::size_t n2 = r2.order();
  std::vector<std::size_t> members;
  std::vector<long> index_of(r1.order() * n2, -1);
  for (std::size_t a = 0; a < r1.order(); ++a)
    for (std::size_t b = 0; b < n2; ++b)
      if (f1[a] == f2[b]) {
        index_of[a * n2 + b] = static_cast<long>(members.size());
        members.push_back(a * n2 + b);
      }
  const std::size_t n = members.size();
  if (n > FiniteRing::max_order) throw CapExceeded("pullback exceeds the table cap");
  std::vector<FiniteRing::Index> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  auto at = [&](std::size_t a, std::size_t b) { return static_cast<FiniteRing::Index>(index_of[a * n2 + b]); };
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a1 = members[i] / n2, a2 = members[i] % n2;
    labels[i] = "(" + r1.label(a1) + ", " + r2.label(a2) + ")";
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t b1 = members[j] / n2, b2 = members[j] % n2;
      add[i * n + j] = at(r1.add(a1, b1), r2.add(a2, b2));
      mul[i * n + j] = at(r1.mul(a1, b1), r2.mul(a2, b2));
    }
  }
  return FiniteRing(n, std::move(add), std::move(mul), static_cast<std::size_t>(at(r1.zero(), r2.zero())),
                    static_cast<std::size_t>(at(r1.one(), r2.one())), std::move(labels));
}

}  // namespace gammaseq
