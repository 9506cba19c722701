#pragma once

#include "gammaseq/rings/finite_ring.hpp"

#include <vector>

namespace gammaseq {

/// Group of units of a finite ring. `elements` are ring indices in
/// increasing order; `table` and `inverse` use positions in `elements`.
struct UnitGroup {
  std::vector<std::size_t> elements;
  std::vector<std::size_t> table;  ///< order x order, position of a * b
  std::vector<std::size_t> inverse;
  std::size_t identity = 0;

  std::size_t order() const noexcept { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a * elements.size() + b]; }
  bool is_trivial() const noexcept { return elements.size() == 1; }
};

inline UnitGroup unit_group(const FiniteRing& r) {
  UnitGroup g;
  const std::size_t n = r.order();
  std::vector<long> pos(n, -1);
  std::vector<std::size_t> inv_ring;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (r.mul(a, b) == r.one() && r.mul(b, a) == r.one()) {
        pos[a] = static_cast<long>(g.elements.size());
        g.elements.push_back(a);
        inv_ring.push_back(b);
        break;
      }
  const std::size_t k = g.elements.size();
  g.table.resize(k * k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = 0; y < k; ++y) g.table[x * k + y] = static_cast<std::size_t>(pos[r.mul(g.elements[x], g.elements[y])]);
  for (std::size_t x = 0; x < k; ++x) g.inverse.push_back(static_cast<std::size_t>(pos[inv_ring[x]]));
  g.identity = static_cast<std::size_t>(pos[r.one()]);
  return g;
}

}  // namespace gammaseq
