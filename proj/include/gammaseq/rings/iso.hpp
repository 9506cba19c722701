#pragma once

#include "gammaseq/rings/invariants.hpp"
#include "gammaseq/rings/products.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace gammaseq {

/// Is `map` a bijective unital ring homomorphism a -> b?
inline bool verify_isomorphism(const FiniteRing& a, const FiniteRing& b, const std::vector<std::size_t>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (auto y : map) {
    if (y >= b.order() || hit[y]) return false;
    hit[y] = true;
  }
  return is_ring_homomorphism(a, b, map);
}

namespace detail {

// Per-element data that any ring isomorphism preserves.
inline std::vector<std::tuple<std::size_t, bool, bool, std::size_t, std::size_t>> element_signatures(
    const FiniteRing& r) {
  const std::size_t n = r.order();
  std::vector<std::tuple<std::size_t, bool, bool, std::size_t, std::size_t>> sig(n);
  for (std::size_t x = 0; x < n; ++x) {
    bool unit = false;
    for (std::size_t y = 0; y < n && !unit; ++y) unit = r.mul(x, y) == r.one() && r.mul(y, x) == r.one();
    std::size_t annihilated_by = 0;  // |{y : xy = 0}|
    for (std::size_t y = 0; y < n; ++y) annihilated_by += r.mul(x, y) == r.zero();
    sig[x] = {r.additive_order(x), r.mul(x, x) == x, unit, annihilated_by, r.additive_order(r.mul(x, x))};
  }
  return sig;
}

struct IsoSearch {
  const FiniteRing& a;
  const FiniteRing& b;
  std::vector<std::size_t> gens;
  std::vector<std::tuple<std::size_t, bool, bool, std::size_t, std::size_t>> sig_a, sig_b;

  // Extends `map` (defined on the span of the placed generators) by g -> y.
  bool extend(std::vector<long>& map, std::vector<bool>& used, std::size_t g, std::size_t y) const {
    std::vector<std::size_t> domain;
    for (std::size_t x = 0; x < a.order(); ++x)
      if (map[x] >= 0) domain.push_back(x);
    std::size_t cg = g, cy = y;
    for (std::size_t c = 1; c < a.additive_order(g); ++c) {
      for (auto h : domain) {
        const std::size_t x = a.add(h, cg);
        const std::size_t v = b.add(static_cast<std::size_t>(map[h]), cy);
        if (map[x] >= 0) {
          if (static_cast<std::size_t>(map[x]) != v) return false;
          continue;
        }
        if (used[v]) return false;
        map[x] = static_cast<long>(v);
        used[v] = true;
      }
      cg = a.add(cg, g);
      cy = b.add(cy, y);
    }
    // multiplicativity wherever the product already lies in the domain
    for (std::size_t x = 0; x < a.order(); ++x) {
      if (map[x] < 0) continue;
      for (std::size_t z = 0; z < a.order(); ++z) {
        if (map[z] < 0) continue;
        const long p = map[a.mul(x, z)];
        if (p >= 0 && static_cast<std::size_t>(p) != b.mul(static_cast<std::size_t>(map[x]), static_cast<std::size_t>(map[z])))
          return false;
      }
    }
    return true;
  }

  bool search(std::size_t k, std::vector<long>& map, std::vector<bool>& used) const {
    if (k == gens.size()) return true;
    const std::size_t g = gens[k];
    for (std::size_t y = 0; y < b.order(); ++y) {
      if (sig_a[g] != sig_b[y]) continue;
      if (k == 0 && y != b.one()) continue;
      auto trial_map = map;
      auto trial_used = used;
      if (!extend(trial_map, trial_used, g, y)) continue;
      if (search(k + 1, trial_map, trial_used)) {
        map = std::move(trial_map);
        used = std::move(trial_used);
        return true;
      }
    }
    return false;
  }
};

}  // namespace detail

/// Backtracking search for a ring isomorphism, placing images of a greedy
/// additive generating set (starting with 1). Returns the element map or
/// nullopt; distinct fingerprints short-circuit to nullopt.
inline std::optional<std::vector<std::size_t>> brute_iso(const FiniteRing& a, const FiniteRing& b) {
  constexpr std::size_t cap = 81;
  if (a.order() > cap || b.order() > cap) throw CapExceeded("brute_iso is limited to rings of order <= 81");
  if (a.order() != b.order()) return std::nullopt;
  if (ring_invariants(a) != ring_invariants(b)) return std::nullopt;

  detail::IsoSearch s{a, b, {}, detail::element_signatures(a), detail::element_signatures(b)};
  // greedy additive generators
  std::vector<bool> in_span(a.order(), false);
  in_span[a.zero()] = true;
  auto absorb = [&](std::size_t g) {
    std::vector<std::size_t> current;
    for (std::size_t x = 0; x < a.order(); ++x)
      if (in_span[x]) current.push_back(x);
    std::size_t cg = g;
    for (std::size_t c = 1; c < a.additive_order(g); ++c, cg = a.add(cg, g))
      for (auto h : current) in_span[a.add(h, cg)] = true;
  };
  if (a.order() > 1) {
    s.gens.push_back(a.one());
    absorb(a.one());
  }
  for (std::size_t x = 0; x < a.order(); ++x)
    if (!in_span[x]) {
      s.gens.push_back(x);
      absorb(x);
    }

  std::vector<long> map(a.order(), -1);
  std::vector<bool> used(b.order(), false);
  map[a.zero()] = static_cast<long>(b.zero());
  used[b.zero()] = true;
  if (!s.search(0, map, used)) return std::nullopt;
  std::vector<std::size_t> out(a.order());
  for (std::size_t x = 0; x < a.order(); ++x) out[x] = static_cast<std::size_t>(map[x]);
  if (!verify_isomorphism(a, b, out)) return std::nullopt;
  return out;
}

}  // namespace gammaseq
