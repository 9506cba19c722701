#pragma once

// Brute-force listings of finite groups and hom-sets. These are the
// oracles the linear-algebra routines are checked against, so they only
// rely on mixed-radix counting and the well-definedness rule.

#include "gammaseq/abelian/hom_group.hpp"

#include <vector>

namespace gammaseq {

namespace detail {

/// Calls fn(z) for every z in [0, radix_0) x [0, radix_1) x ..., first
/// coordinate varying slowest.
template <class Fn>
void for_each_mixed_radix(const std::vector<Integer>& radices, Fn&& fn) {
  std::vector<Integer> z(radices.size(), 0);
  for (const auto& r : radices)
    if (r == 0) return;
  for (;;) {
    fn(z);
    std::size_t k = z.size();
    while (k > 0) {
      --k;
      if (++z[k] < radices[k]) break;
      z[k] = 0;
      if (k == 0) return;
    }
    if (z.empty()) return;
  }
}

inline void check_cap(const Integer& count, const Integer& cap, const char* what) {
  if (count > cap) throw CapExceeded(std::string(what) + ": " + count.str() + " exceeds cap " + cap.str());
}

}  // namespace detail

inline std::vector<GroupElement> enumerate_elements(const FgAbGroup& g, const Integer& cap = default_enumeration_cap()) {
  if (!g.is_finite()) throw InfiniteGroup("enumerate_elements: " + g.to_string() + " is infinite");
  detail::check_cap(g.order(), cap, "enumerate_elements");
  std::vector<GroupElement> out;
  detail::for_each_mixed_radix(g.factors(), [&](const std::vector<Integer>& z) { out.emplace_back(g, z); });
  return out;
}

/// Every homomorphism G -> H, found by listing, for each generator of G,
/// the elements x of H with d * x = 0 and taking all combinations.
inline std::vector<Homomorphism> enumerate_homs(const FgAbGroup& g, const FgAbGroup& h,
                                                const Integer& cap = default_enumeration_cap()) {
  if (!g.is_finite() || !h.is_finite()) throw InfiniteGroup("enumerate_homs: groups must be finite");
  detail::check_cap(h.order(), cap, "enumerate_homs");
  const auto elements = enumerate_elements(h, cap);
  std::vector<std::vector<const GroupElement*>> allowed(g.num_factors());
  Integer total = 1;
  for (std::size_t i = 0; i < g.num_factors(); ++i) {
    for (const auto& x : elements) {
      bool killed = true;
      for (std::size_t j = 0; j < h.num_factors() && killed; ++j)
        killed = reduce(g.factor(i) * x.coords()[j], h.factor(j)) == 0;
      if (killed) allowed[i].push_back(&x);
    }
    total *= allowed[i].size();
  }
  detail::check_cap(total, cap, "enumerate_homs");
  std::vector<Integer> radices;
  for (const auto& a : allowed) radices.emplace_back(a.size());
  std::vector<Homomorphism> out;
  detail::for_each_mixed_radix(radices, [&](const std::vector<Integer>& z) {
    IntMatrix m(h.num_factors(), g.num_factors());
    for (std::size_t i = 0; i < g.num_factors(); ++i) {
      const auto& image = allowed[i][static_cast<std::size_t>(z[i])]->coords();
      for (std::size_t j = 0; j < h.num_factors(); ++j) m(j, i) = image[j];
    }
    out.emplace_back(g, h, std::move(m));
  });
  return out;
}

}  // namespace gammaseq
