#pragma once

#include "gammaseq/abelian/group.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace gammaseq {

/// Every finite abelian group of order <= max_order, one per isomorphism
/// class. Sorted by order, then by number of factors, then lexicographically:
/// 0, Z/2, Z/3, Z/4, Z/2 + Z/2, ...
inline std::vector<FgAbGroup> enumerate_groups(std::uint64_t max_order) {
  if (max_order < 1) throw PreconditionError("enumerate_groups: max_order must be >= 1");
  std::vector<FgAbGroup> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    std::vector<FgAbGroup> of_order;
    std::vector<Integer> chain;
    // chains d_1 | d_2 | ... with product n, built from the largest factor down
    std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t rest, std::uint64_t bound) {
      if (rest == 1) {
        std::vector<Integer> f(chain.rbegin(), chain.rend());
        of_order.emplace_back(std::move(f));
        return;
      }
      for (std::uint64_t d = 2; d <= rest; ++d) {
        if (rest % d != 0) continue;
        if (bound != 0 && bound % d != 0) continue;  // d must divide the factor above it
        chain.push_back(d);
        rec(rest / d, d);
        chain.pop_back();
      }
    };
    rec(n, 0);
    std::sort(of_order.begin(), of_order.end());
    out.insert(out.end(), of_order.begin(), of_order.end());
  }
  return out;
}

}  // namespace gammaseq
