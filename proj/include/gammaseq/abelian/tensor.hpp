#pragma once

#include "gammaseq/abelian/homomorphism.hpp"

#include <vector>

namespace gammaseq {

/// Indices of the factors of g that survive - Z/2: free and even factors.
inline std::vector<std::size_t> tensor_Z2_survivors(const FgAbGroup& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.num_factors(); ++i)
    if (g.factor(i) % 2 == 0) out.push_back(i);
  return out;
}

/// G (x) Z/2 = (Z/2)^m, m = free rank + number of even finite factors.
inline FgAbGroup tensor_Z2(const FgAbGroup& g) {
  return FgAbGroup(std::vector<Integer>(tensor_Z2_survivors(g).size(), 2));
}

/// h (x) Z/2: the matrix of h reduced mod 2 on the surviving factors.
/// Well defined because surviving target factors are even or free.
inline Homomorphism tensor_Z2_map(const Homomorphism& h) {
  const auto src = tensor_Z2_survivors(h.source());
  const auto tgt = tensor_Z2_survivors(h.target());
  IntMatrix m(tgt.size(), src.size());
  for (std::size_t r = 0; r < tgt.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) m(r, c) = reduce(h.entry(tgt[r], src[c]), 2);
  return Homomorphism(tensor_Z2(h.source()), tensor_Z2(h.target()), std::move(m));
}

}  // namespace gammaseq
