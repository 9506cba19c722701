#pragma once

#include "gammaseq/abelian/hom_group.hpp"
#include "gammaseq/abelian/enumerate.hpp"
#include "gammaseq/rings/finite_ring.hpp"

#include <vector>

namespace gammaseq {

/// Indexes the elements of a finite Hom(G, H) by mixed radix over the free
/// coordinates of hom_parametrization (first coordinate slowest).
class HomIndexer {
 public:
  HomIndexer(const FgAbGroup& source, const FgAbGroup& target) : param_(hom_parametrization(source, target)) {
    if (!source.is_finite() || !target.is_finite()) throw InfiniteGroup("HomIndexer needs finite groups");
    size_ = 1;
    for (const auto& c : param_.coords) size_ *= static_cast<std::size_t>(c.order);
  }

  std::size_t size() const noexcept { return size_; }
  const HomParametrization& parametrization() const noexcept { return param_; }

  std::size_t index_of(const Homomorphism& h) const {
    std::size_t idx = 0;
    const auto z = param_.coordinates(h);
    for (std::size_t k = 0; k < z.size(); ++k) idx = idx * static_cast<std::size_t>(param_.coords[k].order) + static_cast<std::size_t>(z[k]);
    return idx;
  }

  Homomorphism at(std::size_t idx) const {
    std::vector<Integer> z(param_.coords.size());
    for (std::size_t k = z.size(); k-- > 0;) {
      const auto o = static_cast<std::size_t>(param_.coords[k].order);
      z[k] = idx % o;
      idx /= o;
    }
    return param_.assemble(z);
  }

  std::vector<Homomorphism> all() const {
    std::vector<Homomorphism> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(at(i));
    return out;
  }

 private:
  HomParametrization param_;
  std::size_t size_ = 1;
};

/// |End(G)| without listing it; throws for infinite G.
inline Integer end_ring_order(const FgAbGroup& g) {
  if (!g.is_finite()) throw InfiniteGroup("infinite endomorphism ring");
  return hom_parametrization(g, g).size();
}

/// Elements of End(G) in the index order used by end_ring(G).
inline std::vector<Homomorphism> end_ring_elements(const FgAbGroup& g) {
  if (!g.is_finite()) throw InfiniteGroup("infinite endomorphism ring");
  if (end_ring_order(g) > FiniteRing::max_order) throw CapExceeded("End(" + g.to_string() + ") exceeds the table cap");
  return HomIndexer(g, g).all();
}

/// End(G) as a table ring under pointwise addition and composition.
inline FiniteRing end_ring(const FgAbGroup& g) {
  if (!g.is_finite()) throw InfiniteGroup("infinite endomorphism ring");
  if (end_ring_order(g) > FiniteRing::max_order) {
    throw CapExceeded("End(" + g.to_string() + ") has order " + end_ring_order(g).str() + ", above the table cap");
  }
  HomIndexer ix(g, g);
  const auto elems = ix.all();
  const std::size_t n = elems.size();
  std::vector<FiniteRing::Index> add_t(n * n), mul_t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = elems[a].to_string();
    for (std::size_t b = 0; b < n; ++b) {
      add_t[a * n + b] = static_cast<FiniteRing::Index>(ix.index_of(add(elems[a], elems[b])));
      mul_t[a * n + b] = static_cast<FiniteRing::Index>(ix.index_of(compose(elems[a], elems[b])));
    }
  }
  return FiniteRing(n, std::move(add_t), std::move(mul_t), ix.index_of(Homomorphism::zero(g, g)),
                    ix.index_of(Homomorphism::identity(g)), std::move(labels));
}

}  // namespace gammaseq
