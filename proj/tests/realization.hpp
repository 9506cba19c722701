#pragma once

#include "gammaseq/abelian/end_ring.hpp"
#include "gammaseq/constructions/builders.hpp"
#include "gammaseq/gamma/end_gamma.hpp"
#include "gammaseq/rings/iso.hpp"
#include "gammaseq/rings/products.hpp"

#include <string>

namespace testing_helpers {

using namespace gammaseq;

enum class RealizationMethod { BruteIso, ExplicitMap, GeneratorCheck };

inline std::string to_string(RealizationMethod m) {
  switch (m) {
    case RealizationMethod::BruteIso: return "brute_iso";
    case RealizationMethod::ExplicitMap: return "explicit map";
    case RealizationMethod::GeneratorCheck: return "generator check";
  }
  return "?";
}

struct RealizationResult {
  bool holds = false;
  RealizationMethod method = RealizationMethod::BruteIso;
  std::uint64_t order = 0;
};

/// Position of (f_bot, f_mid) in direct_product(End(h_bot), End(h_mid)).
inline std::size_t product_position(const EndGammaAlgebra& alg, std::size_t k, std::uint64_t mid_size) {
  return static_cast<std::size_t>(alg.bot_index(k) * mid_size + alg.mid_index(k));
}

/// phi : k -> (f_bot(k), f_mid(k)) is a bijection onto End(h_bot) x End(h_mid)
/// preserving 1, and additive and multiplicative. Additivity is checked
/// as phi(x + g) = phi(x) + phi(g) for every x and every additive generator
/// g, and multiplicativity on pairs of generators; by distributivity this
/// covers all pairs.
inline bool product_map_is_isomorphism(const EndGammaAlgebra& alg) {
  const GammaSequence& s = alg.sequence();
  const HomIndexer mid_ix(s.h_mid, s.h_mid), bot_ix(s.h_bot, s.h_bot);
  const std::uint64_t full = mid_ix.size() * bot_ix.size();
  if (alg.order() != full) return false;
  for (std::size_t k = 0; k < alg.order(); ++k)
    if (alg.codes()[k] != k) return false;
  std::vector<Homomorphism> mids, bots;
  mids.reserve(alg.order());
  bots.reserve(alg.order());
  for (std::size_t k = 0; k < alg.order(); ++k) {
    mids.push_back(mid_ix.at(alg.mid_index(k)));
    bots.push_back(bot_ix.at(alg.bot_index(k)));
  }
  if (mids[alg.one()] != Homomorphism::identity(s.h_mid) || bots[alg.one()] != Homomorphism::identity(s.h_bot))
    return false;
  for (std::size_t g : alg.generators())
    for (std::size_t x = 0; x < alg.order(); ++x) {
      const std::size_t y = alg.add(x, g);
      if (mids[y] != add(mids[x], mids[g]) || bots[y] != add(bots[x], bots[g])) return false;
    }
  for (std::size_t g : alg.generators())
    for (std::size_t h : alg.generators()) {
      const std::size_t y = alg.mul(g, h);
      if (mids[y] != compose(mids[g], mids[h]) || bots[y] != compose(bots[g], bots[h])) return false;
    }
  return true;
}

/// End(Γ) ≅ target, where target is End(h_bot) x End(h_mid) (or End(h_mid)
/// when h_bot = 0) given lazily. Rings of order <= 81 go through brute_iso,
/// up to the table cap the product map is checked with verify_isomorphism,
/// above it with product_map_is_isomorphism.
template <class TargetFn>
RealizationResult product_realization(const GammaSequence& s, TargetFn&& target) {
  EndGammaAlgebra alg(s);
  RealizationResult r;
  r.order = alg.order();
  if (Integer(alg.order()) != end_ring_order(s.h_mid) * end_ring_order(s.h_bot)) return r;
  if (alg.order() <= 81) {
    r.method = RealizationMethod::BruteIso;
    const FiniteRing t = target();
    const FiniteRing e = alg.ring();
    auto w = brute_iso(e, t);
    r.holds = w.has_value() && verify_isomorphism(e, t, *w);
  } else if (alg.order() <= FiniteRing::max_order) {
    r.method = RealizationMethod::ExplicitMap;
    const FiniteRing t = target();
    if (t.order() != alg.order()) return r;
    const std::uint64_t mid_size = HomIndexer(s.h_mid, s.h_mid).size();
    std::vector<std::size_t> map(alg.order());
    for (std::size_t k = 0; k < alg.order(); ++k) map[k] = product_position(alg, k, mid_size);
    r.holds = verify_isomorphism(alg.ring(), t, map);
  } else {
    r.method = RealizationMethod::GeneratorCheck;
    r.holds = product_map_is_isomorphism(alg);
  }
  return r;
}

inline RealizationResult moore_realization(const FgAbGroup& g) {
  return product_realization(moore(g), [&] { return end_ring(g); });
}

inline RealizationResult split_realization(const FgAbGroup& g1, const FgAbGroup& g2) {
  return product_realization(split_seq(g1, g2), [&] { return direct_product(end_ring(g1), end_ring(g2)); });
}

}  // namespace testing_helpers
