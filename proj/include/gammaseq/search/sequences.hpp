#pragma once

#include "gammaseq/abelian/end_ring.hpp"
#include "gammaseq/gamma/end_gamma.hpp"
#include "gammaseq/search/groups.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gammaseq {

struct SearchBounds {
  std::uint64_t max_bot_order = 1;
  std::uint64_t max_mid_order = 1;
  std::vector<std::uint64_t> primes;
  bool dedupe = false;
  unsigned jobs = 1;
};

inline void check_bounds(const SearchBounds& b) {
  if (b.max_bot_order < 1 || b.max_mid_order < 1) throw PreconditionError("search bounds must be >= 1");
  for (auto p : b.primes)
    if (!is_prime(Integer(p))) throw PreconditionError("not a prime: " + std::to_string(p));
}

/// A finite sequence 0 -> h_bot (x) Z/2 -> pi -> h_mid -> 0 together with
/// the extension class it was built from. `ext[j * m + k]` is the
/// coefficient of the k-th generator of h_bot (x) Z/2 in the relation of
/// the j-th factor of h_mid.
struct SequenceRecord {
  GammaSequence sequence;
  std::vector<int> ext;

  std::string descriptor() const {
    std::string e;
    for (int c : ext) e += std::to_string(c);
    return "bot=" + sequence.h_bot.to_string() + " mid=" + sequence.h_mid.to_string() + " pi=" +
           sequence.pi.to_string() + " ext=" + (e.empty() ? "-" : e);
  }
};

/// The extension of h_mid by T = h_bot (x) Z/2 with class `ext`: pi is
/// generated by t_k (order 2) and e_j subject to m_j e_j = sum_k c_jk t_k;
/// i sends t_k to t_k and h sends e_j to e_j, t_k to 0.
inline GammaSequence extension_sequence(const FgAbGroup& h_bot, const FgAbGroup& h_mid, const std::vector<int>& ext) {
  const FgAbGroup t = tensor_Z2(h_bot);
  const std::size_t m = t.num_factors();
  const std::size_t q = h_mid.num_factors();
  if (ext.size() != m * q) throw DimensionError("extension class size");
  IntMatrix rel(m + q, m + q);
  for (std::size_t k = 0; k < m; ++k) rel(k, k) = 2;
  for (std::size_t j = 0; j < q; ++j) {
    rel(m + j, m + j) = h_mid.factor(j);
    for (std::size_t k = 0; k < m; ++k) rel(k, m + j) = -ext[j * m + k];
  }
  CanonicalBasis cb = canonical_basis(rel);
  IntMatrix h_gen(q, m + q);
  for (std::size_t j = 0; j < q; ++j) h_gen(j, m + j) = 1;
  const FgAbGroup zero;
  return {zero,
          h_mid,
          h_bot,
          cb.group,
          Homomorphism::zero(zero, t),
          Homomorphism(t, cb.group, cb.to_canonical.col_range(0, m)),
          Homomorphism(cb.group, h_mid, h_gen * cb.from_canonical)};
}

/// Every extension class of h_mid by h_bot (x) Z/2, in a fixed order.
/// Ext(Z/m_j, T) = T/m_j T, so coefficients run over Z/gcd(2, m_j).
inline std::vector<SequenceRecord> extensions_of(const FgAbGroup& h_bot, const FgAbGroup& h_mid) {
  const std::size_t m = tensor_Z2(h_bot).num_factors();
  const std::size_t q = h_mid.num_factors();
  std::vector<Integer> radices(m * q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = 0; k < m; ++k) radices[j * m + k] = h_mid.factor(j) % 2 == 0 ? 2 : 1;
  std::vector<SequenceRecord> out;
  detail::for_each_mixed_radix(radices, [&](const std::vector<Integer>& z) {
    std::vector<int> ext(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) ext[k] = static_cast<int>(z[k]);
    out.push_back({extension_sequence(h_bot, h_mid, ext), std::move(ext)});
  });
  return out;
}

namespace detail {

/// Automorphisms of a finite group, in HomIndexer order.
inline std::vector<Homomorphism> automorphisms(const FgAbGroup& g) {
  HomIndexer ix(g, g);
  detail::check_cap(Integer(ix.size()), default_enumeration_cap(), "End enumeration for automorphisms");
  std::vector<Homomorphism> out;
  for (std::size_t k = 0; k < ix.size(); ++k) {
    Homomorphism f = ix.at(k);
    if (is_surjective(f)) out.push_back(std::move(f));
  }
  return out;
}

/// One automorphism of g per distinct induced map on g (x) Z/2.
inline std::vector<Homomorphism> automorphisms_mod_tensor(const FgAbGroup& g) {
  std::vector<Homomorphism> out;
  std::vector<Homomorphism> seen;
  for (auto& f : automorphisms(g)) {
    Homomorphism t = tensor_Z2_map(f);
    if (std::find(seen.begin(), seen.end(), t) != seen.end()) continue;
    seen.push_back(std::move(t));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace detail

/// A Γ-isomorphism s1 -> s2 (f_mid, f_bot bijective with a witness), or
/// nullopt. Needs h_top = 0 and finite groups. The witness is then an
/// isomorphism by the five lemma, since i is injective when b = 0.
inline std::optional<GammaMorphism> gamma_isomorphism(const GammaSequence& s1, const GammaSequence& s2) {
  if (!s1.h_top.is_trivial() || !s2.h_top.is_trivial() || !s1.all_finite() || !s2.all_finite())
    throw PreconditionError("gamma_isomorphism: needs h_top = 0 and finite groups");
  if (s1.h_mid != s2.h_mid || s1.h_bot != s2.h_bot || s1.pi != s2.pi) return std::nullopt;
  const Homomorphism top = Homomorphism::zero(s1.h_top, s2.h_top);
  const auto mids = detail::automorphisms(s1.h_mid);
  const auto bots = detail::automorphisms_mod_tensor(s1.h_bot);
  for (const auto& a : mids)
    for (const auto& b : bots)
      if (auto m = gamma_morphism(s1, s2, top, a, b)) return m;
  return std::nullopt;
}

inline bool are_isomorphic(const GammaSequence& s1, const GammaSequence& s2) {
  return gamma_isomorphism(s1, s2).has_value();
}

/// Partition of `records` into Γ-isomorphism classes; class_of[k] is the
/// position of the first record of k's class. Only records with the same
/// groups and equal End(Γ) invariants are compared.
inline std::vector<std::size_t> isomorphism_classes(const std::vector<SequenceRecord>& records) {
  std::vector<std::size_t> class_of(records.size());
  std::vector<std::size_t> reps;
  std::vector<RingInvariants> rep_inv;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const GammaSequence& s = records[k].sequence;
    RingInvariants inv = EndGammaAlgebra(s).invariants();
    class_of[k] = k;
    for (std::size_t r = 0; r < reps.size(); ++r) {
      const GammaSequence& t = records[reps[r]].sequence;
      if (t.h_bot != s.h_bot || t.h_mid != s.h_mid || t.pi != s.pi || rep_inv[r] != inv) continue;
      if (are_isomorphic(t, s)) {
        class_of[k] = reps[r];
        break;
      }
    }
    if (class_of[k] == k) {
      reps.push_back(k);
      rep_inv.push_back(inv);
    }
  }
  return class_of;
}

/// All finite sequences within the bounds, one per extension class, with
/// h_bot and h_mid in enumerate_groups order. With dedupe, the first
/// member of each Γ-isomorphism class.
inline std::vector<SequenceRecord> enumerate_sequences(const SearchBounds& bounds) {
  check_bounds(bounds);
  std::vector<SequenceRecord> out;
  for (const auto& bot : enumerate_groups(bounds.max_bot_order))
    for (const auto& mid : enumerate_groups(bounds.max_mid_order)) {
      auto ext = extensions_of(bot, mid);
      detail::check_cap(Integer(out.size() + ext.size()), default_enumeration_cap(), "sequence enumeration");
      for (auto& r : ext) out.push_back(std::move(r));
    }
  if (!bounds.dedupe) return out;
  const auto class_of = isomorphism_classes(out);
  std::vector<SequenceRecord> reps;
  for (std::size_t k = 0; k < out.size(); ++k)
    if (class_of[k] == k) reps.push_back(std::move(out[k]));
  return reps;
}

}  // namespace gammaseq
