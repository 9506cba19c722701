#pragma once

#include "gammaseq/abelian/enumerate.hpp"
#include "gammaseq/constructions/builders.hpp"
#include "gammaseq/gamma/omega.hpp"

#include <optional>
#include <string>

namespace gammaseq {

namespace detail {

inline Homomorphism extend_by_zero(const SplitDecomposition& d, const Homomorphism& f_a) {
  return compose(d.inj_a, compose(f_a, d.proj_a));
}

}  // namespace detail

/// Why (dec_mid, dec_pi) does not put h in the form id_A + g, or nullopt
/// when it does. Also requires Im i <= B, the pi-complement.
inline std::optional<std::string> splitend_precondition_failure(const GammaSequence& s, const SplitDecomposition& dec_mid,
                                                                const SplitDecomposition& dec_pi) {
  if (dec_mid.ambient != s.h_mid) return "decomposition is not of h_mid";
  if (dec_pi.ambient != s.pi) return "decomposition is not of pi";
  if (dec_mid.summand_a != dec_pi.summand_a) return "the two A summands differ";
  if (!is_valid_decomposition(dec_mid) || !is_valid_decomposition(dec_pi)) return "invalid split decomposition";
  if (compose(s.h, dec_pi.inj_a) != dec_mid.inj_a) return "h is not the identity on A";
  if (!compose(dec_mid.proj_a, compose(s.h, dec_pi.inj_c)).is_zero()) return "h does not map B into C";
  if (!compose(dec_pi.proj_a, s.i).is_zero()) return "image of i is not contained in B";
  return std::nullopt;
}

/// For an h-split A <= h_mid: every (0, f_A + 0, 0) is a Γ-endomorphism and
/// f_A -> (0, f_A + 0, 0) is an injective, additive and multiplicative map
/// End(A) -> End(Γ). Throws PreconditionError when the decompositions do
/// not exhibit the split form.
inline bool verify_splitend(const GammaSequence& s, const SplitDecomposition& dec_mid, const SplitDecomposition& dec_pi) {
  if (auto why = splitend_precondition_failure(s, dec_mid, dec_pi)) throw PreconditionError("verify_splitend: " + *why);
  const FgAbGroup& a = dec_mid.summand_a;
  const auto ends = enumerate_homs(a, a);
  std::vector<Homomorphism> images;
  images.reserve(ends.size());
  const Homomorphism top = Homomorphism::zero(s.h_top, s.h_top);
  const Homomorphism bot = Homomorphism::zero(s.h_bot, s.h_bot);
  for (const auto& f : ends) {
    Homomorphism big = detail::extend_by_zero(dec_mid, f);
    if (!is_gamma_morphism(s, s, top, big, bot)) return false;
    images.push_back(std::move(big));
  }
  for (std::size_t x = 0; x < ends.size(); ++x)
    for (std::size_t y = 0; y < ends.size(); ++y) {
      if (x != y && images[x] == images[y]) return false;
      if (compose(images[x], images[y]) != detail::extend_by_zero(dec_mid, compose(ends[x], ends[y]))) return false;
      if (add(images[x], images[y]) != detail::extend_by_zero(dec_mid, add(ends[x], ends[y]))) return false;
    }
  return true;
}

/// h_bot = A + C with |A| odd: every (0, 0, f_A + 0) is a Γ-endomorphism.
inline bool verify_odd_bottom(const GammaSequence& s, const SplitDecomposition& dec_bot) {
  if (dec_bot.ambient != s.h_bot || !is_valid_decomposition(dec_bot))
    throw PreconditionError("verify_odd_bottom: not a decomposition of h_bot");
  const FgAbGroup& a = dec_bot.summand_a;
  if (!a.is_finite() || a.order() % 2 == 0) throw PreconditionError("verify_odd_bottom: A must have odd order");
  const Homomorphism top = Homomorphism::zero(s.h_top, s.h_top);
  const Homomorphism mid = Homomorphism::zero(s.h_mid, s.h_mid);
  for (const auto& f : enumerate_homs(a, a))
    if (!is_gamma_morphism(s, s, top, mid, detail::extend_by_zero(dec_bot, f))) return false;
  return true;
}

/// A pi-decomposition pi = j(A) + B matching dec_mid, found by searching
/// Hom(A, pi) for j with h o j = inj_A; B = ker(proj_A o h). Requires pi
/// finite. nullopt when no such j exists.
inline std::optional<SplitDecomposition> find_pi_splitting(const GammaSequence& s, const SplitDecomposition& dec_mid) {
  const FgAbGroup& a = dec_mid.summand_a;
  std::optional<Homomorphism> j;
  for (const auto& cand : enumerate_homs(a, s.pi))
    if (compose(s.h, cand) == dec_mid.inj_a) {
      j = cand;
      break;
    }
  if (!j) return std::nullopt;
  const Homomorphism proj_a = compose(dec_mid.proj_a, s.h);
  SubgroupMap b = kernel(proj_a);
  const Homomorphism rest = sub(Homomorphism::identity(s.pi), compose(*j, proj_a));
  Homomorphism proj_b = factor_through(b.map, rest);
  SplitDecomposition d{s.pi, a, b.group, *j, b.map, proj_a, proj_b};
  if (!is_valid_decomposition(d)) return std::nullopt;
  return d;
}

/// h_mid = A + C with A a p-group, p odd: A is h-split, witnessed by a
/// searched pi-decomposition, and End(A) embeds in End(Γ).
inline bool verify_odd_mid(const GammaSequence& s, const Integer& p, const SplitDecomposition& dec_mid) {
  if (p == 2 || !is_prime(p)) throw PreconditionError("verify_odd_mid: p must be an odd prime");
  if (dec_mid.ambient != s.h_mid || !is_valid_decomposition(dec_mid))
    throw PreconditionError("verify_odd_mid: not a decomposition of h_mid");
  const FgAbGroup& a = dec_mid.summand_a;
  if (!a.is_finite()) throw PreconditionError("verify_odd_mid: A must be a finite p-group");
  Integer n = a.order();
  while (n % p == 0) n /= p;
  if (n != 1) throw PreconditionError("verify_odd_mid: A is not a " + p.str() + "-group");
  if (!s.pi.is_finite()) throw PreconditionError("verify_odd_mid: the search needs a finite pi");
  auto dec_pi = find_pi_splitting(s, dec_mid);
  if (!dec_pi) return false;
  return verify_splitend(s, dec_mid, *dec_pi);
}

}  // namespace gammaseq
