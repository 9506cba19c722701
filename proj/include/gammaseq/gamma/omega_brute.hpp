#pragma once

#include "gammaseq/abelian/enumerate.hpp"
#include "gammaseq/gamma/omega.hpp"

#include <map>
#include <string>
#include <vector>

namespace gammaseq {

/// Ω search by listing Hom(pi, pi'). Each Ω is recorded under the pair
/// (Ω i, h' Ω), so a candidate (f_mid, f_bot) has a witness iff
/// (i' T(f_bot), f_mid h) was recorded. Only the two squares through pi are
/// checked; the b-square is the caller's business.
class OmegaBruteForce {
 public:
  OmegaBruteForce(GammaSequence src, GammaSequence dst) : src_(std::move(src)), dst_(std::move(dst)) {
    if (!src_.pi.is_finite() || !dst_.pi.is_finite()) throw InfiniteGroup("brute-force Omega needs finite pi");
    for (auto& w : enumerate_homs(src_.pi, dst_.pi)) {
      std::string k = key(compose(w, src_.i), compose(dst_.h, w));
      table_.emplace(std::move(k), std::move(w));
    }
  }

  std::optional<Homomorphism> witness(const Homomorphism& f_mid, const Homomorphism& f_bot) const {
    auto it = table_.find(key(compose(dst_.i, tensor_Z2_map(f_bot)), compose(f_mid, src_.h)));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  bool has_witness(const Homomorphism& f_mid, const Homomorphism& f_bot) const {
    return witness(f_mid, f_bot).has_value();
  }

  std::size_t distinct_keys() const noexcept { return table_.size(); }

 private:
  static std::string key(const Homomorphism& a, const Homomorphism& b) { return a.to_string() + "|" + b.to_string(); }

  GammaSequence src_, dst_;
  std::map<std::string, Homomorphism> table_;
};

struct OracleComparison {
  std::uint64_t candidates = 0;
  std::uint64_t members = 0;
  /// (f_mid, f_bot) where the solver and the brute force disagree.
  std::vector<std::pair<Homomorphism, Homomorphism>> disagreements;
};

/// omega_solve against OmegaBruteForce on every (0, f_mid, f_bot) with
/// f_mid in End(h_mid), f_bot in End(h_bot). Needs all groups finite.
inline OracleComparison compare_with_brute_force(const GammaSequence& s) {
  if (!s.all_finite()) throw InfiniteGroup("oracle comparison needs finite groups");
  const auto mids = enumerate_homs(s.h_mid, s.h_mid);
  const auto bots = enumerate_homs(s.h_bot, s.h_bot);
  detail::check_cap(Integer(mids.size()) * bots.size(), default_enumeration_cap(), "oracle comparison candidates");
  const OmegaBruteForce brute(s, s);
  const Homomorphism top = Homomorphism::zero(s.h_top, s.h_top);
  OracleComparison out;
  for (const auto& fm : mids)
    for (const auto& fb : bots) {
      const bool solver = is_gamma_morphism(s, s, top, fm, fb);
      const bool reference = brute.has_witness(fm, fb);
      ++out.candidates;
      out.members += solver;
      if (solver != reference) out.disagreements.emplace_back(fm, fb);
    }
  return out;
}

}  // namespace gammaseq
