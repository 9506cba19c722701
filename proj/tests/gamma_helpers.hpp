#pragma once

#include "gammaseq/gamma/sequence.hpp"

#include "oracles.hpp"

#include <initializer_list>
#include <set>

namespace testing_helpers {

using namespace gammaseq;

inline FgAbGroup G(std::initializer_list<int> factors) {
  std::vector<Integer> f(factors.begin(), factors.end());
  return FgAbGroup(f);
}

inline oracle::PlainSequence plain(const GammaSequence& s) {
  return {oracle::orders_of(s.h_bot.factors()), oracle::orders_of(s.h_mid.factors()), oracle::orders_of(s.pi.factors()),
          oracle::orders_of(s.tensor().factors()), oracle::to_mat(s.i.matrix()), oracle::to_mat(s.h.matrix())};
}

inline oracle::Mat mat(const Homomorphism& f) { return oracle::to_mat(f.matrix()); }

inline Homomorphism hom_of(const FgAbGroup& src, const FgAbGroup& dst, const oracle::Mat& m) {
  IntMatrix out(m.rows, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) out(r, c) = m(r, c);
  return Homomorphism(src, dst, std::move(out));
}

inline std::int64_t oracle_order(const std::vector<std::int64_t>& orders) {
  std::int64_t n = 1;
  for (auto o : orders) n *= o;
  return n;
}

/// f is a bijection of the group with the given orders onto itself.
inline bool oracle_bijective(const oracle::Mat& f, const std::vector<std::int64_t>& orders) {
  oracle::SmallGroup g{orders};
  std::set<std::int64_t> images;
  for (const auto& x : g.elements()) {
    std::vector<std::int64_t> y(orders.size(), 0);
    for (std::size_t r = 0; r < orders.size(); ++r) {
      std::int64_t acc = 0;
      for (std::size_t c = 0; c < orders.size(); ++c) acc += f(r, c) * x[c];
      y[r] = acc;
    }
    images.insert(g.encode(y));
  }
  return static_cast<std::int64_t>(images.size()) == g.size();
}

/// Γ-isomorphism by listing all bijections of h_mid and h_bot and all Ω.
inline bool oracle_isomorphic(const GammaSequence& a, const GammaSequence& b) {
  const auto pa = plain(a), pb = plain(b);
  if (pa.mid != pb.mid || pa.bot != pb.bot || oracle_order(pa.pi) != oracle_order(pb.pi)) return false;
  oracle::BruteOmega bo(pa, pb);
  for (const auto& fm : oracle::all_homs(pa.mid, pb.mid)) {
    if (!oracle_bijective(fm, pa.mid)) continue;
    for (const auto& fb : oracle::all_homs(pa.bot, pb.bot))
      if (oracle_bijective(fb, pa.bot) && bo.has_witness(fm, fb)) return true;
  }
  return false;
}

/// Number of pairs of bijections in the brute-force End(Γ).
inline std::size_t oracle_aut_count(const GammaSequence& s) {
  const auto p = plain(s);
  std::size_t n = 0;
  for (const auto& [fm, fb] : oracle::brute_end_gamma(p)) n += oracle_bijective(fm, p.mid) && oracle_bijective(fb, p.bot);
  return n;
}

}  // namespace testing_helpers
