#pragma once

#include "gammaseq/abelian/end_ring.hpp"
#include "gammaseq/gamma/omega.hpp"
#include "gammaseq/rings/invariants.hpp"
#include "gammaseq/rings/units.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

namespace gammaseq {

struct EndGammaRing {
  GammaSequence sequence;
  FiniteRing ring;
  std::vector<GammaMorphism> elements;  ///< elements[k] is ring index k
};

namespace detail {

/// End(G) of a finite group with int64 arithmetic, indexed like HomIndexer.
class EndIndex64 {
 public:
  explicit EndIndex64(const FgAbGroup& g) {
    for (const auto& d : g.factors()) {
      auto v = to_int64(d);
      if (!v || *v > (std::int64_t(1) << 31)) throw CapExceeded("factor too large for End(" + g.to_string() + ")");
      d_.push_back(*v);
    }
    for (const auto& c : hom_parametrization(g, g).coords)
      coords_.push_back({c.row, c.col, static_cast<std::int64_t>(c.scale), static_cast<std::int64_t>(c.order)});
    size_ = 1;
    for (const auto& c : coords_) {
      if (size_ > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(c.order))
        throw CapExceeded("End(" + g.to_string() + ") is too large to index");
      size_ *= static_cast<std::uint64_t>(c.order);
    }
  }

  std::size_t num_coords() const noexcept { return coords_.size(); }
  std::int64_t coord_order(std::size_t k) const { return coords_[k].order; }
  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(const std::int64_t* z) const {
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < coords_.size(); ++k) idx = idx * static_cast<std::uint64_t>(coords_[k].order) + static_cast<std::uint64_t>(z[k]);
    return idx;
  }

  void decode(std::uint64_t idx, std::int64_t* z) const {
    for (std::size_t k = coords_.size(); k-- > 0;) {
      const auto o = static_cast<std::uint64_t>(coords_[k].order);
      z[k] = static_cast<std::int64_t>(idx % o);
      idx /= o;
    }
  }

  /// Index of a o b.
  std::uint64_t compose(std::uint64_t a, std::uint64_t b) const {
    const std::size_t n = d_.size();
    std::vector<std::int64_t> ma = matrix(a), mb = matrix(b), z(coords_.size());
    std::vector<std::int64_t> mc(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        __int128 acc = 0;
        for (std::size_t k = 0; k < n; ++k) acc += static_cast<__int128>(ma[r * n + k]) * mb[k * n + c];
        std::int64_t v = static_cast<std::int64_t>(acc % d_[r]);
        mc[r * n + c] = v < 0 ? v + d_[r] : v;
      }
    for (std::size_t k = 0; k < coords_.size(); ++k) z[k] = (mc[coords_[k].row * n + coords_[k].col] / coords_[k].scale) % coords_[k].order;
    return encode(z.data());
  }

  std::uint64_t identity() const {
    std::vector<std::int64_t> z(coords_.size(), 0);
    for (std::size_t k = 0; k < coords_.size(); ++k)
      if (coords_[k].row == coords_[k].col) z[k] = 1;  // diagonal scale is 1
    return encode(z.data());
  }

 private:
  struct Coord {
    std::size_t row, col;
    std::int64_t scale, order;
  };

  std::vector<std::int64_t> matrix(std::uint64_t idx) const {
    const std::size_t n = d_.size();
    std::vector<std::int64_t> z(coords_.size()), m(n * n, 0);
    decode(idx, z.data());
    for (std::size_t k = 0; k < coords_.size(); ++k) m[coords_[k].row * n + coords_[k].col] = coords_[k].scale * z[k];
    return m;
  }

  std::vector<std::int64_t> d_;
  std::vector<Coord> coords_;
  std::uint64_t size_ = 1;
};

}  // namespace detail

/// End(Γ) of a sequence with finite groups, computed as a subgroup of
/// End(H_mid) x End(H_bot): the pairs (f_mid, f_bot) for which the Ω
/// system is solvable form the projection of the kernel of one linear
/// congruence system in (f_mid, f_bot, Ω). Since H_top is free and
/// finite it is 0, so f_top = 0 and the b-square always commutes.
///
/// Elements are identified by their code mid_index * |End(H_bot)| +
/// bot_index (HomIndexer order) and listed by increasing code.
class EndGammaAlgebra {
 public:
  explicit EndGammaAlgebra(GammaSequence s) : s_(std::move(s)), mid_(s_.h_mid), bot_(s_.h_bot) {
    if (!s_.all_finite()) throw InfiniteGroup("infinite case: use membership predicate");
    if (mid_.size() > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(bot_.size(), 1))
      throw CapExceeded("End(H_mid) x End(H_bot) is too large to index");
    compute_subgroup();
    enumerate();
  }

  const GammaSequence& sequence() const noexcept { return s_; }
  const FgAbGroup& additive_group() const noexcept { return additive_; }
  std::size_t order() const noexcept { return codes_.size(); }
  const std::vector<std::uint64_t>& codes() const noexcept { return codes_; }
  std::uint64_t bot_size() const noexcept { return bot_.size(); }
  /// Positions of a generating set of the additive group.
  const std::vector<std::size_t>& generators() const noexcept { return generators_; }

  std::uint64_t mid_index(std::size_t k) const { return codes_[k] / bot_.size(); }
  std::uint64_t bot_index(std::size_t k) const { return codes_[k] % bot_.size(); }

  Homomorphism f_mid(std::size_t k) const { return HomIndexer(s_.h_mid, s_.h_mid).at(mid_index(k)); }
  Homomorphism f_bot(std::size_t k) const { return HomIndexer(s_.h_bot, s_.h_bot).at(bot_index(k)); }

  /// Position of the code, or nullopt when it is not in End(Γ).
  std::optional<std::size_t> find(std::uint64_t code) const {
    auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
    if (it == codes_.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
  }

  bool contains(const Homomorphism& f_mid, const Homomorphism& f_bot) const {
    const std::uint64_t m = HomIndexer(s_.h_mid, s_.h_mid).index_of(f_mid);
    const std::uint64_t b = HomIndexer(s_.h_bot, s_.h_bot).index_of(f_bot);
    return find(m * bot_.size() + b).has_value();
  }

  std::size_t zero() const { return *find(0); }
  std::size_t one() const { return *find(mid_.identity() * bot_.size() + bot_.identity()); }

  /// Position of a * b (componentwise composition).
  std::size_t mul(std::size_t a, std::size_t b) const {
    const std::uint64_t m = mid_.compose(mid_index(a), mid_index(b));
    const std::uint64_t c = bot_.compose(bot_index(a), bot_index(b));
    auto k = find(m * bot_.size() + c);
    if (!k) throw RingAxiomError("End(gamma) is not closed under composition");
    return *k;
  }

  /// Position of a + b.
  std::size_t add(std::size_t a, std::size_t b) const {
    std::vector<std::int64_t> za(ambient_.size()), zb(ambient_.size());
    decode(codes_[a], za.data());
    decode(codes_[b], zb.data());
    for (std::size_t k = 0; k < ambient_.size(); ++k) za[k] = (za[k] + zb[k]) % ambient_[k];
    auto c = find(encode(za.data()));
    if (!c) throw RingAxiomError("End(gamma) is not closed under addition");
    return *c;
  }

  /// Exact invariants without building tables. Units: a pair of
  /// automorphisms lying in the finite ring End(Γ) has its inverse among
  /// its powers, so units are exactly the pairs of bijections. Idempotents
  /// are componentwise. Commutativity is checked on additive generators.
  RingInvariants invariants() const {
    RingInvariants inv;
    inv.order = codes_.size();
    inv.characteristic = static_cast<std::uint64_t>(lcm(s_.h_mid.exponent(), s_.h_bot.exponent()));
    for (const auto& d : additive_.factors()) inv.additive_invariant_factors.push_back(static_cast<std::uint64_t>(d));
    std::unordered_map<std::uint64_t, bool> mid_unit, bot_unit;
    auto is_unit = [](std::unordered_map<std::uint64_t, bool>& memo, std::uint64_t idx, const FgAbGroup& g) {
      auto it = memo.find(idx);
      if (it == memo.end()) it = memo.emplace(idx, is_surjective(HomIndexer(g, g).at(idx))).first;
      return it->second;
    };
    inv.unit_count = 0;
    inv.idempotent_count = 0;
    for (std::size_t k = 0; k < codes_.size(); ++k) {
      const std::uint64_t m = mid_index(k), b = bot_index(k);
      if (mid_.compose(m, m) == m && bot_.compose(b, b) == b) ++inv.idempotent_count;
      if (is_unit(mid_unit, m, s_.h_mid) && is_unit(bot_unit, b, s_.h_bot)) ++inv.unit_count;
    }
    inv.is_commutative = true;
    for (std::size_t x = 0; x < generators_.size() && inv.is_commutative; ++x)
      for (std::size_t y = x + 1; y < generators_.size(); ++y)
        if (mul(generators_[x], generators_[y]) != mul(generators_[y], generators_[x])) {
          inv.is_commutative = false;
          break;
        }
    return inv;
  }

  std::size_t unit_count() const { return invariants().unit_count; }

  /// Table ring in code order; throws CapExceeded above the table cap.
  FiniteRing ring() const {
    const std::size_t n = codes_.size();
    if (n > FiniteRing::max_order) {
      throw CapExceeded("End(gamma) has order " + std::to_string(n) + ", above the table cap " +
                        std::to_string(FiniteRing::max_order));
    }
    std::vector<FiniteRing::Index> add_t(n * n), mul_t(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels[a] = "(" + f_mid(a).to_string() + ", " + f_bot(a).to_string() + ")";
      for (std::size_t b = 0; b < n; ++b) {
        add_t[a * n + b] = static_cast<FiniteRing::Index>(add(a, b));
        mul_t[a * n + b] = static_cast<FiniteRing::Index>(mul(a, b));
      }
    }
    return FiniteRing(n, std::move(add_t), std::move(mul_t), zero(), one(), std::move(labels));
  }

  /// Every element as a Γ-morphism with its Ω witness.
  std::vector<GammaMorphism> elements() const {
    detail::check_cap(Integer(codes_.size()), default_enumeration_cap(), "End(gamma) elements");
    std::vector<GammaMorphism> out;
    out.reserve(codes_.size());
    const Homomorphism top = Homomorphism::zero(s_.h_top, s_.h_top);
    const HomIndexer mid_ix(s_.h_mid, s_.h_mid), bot_ix(s_.h_bot, s_.h_bot);
    for (std::size_t k = 0; k < codes_.size(); ++k) {
      auto m = gamma_morphism(s_, s_, top, mid_ix.at(mid_index(k)), bot_ix.at(bot_index(k)));
      if (!m) throw PreconditionError("End(gamma) element without a witness; is the sequence valid?");
      out.push_back(std::move(*m));
    }
    return out;
  }

 private:
  void compute_subgroup() {
    const HomParametrization pm = hom_parametrization(s_.h_mid, s_.h_mid);
    const HomParametrization pb = hom_parametrization(s_.h_bot, s_.h_bot);
    const HomParametrization po = hom_parametrization(s_.pi, s_.pi);
    const std::size_t nm = pm.coords.size(), nb = pb.coords.size(), no = po.coords.size();
    const std::size_t t_n = s_.i.source().num_factors();
    const std::size_t pi_n = s_.pi.num_factors();
    const std::size_t m_n = s_.h_mid.num_factors();
    const std::vector<std::size_t> surv = tensor_Z2_survivors(s_.h_bot);
    std::vector<long> surv_pos(s_.h_bot.num_factors(), -1);
    for (std::size_t k = 0; k < surv.size(); ++k) surv_pos[surv[k]] = static_cast<long>(k);

    // rows (k, t): (Ω i - i T(f_bot))_kt mod d_k; rows (j, l): (h Ω - f_mid h)_jl mod m_j
    const std::size_t off = pi_n * t_n;
    const std::size_t rows = off + m_n * pi_n;
    IntMatrix a(rows, nm + nb + no);
    std::vector<Integer> moduli(rows);
    for (std::size_t k = 0; k < pi_n; ++k)
      for (std::size_t t = 0; t < t_n; ++t) moduli[k * t_n + t] = s_.pi.factor(k);
    for (std::size_t j = 0; j < m_n; ++j)
      for (std::size_t l = 0; l < pi_n; ++l) moduli[off + j * pi_n + l] = s_.h_mid.factor(j);

    for (std::size_t c = 0; c < nm; ++c) {
      const auto& co = pm.coords[c];
      for (std::size_t l = 0; l < pi_n; ++l) a(off + co.row * pi_n + l, c) -= co.scale * s_.h.entry(co.col, l);
    }
    for (std::size_t c = 0; c < nb; ++c) {
      const auto& co = pb.coords[c];
      const long jp = surv_pos[co.row], t = surv_pos[co.col];
      if (jp < 0 || t < 0) continue;
      for (std::size_t k = 0; k < pi_n; ++k)
        a(k * t_n + static_cast<std::size_t>(t), nm + c) -= co.scale * s_.i.entry(k, static_cast<std::size_t>(jp));
    }
    for (std::size_t c = 0; c < no; ++c) {
      const auto& co = po.coords[c];
      for (std::size_t t = 0; t < t_n; ++t) a(co.row * t_n + t, nm + nb + c) += co.scale * s_.i.entry(co.col, t);
      for (std::size_t j = 0; j < m_n; ++j) a(off + j * pi_n + co.col, nm + nb + c) += co.scale * s_.h.entry(j, co.row);
    }

    std::vector<Integer> ambient;
    for (const auto& c : pm.coords) ambient.push_back(c.order);
    for (const auto& c : pb.coords) ambient.push_back(c.order);
    IntMatrix lifts = kernel_lattice(a, moduli);
    Subgroup sub = subgroup_generated(lifts.row_range(0, nm + nb), ambient);
    additive_ = sub.group;
    detail::check_cap(additive_.order(), default_enumeration_cap(), "End(gamma)");
    for (const auto& o : ambient) ambient_.push_back(static_cast<std::int64_t>(o));
    gens_.assign(sub.inclusion.cols(), std::vector<std::int64_t>(ambient_.size()));
    for (std::size_t c = 0; c < sub.inclusion.cols(); ++c)
      for (std::size_t r = 0; r < ambient_.size(); ++r) gens_[c][r] = static_cast<std::int64_t>(reduce(sub.inclusion(r, c), ambient[r]));
  }

  void enumerate() {
    const std::size_t r = gens_.size();
    std::vector<std::int64_t> orders;
    for (const auto& d : additive_.factors()) orders.push_back(static_cast<std::int64_t>(d));
    std::vector<std::int64_t> y(r, 0), v(ambient_.size(), 0);
    codes_.reserve(static_cast<std::size_t>(additive_.order()));
    for (;;) {
      codes_.push_back(encode(v.data()));
      bool done = true;
      for (std::size_t pos = r; pos-- > 0;) {
        for (std::size_t k = 0; k < v.size(); ++k) v[k] = (v[k] + gens_[pos][k]) % ambient_[k];
        if (++y[pos] < orders[pos]) {
          done = false;
          break;
        }
        y[pos] = 0;  // the generator has order dividing orders[pos], so v is back where it was
      }
      if (done) break;
    }
    std::sort(codes_.begin(), codes_.end());
    for (const auto& g : gens_) generators_.push_back(*find(encode(g.data())));
  }

  std::uint64_t encode(const std::int64_t* z) const {
    return mid_.encode(z) * bot_.size() + bot_.encode(z + mid_.num_coords());
  }

  void decode(std::uint64_t code, std::int64_t* z) const {
    mid_.decode(code / bot_.size(), z);
    bot_.decode(code % bot_.size(), z + mid_.num_coords());
  }

  GammaSequence s_;
  detail::EndIndex64 mid_;
  detail::EndIndex64 bot_;
  FgAbGroup additive_;
  std::vector<std::int64_t> ambient_;
  std::vector<std::vector<std::int64_t>> gens_;
  std::vector<std::size_t> generators_;
  std::vector<std::uint64_t> codes_;
};

/// End(Γ) as a table ring with every element and its witness. Requires all
/// four groups finite; throws InfiniteGroup otherwise.
inline EndGammaRing end_gamma(const GammaSequence& s) {
  EndGammaAlgebra alg(s);
  FiniteRing ring = alg.ring();
  return {s, std::move(ring), alg.elements()};
}

/// The same ring by direct filtering: every pair in End(H_mid) x End(H_bot)
/// is tested with is_gamma_morphism. Slower; used to cross-check.
inline EndGammaRing end_gamma_by_filter(const GammaSequence& s) {
  if (!s.all_finite()) throw InfiniteGroup("infinite case: use membership predicate");
  const HomIndexer mid_ix(s.h_mid, s.h_mid), bot_ix(s.h_bot, s.h_bot);
  detail::check_cap(Integer(mid_ix.size()) * bot_ix.size(), default_enumeration_cap(), "End(H_mid) x End(H_bot)");
  const Homomorphism top = Homomorphism::zero(s.h_top, s.h_top);
  const auto mids = mid_ix.all();
  const auto bots = bot_ix.all();
  std::vector<GammaMorphism> elems;
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t m = 0; m < mids.size(); ++m)
    for (std::size_t b = 0; b < bots.size(); ++b)
      if (auto g = gamma_morphism(s, s, top, mids[m], bots[b])) {
        elems.push_back(std::move(*g));
        idx.emplace_back(m, b);
      }
  const std::size_t n = elems.size();
  if (n > FiniteRing::max_order) throw CapExceeded("End(gamma) exceeds the table cap");
  auto position = [&](const Homomorphism& fm, const Homomorphism& fb) {
    auto it = std::lower_bound(idx.begin(), idx.end(), std::make_pair(mid_ix.index_of(fm), bot_ix.index_of(fb)));
    if (it == idx.end() || *it != std::make_pair(mid_ix.index_of(fm), bot_ix.index_of(fb)))
      throw RingAxiomError("filtered End(gamma) is not closed");
    return static_cast<FiniteRing::Index>(it - idx.begin());
  };
  std::vector<FiniteRing::Index> add_t(n * n), mul_t(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + elems[a].f_mid.to_string() + ", " + elems[a].f_bot.to_string() + ")";
    for (std::size_t b = 0; b < n; ++b) {
      add_t[a * n + b] = position(add(elems[a].f_mid, elems[b].f_mid), add(elems[a].f_bot, elems[b].f_bot));
      mul_t[a * n + b] = position(compose(elems[a].f_mid, elems[b].f_mid), compose(elems[a].f_bot, elems[b].f_bot));
    }
  }
  const std::size_t zero = position(Homomorphism::zero(s.h_mid, s.h_mid), Homomorphism::zero(s.h_bot, s.h_bot));
  const std::size_t one = position(Homomorphism::identity(s.h_mid), Homomorphism::identity(s.h_bot));
  FiniteRing ring(n, std::move(add_t), std::move(mul_t), zero, one, std::move(labels));
  return {s, std::move(ring), std::move(elems)};
}

/// Γ-automorphisms: the unit group of End(Γ), as positions in end_gamma(s).
inline UnitGroup aut_gamma(const GammaSequence& s) { return unit_group(end_gamma(s).ring); }

}  // namespace gammaseq
