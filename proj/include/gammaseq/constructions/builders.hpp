#pragma once

#include "gammaseq/gamma/sequence.hpp"

#include <vector>

namespace gammaseq {

/// 0 -> 0 -> G = G -> 0: the sequence of a Moore space M(G, n+1).
inline GammaSequence moore(const FgAbGroup& g) {
  const FgAbGroup zero;
  return {zero, g, zero, g, Homomorphism::zero(zero, zero), Homomorphism::zero(zero, g), Homomorphism::identity(g)};
}

/// Z^r --0--> G2 (x) Z/2 --incl--> (G2 (x) Z/2) + G3 --proj--> G3 -> 0.
inline GammaSequence triple_seq(std::size_t r, const FgAbGroup& g2, const FgAbGroup& g3) {
  const FgAbGroup top = FgAbGroup::free(r);
  const FgAbGroup t = tensor_Z2(g2);
  DirectSum ds = direct_sum(t, g3);
  return {top, g3, g2, ds.sum, Homomorphism::zero(top, t), ds.inj1, ds.proj2};
}

/// The split sequence 0 -> G1 (x) Z/2 -> (G1 (x) Z/2) + G2 -> G2 -> 0.
inline GammaSequence split_seq(const FgAbGroup& g1, const FgAbGroup& g2) { return triple_seq(0, g1, g2); }

/// Z^r --0--> G2 (x) Z/2 = G2 (x) Z/2 -> 0 -> 0.
inline GammaSequence free_top(std::size_t r, const FgAbGroup& g2) {
  const FgAbGroup top = FgAbGroup::free(r);
  const FgAbGroup t = tensor_Z2(g2);
  const FgAbGroup zero;
  return {top, zero, g2, t, Homomorphism::zero(top, t), Homomorphism::identity(t), Homomorphism::zero(t, zero)};
}

/// 0 -> Z/2 --2--> Z/4 --1--> Z/2 -> 0.
inline GammaSequence z4_seq() {
  const FgAbGroup zero;
  const FgAbGroup z2 = FgAbGroup::cyclic(2);
  const FgAbGroup z4 = FgAbGroup::cyclic(4);
  return {zero, z2, z2, z4, Homomorphism::zero(zero, z2), Homomorphism(z2, z4, IntMatrix{{2}}),
          Homomorphism(z4, z2, IntMatrix{{1}})};
}

/// Z^r --b--> G (x) Z/2 --> coker b --> 0 -> 0, the general sequence with
/// h_mid = 0. `b` is a matrix over G (x) Z/2 with r columns.
inline GammaSequence cokernel_seq(std::size_t r, const FgAbGroup& g, const IntMatrix& b) {
  const FgAbGroup top = FgAbGroup::free(r);
  const FgAbGroup t = tensor_Z2(g);
  const FgAbGroup zero;
  Homomorphism bh(top, t, b);
  SubgroupMap q = cokernel(bh);
  return {top, zero, g, q.group, bh, q.map, Homomorphism::zero(q.group, zero)};
}

/// ambient = A + C through explicit injections and projections.
struct SplitDecomposition {
  FgAbGroup ambient;
  FgAbGroup summand_a;
  FgAbGroup summand_c;
  Homomorphism inj_a;
  Homomorphism inj_c;
  Homomorphism proj_a;
  Homomorphism proj_c;
};

/// proj o inj is the identity on each summand, the cross terms vanish and
/// inj_a proj_a + inj_c proj_c is the identity on the ambient group.
inline bool is_valid_decomposition(const SplitDecomposition& d) {
  if (d.inj_a.source() != d.summand_a || d.inj_a.target() != d.ambient) return false;
  if (d.inj_c.source() != d.summand_c || d.inj_c.target() != d.ambient) return false;
  if (d.proj_a.source() != d.ambient || d.proj_a.target() != d.summand_a) return false;
  if (d.proj_c.source() != d.ambient || d.proj_c.target() != d.summand_c) return false;
  return compose(d.proj_a, d.inj_a) == Homomorphism::identity(d.summand_a) &&
         compose(d.proj_c, d.inj_c) == Homomorphism::identity(d.summand_c) && compose(d.proj_a, d.inj_c).is_zero() &&
         compose(d.proj_c, d.inj_a).is_zero() &&
         add(compose(d.inj_a, d.proj_a), compose(d.inj_c, d.proj_c)) == Homomorphism::identity(d.ambient);
}

/// A + C in canonical form with the structure maps of the direct sum.
inline SplitDecomposition standard_decomposition(const FgAbGroup& a, const FgAbGroup& c) {
  DirectSum ds = direct_sum(a, c);
  return {ds.sum, a, c, ds.inj1, ds.inj2, ds.proj1, ds.proj2};
}

/// G = G_p + G_p' where G_p is the p-primary part; one entry per prime
/// dividing |G|. G must be finite.
inline std::vector<SplitDecomposition> primary_decompositions(const FgAbGroup& g) {
  if (!g.is_finite()) throw InfiniteGroup("primary decomposition of an infinite group");
  std::vector<SplitDecomposition> out;
  if (g.is_trivial()) return out;
  for (const auto& [p, e] : factorize(g.order())) {
    (void)e;
    std::vector<Integer> orders;
    std::vector<Integer> a_orders, c_orders;
    for (const auto& d : g.factors()) {
      Integer q = 1, rest = d;
      while (rest % p == 0) {
        rest /= p;
        q *= p;
      }
      a_orders.push_back(q);
      c_orders.push_back(rest);
    }
    orders = a_orders;
    orders.insert(orders.end(), c_orders.begin(), c_orders.end());
    // generators: the p-parts of each factor, then the p'-parts
    CanonicalBasis whole = canonical_basis_of_orders(orders);
    CanonicalBasis ca = canonical_basis_of_orders(a_orders);
    CanonicalBasis cc = canonical_basis_of_orders(c_orders);
    const std::size_t k = g.num_factors();
    // whole.group is isomorphic to g, hence equal in canonical form
    SplitDecomposition d{g,
                         ca.group,
                         cc.group,
                         Homomorphism(ca.group, g, whole.to_canonical.col_range(0, k) * ca.from_canonical),
                         Homomorphism(cc.group, g, whole.to_canonical.col_range(k, k) * cc.from_canonical),
                         Homomorphism(g, ca.group, ca.to_canonical * whole.from_canonical.row_range(0, k)),
                         Homomorphism(g, cc.group, cc.to_canonical * whole.from_canonical.row_range(k, k))};
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace gammaseq
