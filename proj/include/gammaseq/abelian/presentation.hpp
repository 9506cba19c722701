#pragma once

#include "gammaseq/abelian/group.hpp"
#include "gammaseq/abelian/homomorphism.hpp"
#include "gammaseq/abelian/smith.hpp"

#include <vector>

namespace gammaseq {

/// Canonical form of a presented group together with the change of basis
/// in both directions. Generators are the rows of the relation matrix.
struct CanonicalBasis {
  FgAbGroup group;
  IntMatrix to_canonical;    ///< canonical factors x generators
  IntMatrix from_canonical;  ///< generators x canonical factors
};

/// Cokernel of `relations` (generators x relations) with explicit bases.
/// Canonical coordinates are y = U x from the Smith form U R V = D; unit
/// factors are dropped and free factors come last.
inline CanonicalBasis canonical_basis(const IntMatrix& relations) {
  const std::size_t n = relations.rows();
  SmithForm s = smith_normal_form(relations);
  std::vector<std::size_t> kept;
  std::vector<Integer> orders;
  for (std::size_t k = 0; k < n; ++k) {
    Integer d = k < s.rank ? s.D(k, k) : Integer(0);
    if (d == 1) continue;
    kept.push_back(k);
    orders.push_back(d);
  }
  CanonicalBasis out{FgAbGroup(orders), s.U.select_rows(kept), s.U_inv.select_cols(kept)};
  for (std::size_t r = 0; r < kept.size(); ++r) {
    if (orders[r] == 0) continue;
    for (std::size_t c = 0; c < n; ++c) out.to_canonical(r, c) = reduce(out.to_canonical(r, c), orders[r]);
  }
  return out;
}

/// Invariant factors of the cokernel of a relation matrix.
inline FgAbGroup canonicalize(const IntMatrix& presentation) { return canonical_basis(presentation).group; }

/// Canonical basis for Z/a_1 + Z/a_2 + ... with arbitrary orders (0 = Z, 1 allowed).
inline CanonicalBasis canonical_basis_of_orders(const std::vector<Integer>& orders) {
  CanonicalBasis cb = canonical_basis(diagonal(orders));
  for (std::size_t r = 0; r < orders.size(); ++r) {
    if (orders[r] == 0) continue;
    for (std::size_t c = 0; c < cb.from_canonical.cols(); ++c)
      cb.from_canonical(r, c) = reduce(cb.from_canonical(r, c), orders[r]);
  }
  return cb;
}

inline FgAbGroup group_of_orders(const std::vector<Integer>& orders) {
  return canonicalize(diagonal(orders));
}

/// Lifts x in Z^n of the domain with A x = 0 modulo the target orders, as
/// columns. A is m x n; `target_orders` has length m (0 = no reduction).
inline IntMatrix kernel_lattice(const IntMatrix& A, const std::vector<Integer>& target_orders) {
  const std::size_t n = A.cols();
  std::vector<std::size_t> moduli;
  for (std::size_t j = 0; j < target_orders.size(); ++j)
    if (target_orders[j] != 0) moduli.push_back(j);
  IntMatrix big(A.rows(), n + moduli.size());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) big(r, c) = A(r, c);
  for (std::size_t k = 0; k < moduli.size(); ++k) big(moduli[k], n + k) = target_orders[moduli[k]];
  IntMatrix null = integer_nullspace(big);
  return null.row_range(0, n);
}

/// A subgroup of an ambient group given by orders, as an abstract group
/// plus its inclusion matrix (ambient coordinates x subgroup factors).
struct Subgroup {
  FgAbGroup group;
  IntMatrix inclusion;
};

/// Subgroup generated by the columns of `generators` inside Z/a_1 + ... .
inline Subgroup subgroup_generated(const IntMatrix& generators, const std::vector<Integer>& ambient_orders) {
  if (generators.rows() != ambient_orders.size()) throw DimensionError("subgroup generators vs ambient");
  const std::size_t k = generators.cols();
  // Relations among the generators: c with G c == 0 in the ambient group.
  IntMatrix relations = kernel_lattice(generators, ambient_orders);
  CanonicalBasis cb = canonical_basis(relations);
  IntMatrix inclusion = generators * cb.from_canonical;
  for (std::size_t r = 0; r < inclusion.rows(); ++r) {
    if (ambient_orders[r] == 0) continue;
    for (std::size_t c = 0; c < inclusion.cols(); ++c) inclusion(r, c) = reduce(inclusion(r, c), ambient_orders[r]);
  }
  (void)k;
  return {cb.group, std::move(inclusion)};
}

/// Coordinates y with inclusion * y == x in the ambient group, if x lies in
/// the subgroup. Reduced modulo the subgroup's factors.
inline std::optional<std::vector<Integer>> subgroup_coordinates(const Subgroup& sub,
                                                                const std::vector<Integer>& ambient_orders,
                                                                const std::vector<Integer>& x) {
  const std::size_t k = sub.inclusion.cols();
  IntMatrix system = sub.inclusion;
  std::vector<Integer> moduli;
  for (std::size_t j = 0; j < ambient_orders.size(); ++j) {
    if (ambient_orders[j] == 0) continue;
    IntMatrix col(ambient_orders.size(), 1);
    col(j, 0) = ambient_orders[j];
    system = system.hstack(col);
  }
  auto sol = integer_solve(system, x);
  if (!sol) return std::nullopt;
  std::vector<Integer> y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k));
  for (std::size_t i = 0; i < k; ++i) y[i] = reduce(y[i], sub.group.factor(i));
  return y;
}

/// Does the span of `gens` (plus the ambient relations) contain every column of `others`?
inline bool span_contains(const IntMatrix& gens, const std::vector<Integer>& ambient_orders, const IntMatrix& others) {
  IntMatrix system = gens;
  for (std::size_t j = 0; j < ambient_orders.size(); ++j) {
    if (ambient_orders[j] == 0) continue;
    IntMatrix col(ambient_orders.size(), 1);
    col(j, 0) = ambient_orders[j];
    system = system.hstack(col);
  }
  if (system.cols() == 0) return others.is_zero();
  for (std::size_t c = 0; c < others.cols(); ++c) {
    if (!integer_solve(system, others.column(c))) return false;
  }
  return true;
}

struct SubgroupMap {
  FgAbGroup group;
  Homomorphism map;  ///< inclusion into, or projection onto, `group`
};

/// Kernel of h with its inclusion into h.source().
inline SubgroupMap kernel(const Homomorphism& h) {
  IntMatrix lifts = kernel_lattice(h.matrix(), h.target().factors());
  Subgroup sub = subgroup_generated(lifts, h.source().factors());
  return {sub.group, Homomorphism(sub.group, h.source(), sub.inclusion)};
}

/// Image of h with its inclusion into h.target().
inline SubgroupMap image(const Homomorphism& h) {
  Subgroup sub = subgroup_generated(h.matrix(), h.target().factors());
  return {sub.group, Homomorphism(sub.group, h.target(), sub.inclusion)};
}

/// Cokernel of h with the projection from h.target().
inline SubgroupMap cokernel(const Homomorphism& h) {
  const FgAbGroup& t = h.target();
  IntMatrix relations = h.matrix().hstack(diagonal(t.factors()));
  CanonicalBasis cb = canonical_basis(relations);
  return {cb.group, Homomorphism(t, cb.group, cb.to_canonical)};
}

inline bool is_injective(const Homomorphism& h) { return kernel(h).group.is_trivial(); }
inline bool is_surjective(const Homomorphism& h) { return cokernel(h).group.is_trivial(); }
inline bool is_bijective(const Homomorphism& h) { return is_injective(h) && is_surjective(h); }

/// im(f) == ker(g) for composable f: A -> B, g: B -> C.
inline bool is_exact_at(const Homomorphism& f, const Homomorphism& g) {
  if (f.target() != g.source()) throw SignatureError("is_exact_at: maps are not composable");
  if (!compose(g, f).is_zero()) return false;
  IntMatrix kernel_gens = kernel_lattice(g.matrix(), g.target().factors());
  return span_contains(f.matrix(), f.target().factors(), kernel_gens);
}

/// Canonical G + H with the four structure maps.
struct DirectSum {
  FgAbGroup sum;
  Homomorphism inj1, inj2, proj1, proj2;
};

inline DirectSum direct_sum(const FgAbGroup& g, const FgAbGroup& h) {
  std::vector<Integer> orders = g.factors();
  orders.insert(orders.end(), h.factors().begin(), h.factors().end());
  CanonicalBasis cb = canonical_basis_of_orders(orders);
  const std::size_t a = g.num_factors();
  const std::size_t b = h.num_factors();
  return {cb.group,
          Homomorphism(g, cb.group, cb.to_canonical.col_range(0, a)),
          Homomorphism(h, cb.group, cb.to_canonical.col_range(a, b)),
          Homomorphism(cb.group, g, cb.from_canonical.row_range(0, a)),
          Homomorphism(cb.group, h, cb.from_canonical.row_range(a, b))};
}

/// The unique map y with inclusion o y == f, when f lands in the image of
/// the injective map `inclusion`. Throws PreconditionError otherwise.
inline Homomorphism factor_through(const Homomorphism& inclusion, const Homomorphism& f) {
  if (inclusion.target() != f.target()) throw SignatureError("factor_through: targets differ");
  Subgroup sub{inclusion.source(), inclusion.matrix()};
  IntMatrix out(inclusion.source().num_factors(), f.source().num_factors());
  for (std::size_t c = 0; c < f.source().num_factors(); ++c) {
    auto y = subgroup_coordinates(sub, f.target().factors(), f.matrix().column(c));
    if (!y) throw PreconditionError("factor_through: map does not land in the subgroup");
    for (std::size_t r = 0; r < y->size(); ++r) out(r, c) = (*y)[r];
  }
  return Homomorphism(f.source(), inclusion.source(), std::move(out));
}

}  // namespace gammaseq
