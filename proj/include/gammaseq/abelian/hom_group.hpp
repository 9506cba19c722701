#pragma once

#include "gammaseq/abelian/presentation.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace gammaseq {

/// Free coordinates of Hom(G, H). Entry (row, col) of a homomorphism
/// matrix equals scale * z with z ranging over Z/order (order 0 = Z).
/// Entries forced to zero (finite source, free target) are omitted.
struct HomCoordinate {
  std::size_t row;
  std::size_t col;
  Integer scale;
  Integer order;
};

struct HomParametrization {
  FgAbGroup source;
  FgAbGroup target;
  std::vector<HomCoordinate> coords;

  std::vector<Integer> orders() const {
    std::vector<Integer> out;
    out.reserve(coords.size());
    for (const auto& c : coords) out.push_back(c.order);
    return out;
  }

  /// Homomorphism with free coordinates z.
  Homomorphism assemble(const std::vector<Integer>& z) const {
    IntMatrix m(target.num_factors(), source.num_factors());
    for (std::size_t k = 0; k < coords.size(); ++k) m(coords[k].row, coords[k].col) = coords[k].scale * z[k];
    return Homomorphism(source, target, std::move(m));
  }

  /// Free coordinates of h, reduced.
  std::vector<Integer> coordinates(const Homomorphism& h) const {
    std::vector<Integer> z(coords.size());
    for (std::size_t k = 0; k < coords.size(); ++k)
      z[k] = reduce(h.entry(coords[k].row, coords[k].col) / coords[k].scale, coords[k].order);
    return z;
  }

  /// |Hom(G, H)|; 0 signals an infinite group.
  Integer size() const {
    Integer n = 1;
    for (const auto& c : coords) n *= c.order;
    return n;
  }
};

/// Hom(Z/d, Z/d') = Z/gcd(d, d') generated by d'/gcd; Hom(Z, Z/d') = Z/d';
/// Hom(Z/d, Z) = 0; Hom(Z, Z) = Z.
inline HomParametrization hom_parametrization(const FgAbGroup& source, const FgAbGroup& target) {
  HomParametrization p{source, target, {}};
  for (std::size_t j = 0; j < target.num_factors(); ++j)
    for (std::size_t i = 0; i < source.num_factors(); ++i) {
      const Integer& d = source.factor(i);
      const Integer& e = target.factor(j);
      if (d != 0 && e == 0) continue;
      if (d == 0) {
        p.coords.push_back({j, i, 1, e});
      } else {
        Integer g = gcd(d, e);
        if (g == 1) continue;
        p.coords.push_back({j, i, e / g, g});
      }
    }
  return p;
}

struct HomGroup {
  FgAbGroup group;
  std::vector<Homomorphism> basis;  ///< one generator per invariant factor of `group`
};

/// Hom(G, H) as an abelian group with a generating homomorphism for each factor.
inline HomGroup hom_group(const FgAbGroup& source, const FgAbGroup& target) {
  HomParametrization p = hom_parametrization(source, target);
  CanonicalBasis cb = canonical_basis_of_orders(p.orders());
  HomGroup out{cb.group, {}};
  for (std::size_t k = 0; k < cb.group.num_factors(); ++k) out.basis.push_back(p.assemble(cb.from_canonical.column(k)));
  return out;
}

/// Default cap on the size of brute-force enumerations. GAMMASEQ_ENUM_CAP
/// in the environment overrides it.
inline Integer default_enumeration_cap() {
  if (const char* env = std::getenv("GAMMASEQ_ENUM_CAP")) {
    try {
      Integer v(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 1000000;
}

}  // namespace gammaseq
