#pragma once

#include "gammaseq/abelian/hom_group.hpp"
#include "gammaseq/gamma/sequence.hpp"

#include <optional>

namespace gammaseq {

enum class OmegaStatus {
  Found,
  NoWitness,     ///< the b-square commutes but no Ω exists
  BSquareFails,  ///< not a Γ-morphism candidate
};

inline const char* to_string(OmegaStatus s) {
  switch (s) {
    case OmegaStatus::Found:
      return "found";
    case OmegaStatus::NoWitness:
      return "no omega exists";
    case OmegaStatus::BSquareFails:
      return "not a gamma-morphism candidate: b-square does not commute";
  }
  return "unknown";
}

struct OmegaOutcome {
  OmegaStatus status;
  std::optional<Homomorphism> omega;

  explicit operator bool() const { return status == OmegaStatus::Found; }
};

namespace detail {

/// Ω with Ω o i == lhs_i and h' o Ω == lhs_h, as a linear congruence system
/// in the free coordinates of Hom(pi, pi'). One row per entry of the two
/// composite matrices and one slack column per finite modulus.
inline std::optional<Homomorphism> solve_omega_system(const GammaSequence& src, const GammaSequence& dst,
                                                      const Homomorphism& lhs_i, const Homomorphism& lhs_h) {
  const HomParametrization param = hom_parametrization(src.pi, dst.pi);
  const std::size_t nz = param.coords.size();
  const std::size_t t_n = src.i.source().num_factors();
  const std::size_t pi_n = src.pi.num_factors();
  const std::size_t pi2_n = dst.pi.num_factors();
  const std::size_t m2_n = dst.h_mid.num_factors();

  const std::size_t rows = pi2_n * t_n + m2_n * pi_n;
  std::vector<Integer> moduli(rows);
  std::vector<Integer> rhs(rows);
  IntMatrix a(rows, nz);
  // rows (k, t): sum_l Ω_kl i_lt == lhs_i(k, t) mod d'_k
  for (std::size_t k = 0; k < pi2_n; ++k)
    for (std::size_t t = 0; t < t_n; ++t) {
      const std::size_t r = k * t_n + t;
      moduli[r] = dst.pi.factor(k);
      rhs[r] = lhs_i.entry(k, t);
    }
  // rows (j, l): sum_k h'_jk Ω_kl == lhs_h(j, l) mod m'_j
  const std::size_t off = pi2_n * t_n;
  for (std::size_t j = 0; j < m2_n; ++j)
    for (std::size_t l = 0; l < pi_n; ++l) {
      const std::size_t r = off + j * pi_n + l;
      moduli[r] = dst.h_mid.factor(j);
      rhs[r] = lhs_h.entry(j, l);
    }
  for (std::size_t c = 0; c < nz; ++c) {
    const auto& co = param.coords[c];  // Ω_(row, col) = scale * z_c
    for (std::size_t t = 0; t < t_n; ++t) {
      const Integer& it = src.i.entry(co.col, t);
      if (it != 0) a(co.row * t_n + t, c) += co.scale * it;
    }
    for (std::size_t j = 0; j < m2_n; ++j) {
      const Integer& hj = dst.h.entry(j, co.row);
      if (hj != 0) a(off + j * pi_n + co.col, c) += co.scale * hj;
    }
  }
  std::vector<std::size_t> slack;
  for (std::size_t r = 0; r < rows; ++r)
    if (moduli[r] != 0) slack.push_back(r);
  IntMatrix system(rows, nz + slack.size());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < nz; ++c) system(r, c) = a(r, c);
  for (std::size_t s = 0; s < slack.size(); ++s) system(slack[s], nz + s) = moduli[slack[s]];

  auto sol = integer_solve(system, rhs);
  if (!sol) return std::nullopt;
  std::vector<Integer> z(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(nz));
  for (std::size_t c = 0; c < nz; ++c)
    if (param.coords[c].order != 0) z[c] = reduce(z[c], param.coords[c].order);
  return param.assemble(z);
}

}  // namespace detail

/// Decides whether (f_top, f_mid, f_bot) extends to a Γ-morphism src -> dst
/// and returns a witness Ω when it does. Both sequences are assumed valid.
/// The b-square is checked first and reported separately. The witness is
/// the SNF solution with free coordinates set to zero, reduced.
inline OmegaOutcome omega_solve(const GammaSequence& src, const GammaSequence& dst, const Homomorphism& f_top,
                                const Homomorphism& f_mid, const Homomorphism& f_bot) {
  check_triple_signature(src, dst, f_top, f_mid, f_bot);
  const Homomorphism t_bot = tensor_Z2_map(f_bot);
  if (compose(t_bot, src.b) != compose(dst.b, f_top)) return {OmegaStatus::BSquareFails, std::nullopt};
  auto omega = detail::solve_omega_system(src, dst, compose(dst.i, t_bot), compose(f_mid, src.h));
  if (!omega) return {OmegaStatus::NoWitness, std::nullopt};
  return {OmegaStatus::Found, std::move(omega)};
}

inline bool is_gamma_morphism(const GammaSequence& src, const GammaSequence& dst, const Homomorphism& f_top,
                              const Homomorphism& f_mid, const Homomorphism& f_bot) {
  return static_cast<bool>(omega_solve(src, dst, f_top, f_mid, f_bot));
}

/// Pointwise membership test for End(Γ); works when End(Γ) is infinite.
inline bool membership_predicate(const GammaSequence& s, const Homomorphism& f_top, const Homomorphism& f_mid,
                                 const Homomorphism& f_bot) {
  return is_gamma_morphism(s, s, f_top, f_mid, f_bot);
}

/// The morphism with its witness, or nullopt.
inline std::optional<GammaMorphism> gamma_morphism(const GammaSequence& src, const GammaSequence& dst,
                                                   const Homomorphism& f_top, const Homomorphism& f_mid,
                                                   const Homomorphism& f_bot) {
  OmegaOutcome out = omega_solve(src, dst, f_top, f_mid, f_bot);
  if (!out) return std::nullopt;
  return GammaMorphism{src, dst, f_top, f_mid, f_bot, std::move(out.omega)};
}

}  // namespace gammaseq
