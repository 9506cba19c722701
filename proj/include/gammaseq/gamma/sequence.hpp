#pragma once

#include "gammaseq/abelian/presentation.hpp"
#include "gammaseq/abelian/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gammaseq {

/// H_top --b--> H_bot (x) Z/2 --i--> pi --h--> H_mid --> 0 with H_top free.
/// The dimension index is not stored; every n in the stable range gives
/// the same data.
struct GammaSequence {
  FgAbGroup h_top;
  FgAbGroup h_mid;
  FgAbGroup h_bot;
  FgAbGroup pi;
  Homomorphism b;
  Homomorphism i;
  Homomorphism h;

  /// H_bot (x) Z/2.
  FgAbGroup tensor() const { return tensor_Z2(h_bot); }

  bool all_finite() const { return h_top.is_finite() && h_mid.is_finite() && h_bot.is_finite() && pi.is_finite(); }

  friend bool operator==(const GammaSequence&, const GammaSequence&) = default;
};

enum class SequenceIssue { TopNotFree, NotExactAtTensor, NotExactAtPi, NotSurjective };

inline const char* to_string(SequenceIssue issue) {
  switch (issue) {
    case SequenceIssue::TopNotFree:
      return "h_top is not free";
    case SequenceIssue::NotExactAtTensor:
      return "not exact at h_bot (x) Z/2: image(b) != kernel(i)";
    case SequenceIssue::NotExactAtPi:
      return "not exact at pi: image(i) != kernel(h)";
    case SequenceIssue::NotSurjective:
      return "h is not surjective";
  }
  return "unknown";
}

struct ValidationReport {
  std::vector<std::string> signature_errors;  ///< maps whose source/target do not line up
  std::vector<SequenceIssue> issues;
  bool degenerate = false;  ///< all four groups trivial; still valid

  bool valid() const { return signature_errors.empty() && issues.empty(); }
};

/// Signature problems of the three maps, empty when they line up.
inline std::vector<std::string> signature_errors(const GammaSequence& s) {
  std::vector<std::string> out;
  const FgAbGroup t = s.tensor();
  auto check = [&](const char* name, const Homomorphism& f, const FgAbGroup& from, const FgAbGroup& to) {
    if (f.source() != from)
      out.push_back(std::string(name) + ": source " + f.source().to_string() + ", expected " + from.to_string());
    if (f.target() != to)
      out.push_back(std::string(name) + ": target " + f.target().to_string() + ", expected " + to.to_string());
  };
  check("b", s.b, s.h_top, t);
  check("i", s.i, t, s.pi);
  check("h", s.h, s.pi, s.h_mid);
  return out;
}

/// Every failed invariant of a Γ-sequence. Signature problems are
/// reported on their own, before (and instead of) exactness checks.
inline ValidationReport validate_sequence(const GammaSequence& s) {
  ValidationReport r;
  r.signature_errors = signature_errors(s);
  r.degenerate = s.h_top.is_trivial() && s.h_mid.is_trivial() && s.h_bot.is_trivial() && s.pi.is_trivial();
  if (!r.signature_errors.empty()) return r;
  if (!s.h_top.is_free()) r.issues.push_back(SequenceIssue::TopNotFree);
  if (!is_exact_at(s.b, s.i)) r.issues.push_back(SequenceIssue::NotExactAtTensor);
  if (!is_exact_at(s.i, s.h)) r.issues.push_back(SequenceIssue::NotExactAtPi);
  if (!is_surjective(s.h)) r.issues.push_back(SequenceIssue::NotSurjective);
  return r;
}

/// (f_top, f_mid, f_bot) between two sequences with an optional witness Ω.
struct GammaMorphism {
  GammaSequence source;
  GammaSequence target;
  Homomorphism f_top;
  Homomorphism f_mid;
  Homomorphism f_bot;
  std::optional<Homomorphism> omega;
};

/// Throws SignatureError unless f_top, f_mid, f_bot run between the
/// matching groups of src and dst.
inline void check_triple_signature(const GammaSequence& src, const GammaSequence& dst, const Homomorphism& f_top,
                                   const Homomorphism& f_mid, const Homomorphism& f_bot) {
  auto check = [](const char* name, const Homomorphism& f, const FgAbGroup& from, const FgAbGroup& to) {
    if (f.source() != from || f.target() != to) {
      throw SignatureError(std::string(name) + " must map " + from.to_string() + " -> " + to.to_string() + ", got " +
                           f.source().to_string() + " -> " + f.target().to_string());
    }
  };
  check("f_top", f_top, src.h_top, dst.h_top);
  check("f_mid", f_mid, src.h_mid, dst.h_mid);
  check("f_bot", f_bot, src.h_bot, dst.h_bot);
}

/// T(f_bot) o b == b' o f_top.
inline bool b_square_commutes(const GammaSequence& src, const GammaSequence& dst, const Homomorphism& f_top,
                              const Homomorphism& f_bot) {
  return compose(tensor_Z2_map(f_bot), src.b) == compose(dst.b, f_top);
}

/// The full ladder: b-square, Ω o i == i' o T(f_bot) and h' o Ω == f_mid o h.
inline bool diagram_commutes(const GammaSequence& src, const GammaSequence& dst, const Homomorphism& f_top,
                             const Homomorphism& f_mid, const Homomorphism& f_bot, const Homomorphism& omega) {
  check_triple_signature(src, dst, f_top, f_mid, f_bot);
  if (omega.source() != src.pi || omega.target() != dst.pi) throw SignatureError("omega must map pi -> pi'");
  return b_square_commutes(src, dst, f_top, f_bot) &&
         compose(omega, src.i) == compose(dst.i, tensor_Z2_map(f_bot)) &&
         compose(dst.h, omega) == compose(f_mid, src.h);
}

/// A morphism carrying a witness must make the whole diagram commute.
inline bool witness_commutes(const GammaMorphism& m) {
  if (!m.omega) return false;
  return diagram_commutes(m.source, m.target, m.f_top, m.f_mid, m.f_bot, *m.omega);
}

}  // namespace gammaseq
