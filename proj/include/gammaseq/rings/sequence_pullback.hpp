#pragma once

#include "gammaseq/gamma/sequence.hpp"

#include <vector>

namespace gammaseq {

/// For a sequence with h_mid = 0, End(Γ) is the pullback R1 x_E R2 with
/// E = End(Im b):
///   R1 = {f in End(h_top) | f(ker b) <= ker b}, f1(f)(b y) = b(f y);
///   R2 = {g in End(h_bot) | (g (x) Z/2)(Im b) <= Im b}, f2(g) = restriction.
/// R1 is infinite when h_top != 0, so everything is pointwise.
class SequencePullbackData {
 public:
  explicit SequencePullbackData(GammaSequence s)
      : s_(std::move(s)), ker_b_(kernel(s_.b)), im_b_(image(s_.b)) {
    if (!s_.h_mid.is_trivial()) throw PreconditionError("sequence_pullback_data: h_mid must be trivial");
    // a preimage under b of every generator of Im b
    const IntMatrix& inc = im_b_.map.matrix();
    IntMatrix system = s_.b.matrix().hstack(diagonal(s_.tensor().factors()));
    for (std::size_t k = 0; k < inc.cols(); ++k) {
      auto y = integer_solve(system, inc.column(k));
      if (!y) throw PreconditionError("sequence_pullback_data: image generator without a preimage");
      lifts_.emplace_back(y->begin(), y->begin() + static_cast<std::ptrdiff_t>(s_.h_top.num_factors()));
    }
  }

  const GammaSequence& sequence() const noexcept { return s_; }
  const FgAbGroup& kernel_b() const noexcept { return ker_b_.group; }
  const FgAbGroup& image_b() const noexcept { return im_b_.group; }

  bool in_r1(const Homomorphism& f) const {
    return compose(s_.b, compose(f, ker_b_.map)).is_zero();
  }

  bool in_r2(const Homomorphism& g) const {
    const Homomorphism tg = tensor_Z2_map(g);
    return span_contains(im_b_.map.matrix(), s_.tensor().factors(), compose(tg, im_b_.map).matrix());
  }

  /// The endomorphism of Im b induced by f in R1.
  Homomorphism f1(const Homomorphism& f) const {
    const FgAbGroup& im = im_b_.group;
    IntMatrix images(s_.tensor().num_factors(), im.num_factors());
    for (std::size_t k = 0; k < lifts_.size(); ++k) {
      const GroupElement y(s_.h_top, lifts_[k]);
      const GroupElement by = s_.b(f(y));
      for (std::size_t r = 0; r < images.rows(); ++r) images(r, k) = by.coords()[r];
    }
    return restrict_to_image(Homomorphism(im, s_.tensor(), std::move(images)));
  }

  /// The restriction of g (x) Z/2 to Im b, for g in R2.
  Homomorphism f2(const Homomorphism& g) const {
    return restrict_to_image(compose(tensor_Z2_map(g), im_b_.map));
  }

 private:
  Homomorphism restrict_to_image(const Homomorphism& into_t) const { return factor_through(im_b_.map, into_t); }

  GammaSequence s_;
  SubgroupMap ker_b_;
  SubgroupMap im_b_;
  std::vector<std::vector<Integer>> lifts_;
};

inline SequencePullbackData sequence_pullback_data(const GammaSequence& s) { return SequencePullbackData(s); }

}  // namespace gammaseq
