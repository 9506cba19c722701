#pragma once

#include "gammaseq/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gammaseq {

/// A finite unital ring stored extensionally. Elements are 0..order-1 and
/// both operations are full order x order tables. The ring axioms are
/// checked exhaustively at construction.
class FiniteRing {
 public:
  using Index = std::uint16_t;
  static constexpr std::size_t max_order = 512;

  FiniteRing(std::size_t order, std::vector<Index> add_table, std::vector<Index> mul_table, std::size_t zero,
             std::size_t one, std::vector<std::string> labels = {})
      : order_(order),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        zero_(zero),
        one_(one),
        labels_(std::move(labels)) {
    if (order_ == 0) throw RingAxiomError("a ring has at least one element");
    if (order_ > max_order) {
      throw CapExceeded("ring of order " + std::to_string(order_) + " exceeds the table cap " +
                        std::to_string(max_order));
    }
    if (add_.size() != order_ * order_ || mul_.size() != order_ * order_) throw DimensionError("ring table size");
    if (zero_ >= order_ || one_ >= order_) throw RingAxiomError("zero/one index out of range");
    if (!labels_.empty() && labels_.size() != order_) throw DimensionError("ring label count");
    for (auto x : add_)
      if (x >= order_) throw RingAxiomError("addition table entry out of range");
    for (auto x : mul_)
      if (x >= order_) throw RingAxiomError("multiplication table entry out of range");
    check_axioms();
    neg_.resize(order_);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (add(a, b) == zero_) neg_[a] = static_cast<Index>(b);
  }

  /// The zero ring, where 0 = 1.
  static FiniteRing trivial() { return FiniteRing(1, {0}, {0}, 0, 0, {"0"}); }

  /// Z/n.
  static FiniteRing cyclic(std::size_t n) {
    std::vector<Index> a(n * n), m(n * n);
    std::vector<std::string> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
      labels[x] = std::to_string(x);
      for (std::size_t y = 0; y < n; ++y) {
        a[x * n + y] = static_cast<Index>((x + y) % n);
        m[x * n + y] = static_cast<Index>((x * y) % n);
      }
    }
    return FiniteRing(n, std::move(a), std::move(m), 0, n == 1 ? 0 : 1, std::move(labels));
  }

  std::size_t order() const noexcept { return order_; }
  std::size_t zero() const noexcept { return zero_; }
  std::size_t one() const noexcept { return one_; }
  std::size_t add(std::size_t a, std::size_t b) const { return add_[a * order_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t a) const { return labels_.empty() ? std::to_string(a) : labels_[a]; }

  /// k * a for k >= 0.
  std::size_t scale(std::size_t k, std::size_t a) const {
    std::size_t acc = zero_;
    for (std::size_t i = 0; i < k; ++i) acc = add(acc, a);
    return acc;
  }

  /// a^k for k >= 1.
  std::size_t power(std::size_t a, std::size_t k) const {
    std::size_t acc = one_;
    for (std::size_t i = 0; i < k; ++i) acc = mul(acc, a);
    return acc;
  }

  /// Additive order of a.
  std::size_t additive_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t acc = a; acc != zero_; acc = add(acc, a)) ++k;
    return k;
  }

  const std::vector<Index>& add_table() const noexcept { return add_; }
  const std::vector<Index>& mul_table() const noexcept { return mul_; }

 private:
  void check_axioms() const {
    const std::size_t n = order_;
    for (std::size_t a = 0; a < n; ++a) {
      if (add(zero_, a) != a || add(a, zero_) != a) throw RingAxiomError("zero is not an additive identity");
      if (mul(one_, a) != a || mul(a, one_) != a) throw RingAxiomError("one is not a multiplicative identity");
      bool has_inverse = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) throw RingAxiomError("addition is not commutative");
        has_inverse = has_inverse || add(a, b) == zero_;
      }
      if (!has_inverse) throw RingAxiomError("missing additive inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab_sum = add(a, b);
        const std::size_t ab_mul = mul(a, b);
        const Index* add_ab_row = &add_[ab_sum * n];
        const Index* mul_ab_row = &mul_[ab_mul * n];
        const Index* add_b_row = &add_[b * n];
        const Index* mul_b_row = &mul_[b * n];
        const Index* mul_a_row = &mul_[a * n];
        for (std::size_t c = 0; c < n; ++c) {
          if (add_ab_row[c] != add(a, add_b_row[c])) throw RingAxiomError("addition is not associative");
          if (mul_ab_row[c] != mul(a, mul_b_row[c])) throw RingAxiomError("multiplication is not associative");
          // a(b + c) = ab + ac and (b + c)a = ba + ca
          if (mul(a, add_b_row[c]) != add(ab_mul, mul_a_row[c])) throw RingAxiomError("left distributivity fails");
          if (mul(add_b_row[c], a) != add(mul(b, a), mul(c, a))) throw RingAxiomError("right distributivity fails");
        }
      }
  }

  std::size_t order_;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::size_t zero_;
  std::size_t one_;
  std::vector<std::string> labels_;
  std::vector<Index> neg_;
};

}  // namespace gammaseq
