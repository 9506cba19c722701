#pragma once

#include "gammaseq/abelian/integer.hpp"
#include "gammaseq/errors.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace gammaseq {

/// Finitely generated abelian group in invariant-factor form
/// Z/d_1 + ... + Z/d_k + Z^r with d_1 | d_2 | ... and every d_i >= 2.
/// Free factors are stored as 0 and always come last. The empty list is
/// the trivial group. Two values are isomorphic iff they compare equal.
class FgAbGroup {
 public:
  FgAbGroup() = default;

  /// Throws PreconditionError unless the list is already canonical.
  explicit FgAbGroup(std::vector<Integer> invariant_factors) : factors_(std::move(invariant_factors)) {
    bool seen_free = false;
    const Integer* prev = nullptr;
    for (const auto& d : factors_) {
      if (d < 0) throw PreconditionError("negative invariant factor");
      if (d == 1) throw PreconditionError("invariant factor equal to 1");
      if (d == 0) {
        seen_free = true;
        continue;
      }
      if (seen_free) throw PreconditionError("finite factor after a free factor");
      if (prev && d % *prev != 0) throw PreconditionError("invariant factors do not form a divisibility chain");
      prev = &d;
    }
  }

  static FgAbGroup trivial() { return FgAbGroup(); }

  /// Z/n; n == 0 gives Z and n == 1 the trivial group.
  static FgAbGroup cyclic(const Integer& n) {
    if (n == 1) return FgAbGroup();
    return FgAbGroup({abs_value(n)});
  }

  static FgAbGroup free(std::size_t rank) { return FgAbGroup(std::vector<Integer>(rank, 0)); }

  const std::vector<Integer>& factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  const Integer& factor(std::size_t i) const { return factors_.at(i); }

  bool is_trivial() const noexcept { return factors_.empty(); }

  std::size_t free_rank() const {
    std::size_t r = 0;
    for (const auto& d : factors_) r += (d == 0);
    return r;
  }

  bool is_finite() const { return free_rank() == 0; }
  bool is_free() const { return free_rank() == factors_.size(); }

  /// |G|; throws InfiniteGroup when G has a free part.
  Integer order() const {
    Integer n = 1;
    for (const auto& d : factors_) {
      if (d == 0) throw InfiniteGroup("order of an infinite group");
      n *= d;
    }
    return n;
  }

  /// Exponent (largest invariant factor); 0 for infinite groups, 1 for trivial.
  Integer exponent() const {
    if (factors_.empty()) return 1;
    return factors_.back();
  }

  /// "Z/2 + Z/4 + Z^2"; the trivial group prints as "0".
  std::string to_string() const {
    if (factors_.empty()) return "0";
    std::string out;
    for (const auto& d : factors_) {
      if (d == 0) continue;
      if (!out.empty()) out += " + ";
      out += "Z/" + d.str();
    }
    const std::size_t r = free_rank();
    if (r > 0) {
      if (!out.empty()) out += " + ";
      out += r == 1 ? std::string("Z") : "Z^" + std::to_string(r);
    }
    return out;
  }

  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
  friend auto operator<=>(const FgAbGroup& a, const FgAbGroup& b) {
    if (a.factors_.size() != b.factors_.size()) return a.factors_.size() <=> b.factors_.size();
    for (std::size_t i = 0; i < a.factors_.size(); ++i) {
      if (a.factors_[i] < b.factors_[i]) return std::strong_ordering::less;
      if (a.factors_[i] > b.factors_[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  std::vector<Integer> factors_;
};

/// An element of a group, coordinates reduced into [0, d_i) on finite factors.
class GroupElement {
 public:
  GroupElement(FgAbGroup group, std::vector<Integer> coords) : group_(std::move(group)), coords_(std::move(coords)) {
    if (coords_.size() != group_.num_factors()) throw DimensionError("element coordinate count");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = reduce(coords_[i], group_.factor(i));
  }

  static GroupElement zero(const FgAbGroup& g) { return GroupElement(g, std::vector<Integer>(g.num_factors(), 0)); }

  const FgAbGroup& group() const noexcept { return group_; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  friend GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (a.group_ != b.group_) throw SignatureError("adding elements of different groups");
    std::vector<Integer> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return GroupElement(a.group_, std::move(c));
  }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  FgAbGroup group_;
  std::vector<Integer> coords_;
};

}  // namespace gammaseq
