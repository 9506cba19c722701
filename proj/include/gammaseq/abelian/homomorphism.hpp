#pragma once

#include "gammaseq/abelian/group.hpp"
#include "gammaseq/abelian/matrix.hpp"

#include <sstream>
#include <string>
#include <utility>

namespace gammaseq {

/// True iff the matrix defines a homomorphism source -> target: for every
/// finite source factor d_i, d_i * m(j, i) vanishes modulo the target factor
/// d'_j (and is exactly 0 when d'_j is free). Equivalently, m(j, i) is a
/// multiple of d'_j / gcd(d_i, d'_j), or 0 when d'_j = 0.
/// Throws DimensionError when the shape does not match the factor counts.
inline bool validate_hom(const FgAbGroup& source, const FgAbGroup& target, const IntMatrix& matrix) {
  if (matrix.rows() != target.num_factors() || matrix.cols() != source.num_factors()) {
    throw DimensionError("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                         ", expected " + std::to_string(target.num_factors()) + "x" +
                         std::to_string(source.num_factors()));
  }
  for (std::size_t i = 0; i < source.num_factors(); ++i) {
    const Integer& d = source.factor(i);
    if (d == 0) continue;
    for (std::size_t j = 0; j < target.num_factors(); ++j) {
      if (!divides_or_zero(target.factor(j), d * matrix(j, i))) return false;
    }
  }
  return true;
}

/// Group homomorphism. Columns index source factors, rows index target
/// factors; entries are stored reduced modulo the target factor.
class Homomorphism {
 public:
  /// Throws DimensionError on shape mismatch and InvalidHomomorphism when
  /// the matrix is not well defined on the source relations.
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (!validate_hom(source_, target_, matrix_)) throw InvalidHomomorphism("matrix does not define a homomorphism");
    normalize();
  }

  static Homomorphism zero(const FgAbGroup& source, const FgAbGroup& target) {
    return Homomorphism(source, target, IntMatrix(target.num_factors(), source.num_factors()), Trusted{});
  }

  static Homomorphism identity(const FgAbGroup& g) {
    return Homomorphism(g, g, IntMatrix::identity(g.num_factors()), Trusted{});
  }

  /// Multiplication by an integer on g.
  static Homomorphism scalar(const FgAbGroup& g, const Integer& k) {
    IntMatrix m(g.num_factors(), g.num_factors());
    for (std::size_t i = 0; i < g.num_factors(); ++i) m(i, i) = k;
    return Homomorphism(g, g, std::move(m), Trusted{});
  }

  const FgAbGroup& source() const noexcept { return source_; }
  const FgAbGroup& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const Integer& entry(std::size_t row, std::size_t col) const { return matrix_(row, col); }

  bool is_zero() const { return matrix_.is_zero(); }

  GroupElement operator()(const GroupElement& x) const {
    if (x.group() != source_) throw SignatureError("applying a homomorphism outside its source");
    std::vector<Integer> out(target_.num_factors(), 0);
    for (std::size_t j = 0; j < out.size(); ++j)
      for (std::size_t i = 0; i < source_.num_factors(); ++i) out[j] += matrix_(j, i) * x.coords()[i];
    return GroupElement(target_, std::move(out));
  }

  std::string to_string() const {
    std::ostringstream os;
    os << matrix_;
    return os.str();
  }

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;

  // Operations on valid homomorphisms whose result is valid by construction.
  friend Homomorphism compose(const Homomorphism& g, const Homomorphism& f);
  friend Homomorphism add(const Homomorphism& f, const Homomorphism& g);
  friend Homomorphism neg(const Homomorphism& f);

 private:
  struct Trusted {};
  Homomorphism(FgAbGroup source, FgAbGroup target, IntMatrix matrix, Trusted)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    normalize();
  }

  void normalize() {
    for (std::size_t j = 0; j < matrix_.rows(); ++j) {
      const Integer& d = target_.factor(j);
      if (d == 0) continue;
      for (std::size_t i = 0; i < matrix_.cols(); ++i) matrix_(j, i) = reduce(matrix_(j, i), d);
    }
  }

  FgAbGroup source_;
  FgAbGroup target_;
  IntMatrix matrix_;
};

/// g after f.
inline Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (f.target_ != g.source_) {
    throw SignatureError("compose: " + f.target_.to_string() + " does not match " + g.source_.to_string());
  }
  return Homomorphism(f.source_, g.target_, g.matrix_ * f.matrix_, Homomorphism::Trusted{});
}

inline Homomorphism add(const Homomorphism& f, const Homomorphism& g) {
  if (f.source_ != g.source_ || f.target_ != g.target_) throw SignatureError("add: signatures differ");
  return Homomorphism(f.source_, f.target_, f.matrix_ + g.matrix_, Homomorphism::Trusted{});
}

inline Homomorphism neg(const Homomorphism& f) {
  return Homomorphism(f.source_, f.target_, -f.matrix_, Homomorphism::Trusted{});
}

inline Homomorphism sub(const Homomorphism& f, const Homomorphism& g) { return add(f, neg(g)); }

inline bool validate_hom(const Homomorphism& h) { return validate_hom(h.source(), h.target(), h.matrix()); }

}  // namespace gammaseq
