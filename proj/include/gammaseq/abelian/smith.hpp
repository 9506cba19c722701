#pragma once

// Smith normal form over the integers and the two things everything else
// is built from: integer null spaces and integer solutions of A x = b.
//
// Elimination runs first on checked 64-bit words; any overflow restarts the
// whole computation on arbitrary-precision integers, so results never
// depend on which path produced them.

#include "gammaseq/abelian/integer.hpp"
#include "gammaseq/abelian/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace gammaseq {

struct SmithForm {
  IntMatrix U;      ///< unimodular, rows x rows
  IntMatrix D;      ///< diagonal, d_1 | d_2 | ... | d_rank, non-negative
  IntMatrix V;      ///< unimodular, cols x cols
  IntMatrix U_inv;  ///< inverse of U
  std::size_t rank = 0;

  Integer diag(std::size_t k) const { return k < std::min(D.rows(), D.cols()) ? D(k, k) : Integer(0); }
};

namespace detail {

struct Overflow {};

/// int64 that throws Overflow instead of wrapping.
class Checked64 {
 public:
  Checked64() = default;
  Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
    return r;
  }
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (a.v_ == INT64_MIN && b.v_ == -1) throw Overflow{};
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == INT64_MIN) throw Overflow{};
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
  friend bool operator!=(Checked64 a, Checked64 b) { return a.v_ != b.v_; }
  friend bool operator<(Checked64 a, Checked64 b) { return a.v_ < b.v_; }
  friend bool operator>(Checked64 a, Checked64 b) { return a.v_ > b.v_; }
  friend bool operator<=(Checked64 a, Checked64 b) { return a.v_ <= b.v_; }

 private:
  std::int64_t v_ = 0;
};

template <class T>
T magnitude(const T& a) {
  return a < T(0) ? -a : a;
}

template <class T>
struct SmithWork {
  Matrix<T> A, U, U_inv, V;
  std::size_t rank = 0;
};

// row_dst += q * row_src, mirrored on U (same op) and U_inv (inverse column op).
template <class T>
void add_row(SmithWork<T>& w, std::size_t dst, std::size_t src, const T& q) {
  auto& A = w.A;
  for (std::size_t c = 0; c < A.cols(); ++c)
    if (A(src, c) != T(0)) A(dst, c) = A(dst, c) + q * A(src, c);
  for (std::size_t c = 0; c < w.U.cols(); ++c)
    if (w.U(src, c) != T(0)) w.U(dst, c) = w.U(dst, c) + q * w.U(src, c);
  for (std::size_t r = 0; r < w.U_inv.rows(); ++r)
    if (w.U_inv(r, dst) != T(0)) w.U_inv(r, src) = w.U_inv(r, src) - q * w.U_inv(r, dst);
}

// col_dst += q * col_src, mirrored on V.
template <class T>
void add_col(SmithWork<T>& w, std::size_t dst, std::size_t src, const T& q) {
  auto& A = w.A;
  for (std::size_t r = 0; r < A.rows(); ++r)
    if (A(r, src) != T(0)) A(r, dst) = A(r, dst) + q * A(r, src);
  for (std::size_t r = 0; r < w.V.rows(); ++r)
    if (w.V(r, src) != T(0)) w.V(r, dst) = w.V(r, dst) + q * w.V(r, src);
}

template <class T>
void swap_row(SmithWork<T>& w, std::size_t a, std::size_t b) {
  w.A.swap_rows(a, b);
  w.U.swap_rows(a, b);
  w.U_inv.swap_cols(a, b);
}

template <class T>
void swap_col(SmithWork<T>& w, std::size_t a, std::size_t b) {
  w.A.swap_cols(a, b);
  w.V.swap_cols(a, b);
}

template <class T>
SmithWork<T> smith_impl(Matrix<T> A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  SmithWork<T> w{std::move(A), Matrix<T>::identity(m), Matrix<T>::identity(m), Matrix<T>::identity(n), 0};
  auto& M = w.A;

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Pivot: smallest non-zero magnitude in the trailing block.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    T best_abs{};
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (M(i, j) == T(0)) continue;
        T a = magnitude(M(i, j));
        if (!best || a < best_abs) {
          best = {i, j};
          best_abs = a;
          if (a == T(1)) goto found;
        }
      }
  found:
    if (!best) break;
    swap_row(w, t, best->first);
    swap_col(w, t, best->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (M(i, t) == T(0)) continue;
        T q = M(i, t) / M(t, t);
        if (q != T(0)) add_row(w, i, t, T(-q));
        if (M(i, t) != T(0)) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (M(t, j) == T(0)) continue;
        T q = M(t, j) / M(t, t);
        if (q != T(0)) add_col(w, j, t, T(-q));
        if (M(t, j) != T(0)) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote the smallest.
        std::size_t bi = t, bj = t;
        T ba = magnitude(M(t, t));
        for (std::size_t i = t + 1; i < m; ++i)
          if (M(i, t) != T(0) && magnitude(M(i, t)) < ba) {
            ba = magnitude(M(i, t));
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (M(t, j) != T(0) && magnitude(M(t, j)) < ba) {
            ba = magnitude(M(t, j));
            bi = t;
            bj = j;
          }
        swap_row(w, t, bi);
        swap_col(w, t, bj);
        continue;
      }
      // Divisibility chain: fold an offending row into the pivot row.
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (M(i, j) % M(t, t) != T(0)) {
            add_row(w, t, i, T(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (M(t, t) < T(0)) {
      for (std::size_t c = 0; c < n; ++c) M(t, c) = -M(t, c);
      for (std::size_t c = 0; c < m; ++c) w.U(t, c) = -w.U(t, c);
      for (std::size_t r = 0; r < m; ++r) w.U_inv(r, t) = -w.U_inv(r, t);
    }
  }
  w.rank = t;
  return w;
}

inline Matrix<Checked64> to_checked(const IntMatrix& M) {
  Matrix<Checked64> out(M.rows(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) {
      auto v = to_int64(M(r, c));
      // Keep headroom so the first products cannot hit the boundary silently.
      if (!v || *v > (INT64_C(1) << 62) || *v < -(INT64_C(1) << 62)) throw Overflow{};
      out(r, c) = *v;
    }
  return out;
}

inline IntMatrix from_checked(const Matrix<Checked64>& M) {
  IntMatrix out(M.rows(), M.cols());
  for (std::size_t r = 0; r < M.rows(); ++r)
    for (std::size_t c = 0; c < M.cols(); ++c) out(r, c) = M(r, c).value();
  return out;
}

}  // namespace detail

/// U * M * V = D with U, V unimodular and D in Smith normal form.
/// Pivoting picks the smallest non-zero magnitude, so output is deterministic.
inline SmithForm smith_normal_form(const IntMatrix& M) {
  try {
    auto w = detail::smith_impl(detail::to_checked(M));
    return {detail::from_checked(w.U), detail::from_checked(w.A), detail::from_checked(w.V),
            detail::from_checked(w.U_inv), w.rank};
  } catch (const detail::Overflow&) {
    auto w = detail::smith_impl(M);
    return {std::move(w.U), std::move(w.A), std::move(w.V), std::move(w.U_inv), w.rank};
  }
}

/// Basis of the integer null space {x in Z^n : M x = 0}, as columns.
inline IntMatrix integer_nullspace(const IntMatrix& M) {
  const std::size_t n = M.cols();
  if (M.rows() == 0) return IntMatrix::identity(n);
  SmithForm s = smith_normal_form(M);
  return s.V.col_range(s.rank, n - s.rank);
}

/// Some x in Z^n with M x = b, or nullopt when none exists.
/// Free coordinates of the diagonal system are set to zero.
inline std::optional<std::vector<Integer>> integer_solve(const IntMatrix& M, const std::vector<Integer>& b) {
  if (b.size() != M.rows()) throw DimensionError("integer_solve: right-hand side length");
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  if (m == 0) return std::vector<Integer>(n, 0);
  SmithForm s = smith_normal_form(M);
  std::vector<Integer> c(m, 0);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k < m; ++k)
      if (s.U(r, k) != 0) c[r] += s.U(r, k) * b[k];
  std::vector<Integer> y(n, 0);
  for (std::size_t k = 0; k < m; ++k) {
    if (k < s.rank) {
      const Integer& d = s.D(k, k);
      if (c[k] % d != 0) return std::nullopt;
      y[k] = c[k] / d;
    } else if (c[k] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(n, 0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < s.rank; ++k)
      if (s.V(r, k) != 0) x[r] += s.V(r, k) * y[k];
  return x;
}

}  // namespace gammaseq
