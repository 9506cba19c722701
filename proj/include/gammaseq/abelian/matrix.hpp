#pragma once

#include "gammaseq/abelian/integer.hpp"
#include "gammaseq/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

namespace gammaseq {

/// Dense row-major matrix. Small by design: every matrix in this library
/// is indexed by the cyclic factors of a group.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (x != 0) return false;
    }
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Columns [first, first + count).
  Matrix col_range(std::size_t first, std::size_t count) const {
    Matrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
  }

  /// Rows [first, first + count).
  Matrix row_range(std::size_t first, std::size_t count) const {
    Matrix out(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
    return out;
  }

  Matrix select_rows(const std::vector<std::size_t>& which) const {
    Matrix out(which.size(), cols_);
    for (std::size_t r = 0; r < which.size(); ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(which[r], c);
    return out;
  }

  Matrix select_cols(const std::vector<std::size_t>& which) const {
    Matrix out(rows_, which.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < which.size(); ++c) out(r, c) = (*this)(r, which[c]);
    return out;
  }

  /// [this | other]
  Matrix hstack(const Matrix& other) const {
    if (other.rows_ != rows_) throw DimensionError("hstack: row counts differ");
    Matrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (x == 0) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += x * b(k, c);
      }
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? ",[" : "[");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? "," : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;

/// Diagonal matrix with the given entries.
inline IntMatrix diagonal(const std::vector<Integer>& entries) {
  IntMatrix d(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) d(i, i) = entries[i];
  return d;
}

}  // namespace gammaseq
