#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "redcor/ring.hpp"

namespace redcor {

using Vector = std::vector<Elem>;

/// Dense row-major matrix of canonical element values. The ring is not
/// stored; every arithmetic helper takes it explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Elem& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static Matrix zero(const Ring& ring, std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols, ring.zero());
  }
  static Matrix identity(const Ring& ring, std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Elem> row_view(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  Vector row(std::size_t i) const {
    auto v = row_view(i);
    return Vector(v.begin(), v.end());
  }
  void set_row(std::size_t i, const Vector& v);
  void append_row(const Vector& v);
  std::vector<Vector> row_list() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

namespace mat {

Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix scale(const Ring& ring, const Elem& c, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Rows of `a` followed by rows of `b`; an empty side may have any width.
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Ring& ring, const Matrix& a, const Matrix& b);
/// Kronecker product; row index (i, k) -> i * b.rows() + k.
Matrix kron(const Ring& ring, const Matrix& a, const Matrix& b);
/// Columns [begin, end).
Matrix columns(const Matrix& a, std::size_t begin, std::size_t end);
Matrix rows(const Matrix& a, std::size_t begin, std::size_t end);
bool is_zero(const Ring& ring, const Matrix& a);

Vector vec_mul(const Ring& ring, std::span<const Elem> v, const Matrix& a);
Vector vec_add(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
Vector vec_sub(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b);
Vector vec_scale(const Ring& ring, const Elem& c, std::span<const Elem> v);
bool vec_is_zero(const Ring& ring, std::span<const Elem> v);

/// Flatten row-major into a single row vector.
Vector flatten(const Matrix& a);
Matrix reshape(std::span<const Elem> v, std::size_t rows, std::size_t cols);

}  // namespace mat
}  // namespace redcor
