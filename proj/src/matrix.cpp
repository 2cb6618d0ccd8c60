#include "redcor/matrix.hpp"

namespace redcor {

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m = zero(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m;
  m.cols_ = cols;
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::set_row(std::size_t i, const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::IllFormed, "row width mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vector& v) {
  if (v.size() != cols_) throw Error(ErrorCode::IllFormed, "row width mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

namespace mat {

Matrix mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::IllFormed, "matrix product dimension mismatch");
  Matrix out = Matrix::zero(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (ring.is_zero(b(k, j))) continue;
        out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
      }
    }
  return out;
}

Matrix add(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::IllFormed, "matrix sum dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  return out;
}

Matrix sub(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::IllFormed, "matrix difference dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.sub(a(i, j), b(i, j));
  return out;
}

Matrix scale(const Ring& ring, const Elem& c, const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.mul(c, a(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  if (a.rows() == 0 && a.cols() == 0) return a;
  Matrix out(a.cols(), a.rows(), a.empty() ? Elem{} : a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 && a.cols() != b.cols()) return b;
  if (b.rows() == 0 && a.cols() != b.cols()) return a;
  if (a.cols() != b.cols()) throw Error(ErrorCode::IllFormed, "vstack width mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::IllFormed, "hstack height mismatch");
  Matrix out;
  out = Matrix::from_rows(a.cols() + b.cols(), {});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    auto rb = b.row_view(i);
    r.insert(r.end(), rb.begin(), rb.end());
    out.append_row(r);
  }
  return out;
}

Matrix block_diagonal(const Ring& ring, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::zero(ring, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

Matrix kron(const Ring& ring, const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::zero(ring, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = ring.mul(a(i, j), b(k, l));
    }
  return out;
}

Matrix columns(const Matrix& a, std::size_t begin, std::size_t end) {
  Matrix out = Matrix::from_rows(end - begin, {});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_view(i);
    out.append_row(Vector(r.begin() + static_cast<std::ptrdiff_t>(begin),
                          r.begin() + static_cast<std::ptrdiff_t>(end)));
  }
  return out;
}

Matrix rows(const Matrix& a, std::size_t begin, std::size_t end) {
  Matrix out = Matrix::from_rows(a.cols(), {});
  for (std::size_t i = begin; i < end; ++i) out.append_row(a.row(i));
  return out;
}

bool is_zero(const Ring& ring, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!vec_is_zero(ring, a.row_view(i))) return false;
  return true;
}

Vector vec_mul(const Ring& ring, std::span<const Elem> v, const Matrix& a) {
  if (v.size() != a.rows()) throw Error(ErrorCode::IllFormed, "vector-matrix dimension mismatch");
  Vector out(a.cols(), ring.zero());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (ring.is_zero(v[k])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ring.is_zero(a(k, j))) continue;
      out[j] = ring.add(out[j], ring.mul(v[k], a(k, j)));
    }
  }
  return out;
}

Vector vec_add(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

Vector vec_sub(const Ring& ring, std::span<const Elem> a, std::span<const Elem> b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = ring.sub(a[i], b[i]);
  return out;
}

Vector vec_scale(const Ring& ring, const Elem& c, std::span<const Elem> v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = ring.mul(c, v[i]);
  return out;
}

bool vec_is_zero(const Ring& ring, std::span<const Elem> v) {
  for (const auto& e : v)
    if (!ring.is_zero(e)) return false;
  return true;
}

Vector flatten(const Matrix& a) {
  Vector out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row_view(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

Matrix reshape(std::span<const Elem> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw Error(ErrorCode::IllFormed, "reshape size mismatch");
  Matrix out = Matrix::from_rows(cols, {});
  for (std::size_t i = 0; i < rows; ++i)
    out.append_row(Vector(v.begin() + static_cast<std::ptrdiff_t>(i * cols),
                          v.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols)));
  return out;
}

}  // namespace mat
}  // namespace redcor
