#pragma once

#include <memory>
#include <optional>
#include <span>

#include "redcor/matrix.hpp"

namespace redcor {

/// The kernel engine: the submodule of R^w spanned by the rows of a
/// generator matrix B, with canonical reduction, membership with
/// certificates, and the left kernel {x : x * B = 0}.
///
/// Over ZZ and ZZ/n this is a Hermite normal form with a tracked
/// transformation (ZZ/n lifts to ZZ and adjoins n * I). Over polynomial
/// rings it is a Gröbner basis of the rows of [B | I] under a
/// position-over-term order that eliminates the first block.
class RowSpan {
 public:
  RowSpan(const Ring& ring, const Matrix& generators);

  const Ring& ring() const { return ring_; }
  std::size_t width() const { return width_; }
  std::size_t generator_count() const { return count_; }

  /// Canonical coset representative of v modulo the span.
  Vector reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Some x with x * B = v, if v lies in the span.
  std::optional<Vector> solve(std::span<const Elem> v) const;
  /// Rows generating the left kernel of B.
  Matrix syzygies() const;
  /// Polynomial rings: (position, monomial) lead terms of the reduced
  /// Gröbner basis of the span. Empty over ZZ and ZZ/n.
  std::vector<std::pair<std::size_t, Exponents>> leading_terms() const;

  struct Impl;

 private:
  Ring ring_;
  std::size_t width_;
  std::size_t count_;
  std::shared_ptr<const Impl> impl_;
};

/// Rows generating {v : v * A = 0}.
Matrix syzygies(const Ring& ring, const Matrix& a);

/// Drops zero rows and, over ZZ/ZZ_n, replaces the rows by the nonzero
/// rows of their reduced Hermite form. Same span, usually fewer rows.
Matrix tidy_rows(const Ring& ring, const Matrix& rows);

namespace integer_linear {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

struct Hermite {
  IntMatrix form;                 // row echelon, positive pivots, reduced above pivots
  IntMatrix transform;            // form = transform * input (when tracked)
  std::vector<std::size_t> pivot_columns;  // one per nonzero row, in order
};

/// Row Hermite normal form over ZZ. When `track` is set, `transform_width`
/// columns of the unimodular transform are kept; if `transform_modulus` is
/// nonzero they are kept reduced modulo it.
Hermite hermite(IntMatrix rows, std::size_t width, bool track, std::size_t transform_width,
                const Integer& transform_modulus);

}  // namespace integer_linear
}  // namespace redcor
