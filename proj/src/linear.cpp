#include "redcor/linear.hpp"

#include <algorithm>

#include "redcor/groebner.hpp"

namespace redcor {

namespace integer_linear {

void row_submul(IntRow& target, const Integer& q, const IntRow& source) {
  for (std::size_t j = 0; j < target.size(); ++j)
    if (source[j] != 0) mpz_submul(target[j].get_mpz_t(), q.get_mpz_t(), source[j].get_mpz_t());
}

void row_mod(IntRow& row, const Integer& modulus) {
  if (modulus == 0) return;
  for (auto& e : row) mpz_fdiv_r(e.get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
}

Hermite hermite(IntMatrix rows, std::size_t width, bool track, std::size_t transform_width,
                const Integer& transform_modulus) {
  const std::size_t m = rows.size();
  IntMatrix t;
  if (track) {
    t.assign(m, IntRow(transform_width, Integer(0)));
    for (std::size_t i = 0; i < std::min(m, transform_width); ++i) t[i][i] = 1;
  }
  Hermite out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < width && row < m; ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == m || mpz_cmpabs(rows[i][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = i;
      }
      if (best == m) break;
      have_pivot = true;
      if (best != row) {
        std::swap(rows[best], rows[row]);
        if (track) std::swap(t[best], t[row]);
      }
      bool cleared = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[row][col].get_mpz_t());
        row_submul(rows[i], q, rows[row]);
        if (track) {
          row_submul(t[i], q, t[row]);
          row_mod(t[i], transform_modulus);
        }
        if (rows[i][col] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (rows[row][col] < 0) {
      for (auto& e : rows[row]) e = -e;
      if (track) {
        for (auto& e : t[row]) e = -e;
        row_mod(t[row], transform_modulus);
      }
    }
    for (std::size_t k = 0; k < row; ++k) {
      if (rows[k][col] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[k][col].get_mpz_t(), rows[row][col].get_mpz_t());
      if (q == 0) continue;
      row_submul(rows[k], q, rows[row]);
      if (track) {
        row_submul(t[k], q, t[row]);
        row_mod(t[k], transform_modulus);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.form = std::move(rows);
  out.transform = std::move(t);
  return out;
}

}  // namespace integer_linear

using integer_linear::IntMatrix;
using integer_linear::IntRow;

struct RowSpan::Impl {
  virtual ~Impl() = default;
  virtual Vector reduce(std::span<const Elem> v) const = 0;
  virtual std::optional<Vector> solve(std::span<const Elem> v) const = 0;
  virtual Matrix syzygies() const = 0;
  virtual std::vector<std::pair<std::size_t, Exponents>> leading_terms() const { return {}; }
};

namespace {

IntRow lift(const Ring& ring, std::span<const Elem> v) {
  IntRow out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back(ring.as_integer(e));
  return out;
}

class PirSpan final : public RowSpan::Impl {
 public:
  PirSpan(const Ring& ring, const Matrix& b) : ring_(ring), r_(b.rows()), c_(b.cols()) {
    IntMatrix rows;
    rows.reserve(r_ + c_);
    for (std::size_t i = 0; i < r_; ++i) rows.push_back(lift(ring, b.row_view(i)));
    const Integer n = ring.is_finite() ? ring.modulus() : Integer(0);
    if (n != 0)
      for (std::size_t j = 0; j < c_; ++j) {
        IntRow e(c_, Integer(0));
        e[j] = n;
        rows.push_back(std::move(e));
      }
    h_ = integer_linear::hermite(std::move(rows), c_, true, r_, n);
  }

  // Subtracts pivot-row multiples in order; q collects the multipliers.
  IntRow reduce_lifted(IntRow v, std::vector<Integer>* q) const {
    for (std::size_t k = 0; k < h_.pivot_columns.size(); ++k) {
      const std::size_t col = h_.pivot_columns[k];
      Integer d;
      mpz_fdiv_q(d.get_mpz_t(), v[col].get_mpz_t(), h_.form[k][col].get_mpz_t());
      if (q) (*q)[k] = d;
      if (d != 0) integer_linear::row_submul(v, d, h_.form[k]);
    }
    return v;
  }

  Vector reduce(std::span<const Elem> v) const override {
    IntRow w = reduce_lifted(lift(ring_, v), nullptr);
    Vector out;
    out.reserve(w.size());
    for (auto& e : w) out.push_back(ring_.from_integer(e));
    return out;
  }

  std::optional<Vector> solve(std::span<const Elem> v) const override {
    std::vector<Integer> q(h_.pivot_columns.size());
    IntRow w = reduce_lifted(lift(ring_, v), &q);
    for (auto& e : w)
      if (ring_.from_integer(e) != ring_.zero()) return std::nullopt;
    IntRow x(r_, Integer(0));
    for (std::size_t k = 0; k < q.size(); ++k)
      if (q[k] != 0)
        for (std::size_t j = 0; j < r_; ++j)
          mpz_addmul(x[j].get_mpz_t(), q[k].get_mpz_t(), h_.transform[k][j].get_mpz_t());
    Vector out;
    out.reserve(r_);
    for (auto& e : x) out.push_back(ring_.from_integer(e));
    return out;
  }

  Matrix syzygies() const override {
    Matrix k = Matrix::from_rows(r_, {});
    for (std::size_t i = h_.pivot_columns.size(); i < h_.form.size(); ++i) {
      Vector row;
      row.reserve(r_);
      for (const auto& e : h_.transform[i]) row.push_back(ring_.from_integer(e));
      k.append_row(row);
    }
    return tidy_rows(ring_, k);
  }

 private:
  Ring ring_;
  std::size_t r_, c_;
  integer_linear::Hermite h_;
};

class PolySpan final : public RowSpan::Impl {
 public:
  PolySpan(const Ring& ring, const Matrix& b)
      : ring_(ring), r_(b.rows()), c_(b.cols()), basis_(ring, c_ + r_, augmented(ring, b)) {}

  static std::vector<groebner::ModuleVector> augmented(const Ring& ring, const Matrix& b) {
    std::vector<groebner::ModuleVector> gens;
    const std::size_t r = b.rows(), c = b.cols();
    for (std::size_t i = 0; i < r; ++i) {
      groebner::ModuleVector v;
      v.comp.assign(c + r, Polynomial{});
      for (std::size_t j = 0; j < c; ++j) v.comp[j] = ring.as_polynomial(b(i, j));
      v.comp[c + i] = ring.as_polynomial(ring.one());
      gens.push_back(std::move(v));
    }
    return gens;
  }

  groebner::ModuleVector reduced(std::span<const Elem> v) const {
    groebner::ModuleVector f;
    f.comp.assign(c_ + r_, Polynomial{});
    for (std::size_t j = 0; j < c_; ++j) f.comp[j] = ring_.as_polynomial(v[j]);
    return basis_.reduce(std::move(f), c_);
  }

  Vector reduce(std::span<const Elem> v) const override {
    auto f = reduced(v);
    Vector out;
    out.reserve(c_);
    for (std::size_t j = 0; j < c_; ++j) out.push_back(std::move(f.comp[j]));
    return out;
  }

  std::optional<Vector> solve(std::span<const Elem> v) const override {
    auto f = reduced(v);
    for (std::size_t j = 0; j < c_; ++j)
      if (!f.comp[j].is_zero()) return std::nullopt;
    Vector x;
    x.reserve(r_);
    for (std::size_t i = 0; i < r_; ++i) x.push_back(ring_.neg(f.comp[c_ + i]));
    return x;
  }

  Matrix syzygies() const override {
    Matrix k = Matrix::from_rows(r_, {});
    for (const auto& g : basis_.elements()) {
      if (g.lead_position() < c_) continue;
      Vector row;
      row.reserve(r_);
      for (std::size_t i = 0; i < r_; ++i) row.push_back(g.comp[c_ + i]);
      k.append_row(row);
    }
    return k;
  }

  std::vector<std::pair<std::size_t, Exponents>> leading_terms() const override {
    std::vector<std::pair<std::size_t, Exponents>> out;
    for (const auto& g : basis_.elements()) {
      const std::size_t p = g.lead_position();
      if (p < c_) out.emplace_back(p, g.comp[p].terms.front().exponents);
    }
    return out;
  }

 private:
  Ring ring_;
  std::size_t r_, c_;
  groebner::ModuleBasis basis_;
};

}  // namespace

RowSpan::RowSpan(const Ring& ring, const Matrix& generators)
    : ring_(ring), width_(generators.cols()), count_(generators.rows()) {
  if (ring.is_pir())
    impl_ = std::make_shared<PirSpan>(ring, generators);
  else
    impl_ = std::make_shared<PolySpan>(ring, generators);
}

Vector RowSpan::reduce(std::span<const Elem> v) const {
  if (v.size() != width_) throw Error(ErrorCode::IllFormed, "vector width mismatch");
  return impl_->reduce(v);
}

bool RowSpan::contains(std::span<const Elem> v) const {
  return mat::vec_is_zero(ring_, reduce(v));
}

std::optional<Vector> RowSpan::solve(std::span<const Elem> v) const {
  if (v.size() != width_) throw Error(ErrorCode::IllFormed, "vector width mismatch");
  return impl_->solve(v);
}

Matrix RowSpan::syzygies() const { return impl_->syzygies(); }

std::vector<std::pair<std::size_t, Exponents>> RowSpan::leading_terms() const {
  return impl_->leading_terms();
}

Matrix syzygies(const Ring& ring, const Matrix& a) { return RowSpan(ring, a).syzygies(); }

Matrix tidy_rows(const Ring& ring, const Matrix& rows) {
  const std::size_t w = rows.cols();
  Matrix out = Matrix::from_rows(w, {});
  if (ring.is_polynomial()) {
    for (std::size_t i = 0; i < rows.rows(); ++i) {
      Vector r = rows.row(i);
      if (mat::vec_is_zero(ring, r)) continue;
      bool dup = false;
      for (std::size_t k = 0; k < out.rows() && !dup; ++k) dup = out.row(k) == r;
      if (!dup) out.append_row(r);
    }
    return out;
  }
  IntMatrix lifted;
  for (std::size_t i = 0; i < rows.rows(); ++i) lifted.push_back(lift(ring, rows.row_view(i)));
  const Integer n = ring.is_finite() ? ring.modulus() : Integer(0);
  if (n != 0)
    for (std::size_t j = 0; j < w; ++j) {
      IntRow e(w, Integer(0));
      e[j] = n;
      lifted.push_back(std::move(e));
    }
  auto h = integer_linear::hermite(std::move(lifted), w, false, 0, 0);
  for (std::size_t k = 0; k < h.pivot_columns.size(); ++k) {
    Vector r;
    r.reserve(w);
    for (const auto& e : h.form[k]) r.push_back(ring.from_integer(e));
    if (!mat::vec_is_zero(ring, r)) out.append_row(r);
  }
  return out;
}

}  // namespace redcor
