#include "redcor/module.hpp"

#include <mutex>

namespace redcor {

namespace {

Elem unit_inverse(const Ring& ring, const Elem& a) {
  switch (ring.kind()) {
    case RingKind::Integers: return a;  // +-1
    case RingKind::ModularIntegers: {
      Integer inv;
      if (mpz_invert(inv.get_mpz_t(), ring.as_integer(a).get_mpz_t(), ring.modulus().get_mpz_t()) == 0)
        throw Error(ErrorCode::IllFormed, "not a unit");
      return ring.from_integer(inv);
    }
    case RingKind::Polynomial: {
      const auto& p = ring.as_polynomial(a);
      return ring.monomial(Exponents(ring.num_variables(), 0),
                           ring.coeff_inv(p.terms.front().coefficient));
    }
  }
  throw Error(ErrorCode::IllFormed, "not a unit");
}

void check_entries(const Ring& ring, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem& e = m(i, j);
      bool ok = ring.is_polynomial() ? std::holds_alternative<Polynomial>(e)
                                     : std::holds_alternative<Integer>(e);
      if (ok && ring.is_finite()) {
        const Integer& v = std::get<Integer>(e);
        ok = v >= 0 && v < ring.modulus();
      }
      if (!ok) throw Error(ErrorCode::MixedRings, "matrix entry does not belong to the ring");
    }
}

Matrix with_width(const Matrix& m, std::size_t width) {
  if (m.rows() == 0) return Matrix::from_rows(width, {});
  return m;
}

// Eliminates generators that some relation expresses through the others
// with a unit coefficient. Representatives of surviving generators are kept.
void prune(const Ring& ring, std::vector<Vector>& rels, std::vector<Vector>& reps,
           std::size_t& gens) {
  for (;;) {
    std::size_t pk = rels.size(), pj = gens;
    for (std::size_t k = 0; k < rels.size() && pk == rels.size(); ++k)
      for (std::size_t j = 0; j < gens; ++j)
        if (!ring.is_zero(rels[k][j]) && ring.is_unit(rels[k][j])) {
          pk = k;
          pj = j;
          break;
        }
    if (pk == rels.size()) break;
    const Vector pivot = rels[pk];
    const Elem inv = unit_inverse(ring, pivot[pj]);
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (k == pk || ring.is_zero(rels[k][pj])) continue;
      Elem c = ring.mul(rels[k][pj], inv);
      rels[k] = mat::vec_sub(ring, rels[k], mat::vec_scale(ring, c, pivot));
    }
    rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(pk));
    for (auto& r : rels) r.erase(r.begin() + static_cast<std::ptrdiff_t>(pj));
    reps.erase(reps.begin() + static_cast<std::ptrdiff_t>(pj));
    --gens;
  }
}

}  // namespace

// Presentation ---------------------------------------------------------------------

struct Presentation::Cache {
  std::once_flag once;
  std::unique_ptr<RowSpan> span;
};

Presentation::Presentation(const Ring& ring, std::size_t gens, Matrix relations)
    : ring_(ring), gens_(gens), relations_(with_width(relations, gens)),
      cache_(std::make_shared<Cache>()) {
  if (relations_.cols() != gens_)
    throw Error(ErrorCode::IllFormed, "relation matrix width differs from generator count");
  check_entries(ring_, relations_);
}

Presentation Presentation::free(const Ring& ring, std::size_t gens) {
  return Presentation(ring, gens, Matrix::from_rows(gens, {}));
}

Presentation Presentation::cyclic(const Ideal& ideal) {
  Matrix rel = Matrix::from_rows(1, {});
  for (const auto& b : ideal.basis()) rel.append_row({b});
  return Presentation(ideal.ring(), 1, rel);
}

Presentation Presentation::diagonal(const Ring& ring, const std::vector<Elem>& entries) {
  const std::size_t g = entries.size();
  Matrix rel = Matrix::from_rows(g, {});
  for (std::size_t i = 0; i < g; ++i) {
    if (ring.is_zero(entries[i])) continue;
    Vector row(g, ring.zero());
    row[i] = entries[i];
    rel.append_row(row);
  }
  return Presentation(ring, g, rel);
}

const RowSpan& Presentation::relation_span() const {
  std::call_once(cache_->once,
                 [&] { cache_->span = std::make_unique<RowSpan>(ring_, relations_); });
  return *cache_->span;
}

bool Presentation::equal_elements(std::span<const Elem> a, std::span<const Elem> b) const {
  return is_zero_element(mat::vec_sub(ring_, a, b));
}

bool Presentation::is_zero() const {
  for (std::size_t i = 0; i < gens_; ++i)
    if (!is_zero_element(generator(i))) return false;
  return true;
}

Vector Presentation::generator(std::size_t i) const {
  Vector e(gens_, ring_.zero());
  e.at(i) = ring_.one();
  return e;
}

// ModuleMap -------------------------------------------------------------------------

ModuleMap::ModuleMap(Presentation source, Presentation target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)),
      matrix_(with_width(matrix, target_.gens())) {
  require_same_ring(source_.ring(), target_.ring());
  if (matrix_.rows() != source_.gens() || matrix_.cols() != target_.gens())
    throw Error(ErrorCode::IllFormed, "map matrix has dimensions " +
                                          std::to_string(matrix_.rows()) + "x" +
                                          std::to_string(matrix_.cols()) + ", expected " +
                                          std::to_string(source_.gens()) + "x" +
                                          std::to_string(target_.gens()));
  check_entries(source_.ring(), matrix_);
  const Ring& ring = source_.ring();
  const Matrix& a = source_.relations();
  certificate_ = Matrix::from_rows(target_.relations().rows(), {});
  for (std::size_t k = 0; k < a.rows(); ++k) {
    Vector image = mat::vec_mul(ring, a.row_view(k), matrix_);
    auto x = target_.relation_span().solve(image);
    if (!x) throw Error(ErrorCode::NotWellDefined, "relation " + std::to_string(k) +
                                                       " does not map to zero in the target");
    certificate_.append_row(*x);
  }
}

ModuleMap ModuleMap::identity(const Presentation& m) {
  return ModuleMap(m, m, Matrix::identity(m.ring(), m.gens()));
}

ModuleMap ModuleMap::zero(const Presentation& source, const Presentation& target) {
  return ModuleMap(source, target, Matrix::zero(source.ring(), source.gens(), target.gens()));
}

Vector ModuleMap::apply(std::span<const Elem> v) const {
  return mat::vec_mul(source_.ring(), v, matrix_);
}

std::optional<ModuleMap> try_module_map(const Presentation& source, const Presentation& target,
                                        const Matrix& matrix) {
  try {
    return ModuleMap(source, target, matrix);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotWellDefined) return std::nullopt;
    throw;
  }
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  if (first.target().gens() != second.source().gens())
    throw Error(ErrorCode::IllFormed, "maps are not composable");
  return ModuleMap(first.source(), second.target(),
                   mat::mul(first.source().ring(), first.matrix(), second.matrix()));
}

bool maps_equal(const ModuleMap& a, const ModuleMap& b) {
  if (a.source().gens() != b.source().gens() || a.target().gens() != b.target().gens())
    return false;
  for (std::size_t i = 0; i < a.matrix().rows(); ++i)
    if (!a.target().equal_elements(a.matrix().row_view(i), b.matrix().row_view(i))) return false;
  return true;
}

Matrix kernel_generators(const ModuleMap& map) {
  const Ring& ring = map.source().ring();
  Matrix big = mat::vstack(map.matrix(), map.target().relations());
  Matrix syz = syzygies(ring, big);
  return tidy_rows(ring, mat::columns(syz, 0, map.source().gens()));
}

MapAnalysis map_analyze(const ModuleMap& map) {
  const Ring& ring = map.source().ring();
  MapAnalysis out;
  const Matrix& a = map.source().relations();
  const Matrix lhs = mat::mul(ring, a, map.matrix());
  const Matrix rhs = mat::mul(ring, map.certificate(), map.target().relations());
  out.well_defined = lhs.rows() == rhs.rows() && (lhs.rows() == 0 || lhs == rhs);
  if (!out.well_defined) return out;

  RowSpan image(ring, mat::vstack(map.matrix(), map.target().relations()));
  out.surjective = true;
  for (std::size_t j = 0; j < map.target().gens() && out.surjective; ++j)
    out.surjective = image.contains(map.target().generator(j));

  Matrix k = kernel_generators(map);
  out.injective = true;
  for (std::size_t i = 0; i < k.rows() && out.injective; ++i)
    out.injective = map.source().is_zero_element(k.row_view(i));
  out.iso = out.injective && out.surjective;
  return out;
}

// Submodules ------------------------------------------------------------------------

Subquotient subquotient(const Presentation& ambient, const Matrix& numerator,
                        const Matrix& denominator) {
  const Ring& ring = ambient.ring();
  const std::size_t g = ambient.gens();
  Matrix num = with_width(numerator, g), den = with_width(denominator, g);
  if (num.cols() != g || den.cols() != g)
    throw Error(ErrorCode::IllFormed, "submodule generators have the wrong width");
  const std::size_t k = num.rows();
  Matrix big = mat::vstack(mat::vstack(num, den), ambient.relations());
  Matrix rel = tidy_rows(ring, mat::columns(syzygies(ring, big), 0, k));

  std::vector<Vector> rels = rel.row_list();
  std::vector<Vector> reps = num.row_list();
  std::size_t gens = k;
  prune(ring, rels, reps, gens);
  Matrix rel_m = tidy_rows(ring, Matrix::from_rows(gens, rels));
  Presentation module(ring, gens, rel_m);
  if (module.is_zero()) return {Presentation::zero(ring), Matrix::from_rows(g, {})};
  return {module, Matrix::from_rows(g, reps)};
}

Submodule submodule(const Presentation& ambient, const Matrix& generators) {
  auto sq = subquotient(ambient, generators, Matrix::from_rows(ambient.gens(), {}));
  ModuleMap include(sq.module, ambient, sq.representatives);
  return {sq.module, include};
}

Presentation quotient(const Presentation& ambient, const Matrix& generators) {
  return Presentation(ambient.ring(), ambient.gens(),
                      mat::vstack(ambient.relations(), with_width(generators, ambient.gens())));
}

bool submodule_contains(const Presentation& ambient, const Matrix& outer, const Matrix& inner) {
  const Ring& ring = ambient.ring();
  RowSpan span(ring, mat::vstack(with_width(outer, ambient.gens()), ambient.relations()));
  for (std::size_t i = 0; i < inner.rows(); ++i)
    if (!span.contains(inner.row_view(i))) return false;
  return true;
}

bool same_submodule(const Presentation& ambient, const Matrix& a, const Matrix& b) {
  return submodule_contains(ambient, a, b) && submodule_contains(ambient, b, a);
}

std::optional<ModuleMap> factor_through_injection(const ModuleMap& f, const ModuleMap& include) {
  const Ring& ring = f.source().ring();
  const Presentation& m = include.target();
  RowSpan span(ring, mat::vstack(include.matrix(), m.relations()));
  const std::size_t s = include.source().gens();
  Matrix coords = Matrix::from_rows(s, {});
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) {
    auto x = span.solve(f.matrix().row_view(i));
    if (!x) return std::nullopt;
    coords.append_row(Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(s)));
  }
  return try_module_map(f.source(), include.source(), coords);
}

std::optional<ModuleMap> descend_to_quotient(const ModuleMap& f, const Presentation& q) {
  return try_module_map(q, f.target(), f.matrix());
}

// Hom ---------------------------------------------------------------------------------

HomModule::HomModule(Presentation module, Presentation source, Presentation target,
                     Matrix generators)
    : module_(std::move(module)), source_(std::move(source)), target_(std::move(target)),
      generators_(with_width(generators, source_.gens() * target_.gens())) {
  const Ring& ring = source_.ring();
  Matrix bb = mat::kron(ring, Matrix::identity(ring, source_.gens()), target_.relations());
  solver_ = std::make_shared<RowSpan>(
      ring, mat::vstack(generators_, with_width(bb, source_.gens() * target_.gens())));
}

ModuleMap HomModule::realize(std::size_t j) const {
  return ModuleMap(source_, target_,
                   mat::reshape(generators_.row_view(j), source_.gens(), target_.gens()));
}

Vector HomModule::coordinates(const Matrix& map_matrix) const {
  auto x = solver_->solve(mat::flatten(map_matrix));
  if (!x) throw Error(ErrorCode::NotWellDefined, "matrix is not a homomorphism");
  return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(generators_.rows()));
}

ModuleMap HomModule::map_of(std::span<const Elem> coordinates) const {
  Vector flat = mat::vec_mul(source_.ring(), coordinates, generators_);
  return ModuleMap(source_, target_, mat::reshape(flat, source_.gens(), target_.gens()));
}

HomModule hom_module(const Presentation& m, const Presentation& n) {
  require_same_ring(m.ring(), n.ring());
  const Ring& ring = m.ring();
  const std::size_t g = m.gens(), h = n.gens();
  const Matrix& a = m.relations();
  const Matrix& b = n.relations();
  const std::size_t r = a.rows(), s = b.rows();

  // Unknowns: the g x h matrix P and certificates y (r x s) with A P = y B.
  Matrix system = Matrix::zero(ring, g * h + r * s, r * h);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t l = 0; l < h; ++l)
      for (std::size_t k = 0; k < r; ++k) system(i * h + l, k * h + l) = a(k, i);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t mm = 0; mm < s; ++mm)
      for (std::size_t l = 0; l < h; ++l) system(g * h + k * s + mm, k * h + l) = ring.neg(b(mm, l));

  Matrix z = tidy_rows(ring, mat::columns(syzygies(ring, system), 0, g * h));
  Presentation ambient(ring, g * h, mat::kron(ring, Matrix::identity(ring, g), b));
  auto sq = subquotient(ambient, z, Matrix::from_rows(g * h, {}));
  return HomModule(sq.module, m, n, sq.representatives);
}

// Tensor and sums -------------------------------------------------------------------------

Presentation tensor_product(const Presentation& m, const Presentation& n) {
  require_same_ring(m.ring(), n.ring());
  const Ring& ring = m.ring();
  Matrix left = mat::kron(ring, m.relations(), Matrix::identity(ring, n.gens()));
  Matrix right = mat::kron(ring, Matrix::identity(ring, m.gens()), n.relations());
  const std::size_t gh = m.gens() * n.gens();
  return Presentation(ring, gh, mat::vstack(with_width(left, gh), with_width(right, gh)));
}

ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g) {
  const Ring& ring = f.source().ring();
  return ModuleMap(tensor_product(f.source(), g.source()), tensor_product(f.target(), g.target()),
                   mat::kron(ring, f.matrix(), g.matrix()));
}

Presentation direct_sum(const Presentation& m, const Presentation& n) {
  require_same_ring(m.ring(), n.ring());
  const Ring& ring = m.ring();
  return Presentation(ring, m.gens() + n.gens(),
                      mat::block_diagonal(ring, m.relations(), n.relations()));
}

// Colon and scalar submodules -----------------------------------------------------------

ModuleMap multiplication_map(const Presentation& m, const Elem& a) {
  return ModuleMap(m, m, mat::scale(m.ring(), a, Matrix::identity(m.ring(), m.gens())));
}

Submodule colon_annihilator(const Presentation& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  const Ring& ring = m.ring();
  const std::size_t g = m.gens();
  const auto& basis = ideal.basis();
  if (basis.empty()) return submodule(m, Matrix::identity(ring, g));
  const std::size_t s = basis.size();
  Matrix p = Matrix::zero(ring, g, g * s);
  for (std::size_t t = 0; t < s; ++t)
    for (std::size_t i = 0; i < g; ++i) p(i, t * g + i) = basis[t];
  Presentation power(ring, g * s, mat::kron(ring, Matrix::identity(ring, s), m.relations()));
  ModuleMap action(m, power, p);
  return submodule(m, kernel_generators(action));
}

Matrix scalar_generators(const Presentation& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  const Ring& ring = m.ring();
  Matrix s = Matrix::from_rows(m.gens(), {});
  for (const auto& a : ideal.basis())
    for (std::size_t i = 0; i < m.gens(); ++i) {
      Vector row(m.gens(), ring.zero());
      row[i] = a;
      s.append_row(row);
    }
  return s;
}

ScalarSubmodule scalar_submodule(const Presentation& m, const Ideal& ideal) {
  Matrix s = scalar_generators(m, ideal);
  Submodule sub = submodule(m, s);
  Presentation q = quotient(m, s);
  ModuleMap project(m, q, Matrix::identity(m.ring(), m.gens()));
  return {sub.module, sub.include, q, project};
}

}  // namespace redcor
