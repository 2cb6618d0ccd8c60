#include "redcor/homological.hpp"

#include <algorithm>

namespace redcor {

ChainComplex::ChainComplex(Ring ring, int lo, std::vector<Presentation> terms,
                           std::vector<ModuleMap> differentials)
    : ring_(std::move(ring)), lo_(lo), terms_(std::move(terms)),
      differentials_(std::move(differentials)) {
  if (terms_.empty()) throw Error(ErrorCode::IllFormed, "complex needs at least one term");
  if (differentials_.size() + 1 != terms_.size())
    throw Error(ErrorCode::IllFormed, "complex needs one differential per adjacent pair");
  for (std::size_t k = 0; k < differentials_.size(); ++k)
    if (differentials_[k].source().gens() != terms_[k].gens() ||
        differentials_[k].target().gens() != terms_[k + 1].gens())
      throw Error(ErrorCode::IllFormed, "differential does not match its terms");
}

Presentation ChainComplex::term(int p) const {
  if (p < lo_ || p > hi()) return Presentation::zero(ring_);
  return terms_[static_cast<std::size_t>(p - lo_)];
}

ModuleMap ChainComplex::differential(int p) const {
  if (p >= lo_ && p < hi()) return differentials_[static_cast<std::size_t>(p - lo_)];
  return ModuleMap::zero(term(p), term(p + 1));
}

bool ChainComplex::is_complex() const {
  for (int p = lo_; p + 1 < hi(); ++p) {
    ModuleMap dd = compose(differential(p), differential(p + 1));
    if (!maps_equal(dd, ModuleMap::zero(term(p), term(p + 2)))) return false;
  }
  return true;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.lo() != target_.lo() || source_.hi() != target_.hi() ||
      components_.size() != static_cast<std::size_t>(source_.hi() - source_.lo() + 1))
    throw Error(ErrorCode::IllFormed, "chain map degrees do not match");
}

const ModuleMap& ChainMap::component(int p) const {
  if (p < source_.lo() || p > source_.hi())
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(p) + " outside the complex");
  return components_[static_cast<std::size_t>(p - source_.lo())];
}

bool ChainMap::commutes() const {
  for (int p = source_.lo(); p < source_.hi(); ++p) {
    ModuleMap a = compose(source_.differential(p), component(p + 1));
    ModuleMap b = compose(component(p), target_.differential(p));
    if (!maps_equal(a, b)) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> koszul_basis(std::size_t n, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s(p);
  for (std::size_t i = 0; i < p; ++i) s[i] = i;
  if (p > n) return out;
  for (;;) {
    out.push_back(s);
    std::size_t k = p;
    while (k > 0 && s[k - 1] == n - p + k - 1) --k;
    if (k == 0) break;
    ++s[k - 1];
    for (std::size_t m = k; m < p; ++m) s[m] = s[m - 1] + 1;
  }
  return out;
}

namespace {

std::size_t index_of(const std::vector<std::vector<std::size_t>>& basis,
                     const std::vector<std::size_t>& s) {
  return static_cast<std::size_t>(std::lower_bound(basis.begin(), basis.end(), s) - basis.begin());
}

void check_sequence(const Ring& ring, const std::vector<Elem>& r) {
  if (r.empty()) throw Error(ErrorCode::EmptySequence, "Koszul complex needs a nonempty sequence");
  for (const auto& e : r) {
    Matrix probe = Matrix::from_rows(1, {{e}});
    Presentation(ring, 1, probe);  // validates the entry's ring
  }
}

// Diagonal map multiplying e_S by Π_{t in S} r_t^k.
Matrix transition_matrix(const Ring& ring, const std::vector<Elem>& r, std::size_t p, unsigned k) {
  auto basis = koszul_basis(r.size(), p);
  Matrix m = Matrix::zero(ring, basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Elem c = ring.one();
    for (auto t : basis[a]) c = ring.mul(c, ring.pow(r[t], k));
    m(a, a) = c;
  }
  return m;
}

}  // namespace

ChainComplex koszul_complex(const Ring& ring, const std::vector<Elem>& r) {
  check_sequence(ring, r);
  const std::size_t n = r.size();
  std::vector<Presentation> terms;
  std::vector<ModuleMap> diffs;
  for (std::size_t p = n + 1; p-- > 0;) terms.push_back(Presentation::free(ring, koszul_basis(n, p).size()));
  for (std::size_t p = n; p >= 1; --p) {
    auto src = koszul_basis(n, p), tgt = koszul_basis(n, p - 1);
    Matrix d = Matrix::zero(ring, src.size(), tgt.size());
    for (std::size_t a = 0; a < src.size(); ++a) {
      const auto& s = src[a];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<std::size_t> rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pos));
        const std::size_t greater = s.size() - 1 - pos;
        Elem c = greater % 2 ? ring.neg(r[s[pos]]) : r[s[pos]];
        d(a, index_of(tgt, rest)) = c;
      }
    }
    const std::size_t k = n - p;
    diffs.emplace_back(terms[k], terms[k + 1], d);
  }
  return ChainComplex(ring, -static_cast<int>(n), std::move(terms), std::move(diffs));
}

Subquotient cohomology(const ChainComplex& c, int p) {
  if (p < c.lo() || p > c.hi())
    throw Error(ErrorCode::OutOfRange, "degree " + std::to_string(p) + " outside [" +
                                           std::to_string(c.lo()) + ", " + std::to_string(c.hi()) + "]");
  const Presentation term = c.term(p);
  Matrix cycles = p < c.hi() ? kernel_generators(c.differential(p))
                             : Matrix::identity(c.ring(), term.gens());
  Matrix boundaries = p > c.lo() ? c.differential(p - 1).matrix()
                                 : Matrix::from_rows(term.gens(), {});
  return subquotient(term, cycles, boundaries);
}

ModuleMap induced_map(const ChainMap& f, int p) {
  const Ring& ring = f.source().ring();
  Subquotient hs = cohomology(f.source(), p), ht = cohomology(f.target(), p);
  const Presentation tgt_term = f.target().term(p);
  Matrix boundaries = p > f.target().lo() ? f.target().differential(p - 1).matrix()
                                          : Matrix::from_rows(tgt_term.gens(), {});
  RowSpan span(ring, mat::vstack(mat::vstack(ht.representatives, boundaries), tgt_term.relations()));
  const std::size_t k = ht.module.gens();
  Matrix coords = Matrix::from_rows(k, {});
  for (std::size_t a = 0; a < hs.module.gens(); ++a) {
    Vector image = f.component(p).apply(hs.representatives.row_view(a));
    auto x = span.solve(image);
    if (!x) throw Error(ErrorCode::NotWellDefined, "chain map does not preserve cycles");
    coords.append_row(Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(k)));
  }
  return ModuleMap(hs.module, ht.module, coords);
}

ChainMap koszul_transition(const Ring& ring, const std::vector<Elem>& r, unsigned i, unsigned j) {
  if (i < 1 || j < i) throw Error(ErrorCode::BadExponents, "transition needs j >= i >= 1");
  std::vector<Elem> ri, rj;
  for (const auto& e : r) {
    ri.push_back(ring.pow(e, i));
    rj.push_back(ring.pow(e, j));
  }
  ChainComplex src = koszul_complex(ring, rj), tgt = koszul_complex(ring, ri);
  std::vector<ModuleMap> comps;
  const std::size_t n = r.size();
  for (std::size_t p = n + 1; p-- > 0;) {
    const int deg = -static_cast<int>(p);
    comps.emplace_back(src.term(deg), tgt.term(deg), transition_matrix(ring, r, p, j - i));
  }
  ChainMap map(std::move(src), std::move(tgt), std::move(comps));
  if (!map.commutes()) throw Error(ErrorCode::IllFormed, "Koszul transition fails to commute");
  return map;
}

namespace {

bool is_zero_map(const ModuleMap& f) {
  for (std::size_t a = 0; a < f.matrix().rows(); ++a)
    if (!f.target().is_zero_element(f.matrix().row_view(a))) return false;
  return true;
}

}  // namespace

ProZeroVerdict weak_proregularity_check(const Ring& ring, const std::vector<Elem>& r,
                                        unsigned i_bound, unsigned j_bound) {
  check_sequence(ring, r);
  ProZeroVerdict v;
  v.i_bound = i_bound;
  v.j_bound = j_bound;
  const int n = static_cast<int>(r.size());
  for (unsigned i = 1; i <= i_bound; ++i) {
    std::vector<ChainMap> transitions;
    for (unsigned j = i; j <= j_bound; ++j) transitions.push_back(koszul_transition(ring, r, i, j));
    for (int p = -n; p <= -1; ++p) {
      std::optional<unsigned> witness;
      for (unsigned j = i; j <= j_bound && !witness; ++j)
        if (is_zero_map(induced_map(transitions[j - i], p))) witness = j;
      if (!witness) {
        v.failed_i = i;
        v.failed_p = p;
        return v;
      }
      v.witnesses[{i, p}] = *witness;
    }
  }
  v.pro_zero = true;
  return v;
}

ChainComplex free_resolution(const Presentation& m, unsigned length) {
  if (length < 1) throw Error(ErrorCode::BadExponents, "resolution length must be >= 1");
  const Ring& ring = m.ring();
  // maps[k] : F_{k+1} -> F_k
  std::vector<Matrix> maps;
  Matrix rel = Matrix::from_rows(m.gens(), {});
  for (std::size_t i = 0; i < m.relations().rows(); ++i)
    if (!mat::vec_is_zero(ring, m.relations().row_view(i))) rel.append_row(m.relations().row(i));
  maps.push_back(rel);
  while (maps.size() < length) maps.push_back(syzygies(ring, maps.back()));

  std::vector<Presentation> terms;
  std::vector<ModuleMap> diffs;
  terms.reserve(length + 1);
  for (std::size_t k = length; k-- > 0;) {
    if (terms.empty()) terms.push_back(Presentation::free(ring, maps[k].rows()));
    terms.push_back(Presentation::free(ring, maps[k].cols()));
    diffs.emplace_back(terms[terms.size() - 2], terms.back(), maps[k]);
  }
  return ChainComplex(ring, -static_cast<int>(length), std::move(terms), std::move(diffs));
}

ChainComplex tensor_complex(const ChainComplex& c, const Presentation& n) {
  const Ring& ring = c.ring();
  std::vector<Presentation> terms;
  std::vector<ModuleMap> diffs;
  const Matrix id = Matrix::identity(ring, n.gens());
  for (int p = c.lo(); p <= c.hi(); ++p) terms.push_back(tensor_product(c.term(p), n));
  for (int p = c.lo(); p < c.hi(); ++p) {
    const std::size_t k = static_cast<std::size_t>(p - c.lo());
    diffs.emplace_back(terms[k], terms[k + 1], mat::kron(ring, c.differential(p).matrix(), id));
  }
  return ChainComplex(ring, c.lo(), std::move(terms), std::move(diffs));
}

Presentation tor(const Presentation& m, const Presentation& n, unsigned i) {
  require_same_ring(m.ring(), n.ring());
  ChainComplex f = free_resolution(m, i + 1);
  return cohomology(tensor_complex(f, n), -static_cast<int>(i)).module;
}

StrongIdempotenceVerdict strongly_idempotent_check(const Ideal& ideal, unsigned i_bound) {
  StrongIdempotenceVerdict v;
  v.bound = i_bound;
  Presentation quot = Presentation::cyclic(ideal);
  ChainComplex f = tensor_complex(free_resolution(quot, i_bound + 1), quot);
  for (unsigned i = 1; i <= i_bound; ++i)
    if (!cohomology(f, -static_cast<int>(i)).module.is_zero()) {
      v.failed_at = i;
      return v;
    }
  v.holds = true;
  return v;
}

}  // namespace redcor
