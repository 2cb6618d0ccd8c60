#include "redcor/duality.hpp"

#include <map>

#include "redcor/smith.hpp"

namespace redcor {

namespace {

bool iso_or_false(const std::optional<MapAnalysis>& a) { return !a || a->iso; }

// Hom(Λ_I M, N) -> Hom(M, Γ_I N) on one map matrix (g_M x g_N).
Matrix curry(const HomModule& gamma_n, const Matrix& phi) {
  Matrix out = Matrix::from_rows(gamma_n.module().gens(), {});
  for (std::size_t i = 0; i < phi.rows(); ++i)
    out.append_row(gamma_n.coordinates(Matrix::from_rows(phi.cols(), {phi.row(i)})));
  return out;
}

Elem constant(const Ring& ring, const Rational& c) {
  if (c == 0) return ring.zero();
  return ring.monomial(Exponents(ring.num_variables(), 0), c);
}

Matrix scalar_combination_rows(const Ring& ring, const std::vector<std::vector<Rational>>& rows,
                               std::size_t cols) {
  Matrix out = Matrix::from_rows(cols, {});
  for (const auto& r : rows) {
    Vector v;
    for (const auto& c : r) v.push_back(constant(ring, c));
    out.append_row(v);
  }
  return out;
}

Vector basis_vector(const Ring& ring, std::size_t gens, const std::pair<std::size_t, Exponents>& b) {
  Vector v(gens, ring.zero());
  v[b.first] = ring.monomial(b.second, Rational(1));
  return v;
}

}  // namespace

// GM duality ------------------------------------------------------------------------

AdjunctionReport gm_adjunction_check(const Presentation& m, const Presentation& n,
                                     const Ideal& ideal) {
  require_same_ring(m.ring(), n.ring());
  AdjunctionReport r;
  r.coreduced_m = is_I_coreduced(m, ideal);
  r.reduced_n = is_I_reduced(n, ideal);
  if (!r.coreduced_m || !r.reduced_n)
    throw Error(ErrorCode::PredicateFailed, "GM adjunction needs I-coreduced M and I-reduced N");
  const Presentation quot = Presentation::cyclic(ideal);
  HomModule gamma_n = hom_module(quot, n);
  HomModule left = hom_module(tensor_product(quot, m), n);
  HomModule right = hom_module(m, gamma_n.module());
  r.left = invariant_strings(left.module());
  r.right = invariant_strings(right.module());
  r.left_label = describe(left.module());
  r.right_label = describe(right.module());
  try {
    Matrix rows = Matrix::from_rows(right.module().gens(), {});
    for (std::size_t j = 0; j < left.module().gens(); ++j)
      rows.append_row(right.coordinates(curry(gamma_n, left.realize(j).matrix())));
    r.currying = map_analyze(ModuleMap(left.module(), right.module(), rows));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotWellDefined) throw;
    r.currying = MapAnalysis{};
  }
  r.invariants_agree = !m.ring().is_pir() || isomorphic(left.module(), right.module());
  r.conclusion = r.currying.iso;
  return r;
}

bool gm_naturality_check(const ModuleMap& u, const ModuleMap& v, const Ideal& ideal) {
  const Presentation& m = u.target();
  const Presentation& mp = u.source();
  const Presentation& n = v.source();
  const Presentation& np = v.target();
  const Ring& ring = m.ring();
  const Presentation quot = Presentation::cyclic(ideal);
  HomModule gamma_n = hom_module(quot, n), gamma_np = hom_module(quot, np);
  HomModule left = hom_module(tensor_product(quot, m), n);

  Matrix gamma_v = Matrix::from_rows(gamma_np.module().gens(), {});
  for (std::size_t k = 0; k < gamma_n.module().gens(); ++k)
    gamma_v.append_row(
        gamma_np.coordinates(mat::mul(ring, gamma_n.realize(k).matrix(), v.matrix())));

  for (std::size_t j = 0; j < left.module().gens(); ++j) {
    const Matrix phi = left.realize(j).matrix();
    Matrix lhs = curry(gamma_np, mat::mul(ring, mat::mul(ring, u.matrix(), phi), v.matrix()));
    Matrix rhs = mat::mul(ring, mat::mul(ring, u.matrix(), curry(gamma_n, phi)), gamma_v);
    if (!maps_equal(ModuleMap(mp, gamma_np.module(), lhs), ModuleMap(mp, gamma_np.module(), rhs)))
      return false;
  }
  return true;
}

// MGM -------------------------------------------------------------------------------

MgmReport mgm_check(const Presentation& m, const Ideal& ideal) {
  MgmReport r;
  r.reduced = is_I_reduced(m, ideal);
  r.coreduced = is_I_coreduced(m, ideal);
  r.torsion = is_torsion(m, ideal);
  r.complete = is_complete(m, ideal).value;
  r.in_d = r.torsion && r.reduced;
  r.in_e = r.complete == Tristate::True && r.coreduced;

  if (r.reduced) {
    GammaResult g = gamma(m, ideal);
    r.gamma_complete = is_complete(g.module, ideal).value == Tristate::True;
    r.gamma_coreduced = is_I_coreduced(g.module, ideal);
  } else {
    r.skipped.push_back("reduced clause");
  }
  if (r.coreduced) {
    LambdaResult l = lambda(m, ideal);
    if (l.stabilized) {
      r.lambda_torsion = is_torsion(*l.module, ideal);
      r.lambda_reduced = is_I_reduced(*l.module, ideal);
    } else {
      r.lambda_torsion = false;
      r.lambda_reduced = false;
    }
  } else {
    r.skipped.push_back("coreduced clause");
  }
  if (r.in_d) {
    GammaResult g = gamma(m, ideal);
    LambdaResult lg = lambda(g.module, ideal);
    auto map = lg.stabilized ? descend_to_quotient(g.include, *lg.module) : std::nullopt;
    r.lambda_gamma = map ? map_analyze(*map) : MapAnalysis{};
  } else {
    r.skipped.push_back("round trip on torsion and reduced");
  }
  if (r.in_e) {
    LambdaResult l = lambda(m, ideal);
    GammaResult gl = gamma(*l.module, ideal);
    auto map = try_module_map(gl.module, m, gl.include.matrix());
    r.gamma_lambda = map ? map_analyze(*map) : MapAnalysis{};
  } else {
    r.skipped.push_back("round trip on complete and coreduced");
  }
  r.all_pass = r.gamma_complete.value_or(true) && r.gamma_coreduced.value_or(true) &&
               r.lambda_torsion.value_or(true) && r.lambda_reduced.value_or(true) &&
               iso_or_false(r.lambda_gamma) && iso_or_false(r.gamma_lambda);
  return r;
}

// Matlis duality -------------------------------------------------------------------------

namespace {

MatlisDual character_dual(const Presentation& m) {
  const Ring& ring = m.ring();
  SmithForm s = smith_invariants(m);
  MatlisDual d;
  d.kind = MatlisDual::Kind::Character;
  d.source = m;
  const std::size_t g = m.gens();
  for (std::size_t t = 0; t < g; ++t) {
    Integer order = t < s.D.rows() ? ring.as_integer(s.D(t, t)) : Integer(0);
    if (order == 0) {
      if (!ring.is_finite())
        throw Error(ErrorCode::UnsupportedQuery, "Matlis dual needs a module of finite length");
      order = ring.modulus();
    }
    if (order == 1) continue;
    d.components.push_back(t);
    d.orders.push_back(order);
  }
  d.v = s.V;
  RowSpan span(ring, s.V);
  d.v_inverse = Matrix::from_rows(g, {});
  for (std::size_t i = 0; i < g; ++i) d.v_inverse.append_row(*span.solve(m.generator(i)));
  std::vector<Elem> diag;
  for (const auto& o : d.orders) diag.push_back(ring.from_integer(o));
  d.module = Presentation::diagonal(ring, diag);
  return d;
}

MatlisDual linear_dual(const Presentation& m) {
  const Ring& ring = m.ring();
  auto basis = standard_basis(m);
  if (!basis)
    throw Error(ErrorCode::UnsupportedQuery, "Matlis dual needs a finite-dimensional module");
  MatlisDual d;
  d.kind = MatlisDual::Kind::Linear;
  d.source = m;
  d.basis = *basis;
  const std::size_t dim = d.basis.size();
  // x_l * b_c = Σ_a X_l[c][a] b_a, so x_l φ_a = Σ_c X_l[c][a] φ_c.
  Matrix rel = Matrix::from_rows(dim, {});
  for (std::size_t l = 0; l < ring.num_variables(); ++l) {
    std::vector<std::vector<Rational>> x;
    for (const auto& b : d.basis) {
      Vector v = basis_vector(ring, m.gens(), b);
      v[b.first] = ring.mul(v[b.first], ring.variable(l));
      x.push_back(standard_coordinates(d, v));
    }
    for (std::size_t a = 0; a < dim; ++a) {
      Vector row(dim, ring.zero());
      row[a] = ring.variable(l);
      for (std::size_t c = 0; c < dim; ++c)
        row[c] = ring.sub(row[c], constant(ring, x[c][a]));
      rel.append_row(row);
    }
  }
  d.module = Presentation(ring, dim, rel);
  return d;
}

}  // namespace

std::vector<Rational> standard_coordinates(const MatlisDual& d, std::span<const Elem> v) {
  const Ring& ring = d.source.ring();
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index;
  for (std::size_t a = 0; a < d.basis.size(); ++a) index[d.basis[a]] = a;
  Vector r = d.source.reduce(v);
  std::vector<Rational> out(d.basis.size(), Rational(0));
  for (std::size_t p = 0; p < r.size(); ++p)
    for (const auto& t : ring.as_polynomial(r[p]).terms) {
      auto it = index.find({p, t.exponents});
      if (it == index.end()) throw Error(ErrorCode::IllFormed, "remainder leaves the standard basis");
      out[it->second] = t.coefficient;
    }
  return out;
}

MatlisDual matlis_dual(const Presentation& m) {
  return m.ring().is_pir() ? character_dual(m) : linear_dual(m);
}

ModuleMap dual_map(const MatlisDual& dm, const MatlisDual& dn, const ModuleMap& f) {
  const Ring& ring = f.source().ring();
  if (f.source().gens() != dm.source.gens() || f.target().gens() != dn.source.gens())
    throw Error(ErrorCode::IllFormed, "map does not match the dual data");
  if (dm.kind == MatlisDual::Kind::Linear) {
    std::vector<std::vector<Rational>> ft(dn.basis.size(),
                                          std::vector<Rational>(dm.basis.size()));
    for (std::size_t a = 0; a < dm.basis.size(); ++a) {
      auto c = standard_coordinates(dn, f.apply(basis_vector(ring, dm.source.gens(), dm.basis[a])));
      for (std::size_t b = 0; b < c.size(); ++b) ft[b][a] = c[b];
    }
    return ModuleMap(dn.module, dm.module, scalar_combination_rows(ring, ft, dm.basis.size()));
  }
  Matrix w = mat::mul(ring, mat::mul(ring, dm.v_inverse, f.matrix()), dn.v);
  Matrix out = Matrix::zero(ring, dn.components.size(), dm.components.size());
  for (std::size_t kk = 0; kk < dn.components.size(); ++kk)
    for (std::size_t ii = 0; ii < dm.components.size(); ++ii) {
      Integer e = dm.orders[ii] * ring.as_integer(w(dm.components[ii], dn.components[kk]));
      if (!mpz_divisible_p(e.get_mpz_t(), dn.orders[kk].get_mpz_t()))
        throw Error(ErrorCode::NotWellDefined, "map is not compatible with the cyclic orders");
      out(kk, ii) = ring.from_integer(e / dn.orders[kk]);
    }
  return ModuleMap(dn.module, dm.module, out);
}

TransferReport matlis_transfer_check(const Presentation& m, const std::vector<Ideal>& ideals) {
  TransferReport r;
  MatlisDual d = matlis_dual(m);
  r.dual_invariants = invariant_strings(d.module);
  r.holds = true;
  for (const auto& i : ideals) {
    TransferRow row;
    row.ideal = i.to_string();
    row.reduced_m = is_I_reduced(m, i);
    row.coreduced_dual = is_I_coreduced(d.module, i);
    row.coreduced_m = is_I_coreduced(m, i);
    row.reduced_dual = is_I_reduced(d.module, i);
    row.holds = row.reduced_m == row.coreduced_dual && row.coreduced_m == row.reduced_dual;
    r.holds = r.holds && row.holds;
    r.rows.push_back(std::move(row));
  }
  return r;
}

TransferReport matlis_transfer_check(const Presentation& m, const Ideal& ideal) {
  std::vector<Ideal> ideals{ideal};
  if (m.ring().is_finite())
    for (auto& i : cyclic_ideals(m.ring())) ideals.push_back(std::move(i));
  return matlis_transfer_check(m, ideals);
}

// Duality squares -----------------------------------------------------------------------

SquareReport duality_square_check(const Presentation& m, const Ideal& ideal) {
  const bool red = is_I_reduced(m, ideal), cored = is_I_coreduced(m, ideal);
  if (!red && !cored)
    throw Error(ErrorCode::PredicateFailed, "module is neither I-reduced nor I-coreduced");
  SquareReport r;
  MatlisDual dm = matlis_dual(m);
  if (cored) {
    LambdaResult l = lambda(m, ideal);
    MatlisDual dl = matlis_dual(*l.module);
    ModuleMap d_pi = dual_map(dm, dl, *l.project);
    GammaResult g = gamma(dm.module, ideal);
    auto f = factor_through_injection(d_pi, g.include);
    r.gamma_of_dual = f ? map_analyze(*f) : MapAnalysis{};
    r.gamma_dual_side = invariant_strings(g.module);
    r.dual_lambda_side = invariant_strings(dl.module);
  }
  if (red) {
    GammaResult g = gamma(m, ideal);
    MatlisDual dg = matlis_dual(g.module);
    ModuleMap d_iota = dual_map(dg, dm, g.include);
    LambdaResult l = lambda(dm.module, ideal);
    auto f = l.stabilized ? descend_to_quotient(d_iota, *l.module) : std::nullopt;
    r.lambda_of_dual = f ? map_analyze(*f) : MapAnalysis{};
    if (l.stabilized) r.lambda_dual_side = invariant_strings(*l.module);
    r.dual_gamma_side = invariant_strings(dg.module);
  }
  r.all_pass = iso_or_false(r.gamma_of_dual) && iso_or_false(r.lambda_of_dual);
  return r;
}

// Semigroup and Yoneda -------------------------------------------------------------------

SemigroupReport semigroup_table_check(const Presentation& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  const Ring& ring = m.ring();
  const Presentation quot = Presentation::cyclic(ideal);
  SemigroupReport r;
  HomModule h = hom_module(quot, m);
  Presentation t = tensor_product(quot, m);
  r.h_side = invariant_strings(h.module());
  r.t_side = invariant_strings(t);
  r.hh = map_analyze(hom_evaluation(hom_module(quot, h.module())));
  r.tt = map_analyze(ModuleMap(tensor_product(quot, t), t, Matrix::identity(ring, t.gens())));
  r.th = map_analyze(ModuleMap(tensor_product(quot, h.module()), h.module(),
                               Matrix::identity(ring, h.module().gens())));
  r.ht = map_analyze(hom_evaluation(hom_module(quot, t)));
  r.all_pass = r.hh.iso && r.tt.iso && r.th.iso && r.ht.iso;
  return r;
}

YonedaReport yoneda_gamma_nat(const Ideal& ideal) {
  const Presentation quot = Presentation::cyclic(ideal);
  GammaResult g = gamma(quot, ideal);
  auto canonical = factor_through_injection(ModuleMap::identity(quot), g.include);
  YonedaReport r{g.module, canonical ? map_analyze(*canonical) : MapAnalysis{}, false, {}, false};
  r.companion_zero = submodule_contains(quot, Matrix::from_rows(1, {}), scalar_generators(quot, ideal));
  r.invariants = invariant_strings(g.module);
  r.all_pass = r.canonical.iso && r.companion_zero;
  return r;
}

IdempotentHomReport idempotent_hom_check(const Presentation& n, const Ideal& ideal) {
  require_same_ring(n.ring(), ideal.ring());
  if (!ideal_equal(ideal, ideal_power(ideal, 2)))
    throw Error(ErrorCode::PredicateFailed, "ideal is not idempotent");
  const Ring& ring = n.ring();
  const Presentation r1 = Presentation::free(ring, 1);
  IdempotentHomReport r;

  LambdaResult lr = lambda(r1, ideal);
  HomModule from_lambda = hom_module(*lr.module, n);
  auto into_gamma = factor_through_injection(hom_evaluation(from_lambda), gamma(n, ideal).include);
  r.gamma_side = into_gamma ? map_analyze(*into_gamma) : MapAnalysis{};

  GammaResult gr = gamma(r1, ideal);
  HomModule from_gamma = hom_module(gr.module, n);
  Matrix rows = Matrix::from_rows(from_gamma.module().gens(), {});
  for (std::size_t a = 0; a < n.gens(); ++a) {
    Matrix phi = Matrix::zero(ring, gr.module.gens(), n.gens());
    for (std::size_t k = 0; k < gr.module.gens(); ++k) phi(k, a) = gr.include.matrix()(k, 0);
    rows.append_row(from_gamma.coordinates(phi));
  }
  ModuleMap act(n, from_gamma.module(), rows);
  LambdaResult ln = lambda(n, ideal);
  auto descended = ln.stabilized ? descend_to_quotient(act, *ln.module) : std::nullopt;
  r.lambda_side = descended ? map_analyze(*descended) : MapAnalysis{};
  r.all_pass = r.gamma_side.iso && r.lambda_side.iso;
  return r;
}

}  // namespace redcor
