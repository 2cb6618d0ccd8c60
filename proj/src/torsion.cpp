#include "redcor/torsion.hpp"

#include "redcor/smith.hpp"

namespace redcor {

namespace {

Presentation residue_ring(const Ideal& ideal) { return Presentation::cyclic(ideal); }

}  // namespace

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

GammaResult gamma(const Presentation& m, const Ideal& ideal, unsigned bound) {
  require_same_ring(m.ring(), ideal.ring());
  std::vector<TowerStage> tower;
  Ideal power = ideal;
  Submodule current = colon_annihilator(m, power);
  for (unsigned k = 1; k <= bound; ++k) {
    tower.push_back({k, invariant_strings(current.module)});
    power = ideal_product(power, ideal);
    Submodule next = colon_annihilator(m, power);
    if (same_submodule(m, current.include.matrix(), next.include.matrix()))
      return {current.module, current.include, k, tower};
    current = std::move(next);
  }
  throw Error(ErrorCode::BoundExceeded,
              "torsion tower did not stabilize within " + std::to_string(bound));
}

LambdaResult lambda(const Presentation& m, const Ideal& ideal, unsigned bound) {
  require_same_ring(m.ring(), ideal.ring());
  LambdaResult out;
  Ideal power = ideal;
  Matrix current = scalar_generators(m, power);
  for (unsigned k = 1; k <= bound; ++k) {
    Presentation q = quotient(m, current);
    out.tower.push_back({k, invariant_strings(q)});
    power = ideal_product(power, ideal);
    Matrix next = scalar_generators(m, power);
    if (same_submodule(m, current, next)) {
      out.stabilized = true;
      out.exponent = k;
      out.project = ModuleMap(m, q, Matrix::identity(m.ring(), m.gens()));
      out.module = std::move(q);
      return out;
    }
    current = std::move(next);
  }
  out.exponent = bound;
  return out;
}

bool is_I_reduced(const Presentation& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  Submodule a = colon_annihilator(m, ideal);
  Submodule b = colon_annihilator(m, ideal_power(ideal, 2));
  return same_submodule(m, a.include.matrix(), b.include.matrix());
}

bool is_I_coreduced(const Presentation& m, const Ideal& ideal) {
  require_same_ring(m.ring(), ideal.ring());
  return same_submodule(m, scalar_generators(m, ideal),
                        scalar_generators(m, ideal_power(ideal, 2)));
}

bool is_torsion(const Presentation& m, const Ideal& ideal, unsigned bound) {
  return map_analyze(gamma(m, ideal, bound).include).surjective;
}

CompletenessVerdict is_complete(const Presentation& m, const Ideal& ideal, unsigned bound) {
  LambdaResult l = lambda(m, ideal, bound);
  if (!l.stabilized) return {Tristate::Unknown, bound};
  Matrix gens = scalar_generators(m, ideal_power(ideal, l.exponent));
  bool zero = submodule_contains(m, Matrix::from_rows(m.gens(), {}), gens);
  return {zero ? Tristate::True : Tristate::False, bound};
}

ModuleMap hom_evaluation(const HomModule& hom) {
  return ModuleMap(hom.module(), hom.target(), hom.generators());
}

RepresentabilityReport representability_check(const Presentation& m, const Ideal& ideal) {
  RepresentabilityReport r;
  r.reduced = is_I_reduced(m, ideal);
  r.coreduced = is_I_coreduced(m, ideal);
  if (!r.reduced && !r.coreduced)
    throw Error(ErrorCode::PredicateFailed, "module is neither I-reduced nor I-coreduced");
  const Presentation quot = residue_ring(ideal);
  if (r.reduced) {
    HomModule h = hom_module(quot, m);
    GammaResult g = gamma(m, ideal);
    auto into_gamma = factor_through_injection(hom_evaluation(h), g.include);
    r.gamma_check = into_gamma ? map_analyze(*into_gamma) : MapAnalysis{};
    r.hom_side = invariant_strings(h.module());
    r.gamma_side = invariant_strings(g.module);
  }
  if (r.coreduced) {
    Presentation t = tensor_product(quot, m);
    LambdaResult l = lambda(m, ideal);
    r.tensor_side = invariant_strings(t);
    if (l.stabilized) {
      auto map = try_module_map(t, *l.module, Matrix::identity(m.ring(), m.gens()));
      r.lambda_check = map ? map_analyze(*map) : MapAnalysis{};
      r.lambda_side = invariant_strings(*l.module);
    } else {
      r.lambda_check = MapAnalysis{};
    }
  }
  return r;
}

std::vector<Ideal> cyclic_ideals(const Ring& ring) {
  if (!ring.is_finite())
    throw Error(ErrorCode::UnsupportedQuery, "ideal enumeration needs a finite base ring");
  std::vector<Ideal> out;
  const Integer& n = ring.modulus();
  for (Integer d = 1; d <= n; ++d)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) out.emplace_back(ring, std::vector<Elem>{ring.from_integer(d)});
  return out;
}

bool is_reduced_for(const Presentation& m, const std::vector<Ideal>& ideals) {
  for (const auto& i : ideals)
    if (!is_I_reduced(m, i)) return false;
  return true;
}

bool is_coreduced_for(const Presentation& m, const std::vector<Ideal>& ideals) {
  for (const auto& i : ideals)
    if (!is_I_coreduced(m, i)) return false;
  return true;
}

bool is_globally_reduced(const Presentation& m) {
  return is_reduced_for(m, cyclic_ideals(m.ring()));
}

bool is_globally_coreduced(const Presentation& m) {
  return is_coreduced_for(m, cyclic_ideals(m.ring()));
}

}  // namespace redcor
