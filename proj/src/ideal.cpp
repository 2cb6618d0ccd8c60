#include "redcor/ideal.hpp"

#include "redcor/groebner.hpp"

namespace redcor {

namespace {

std::vector<Elem> pir_basis(const Ring& ring, const std::vector<Elem>& gens) {
  Integer g = ring.is_finite() ? ring.modulus() : Integer(0);
  for (const auto& e : gens) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ring.as_integer(e).get_mpz_t());
  if (ring.is_finite() && g == ring.modulus()) return {};
  if (g == 0) return {};
  return {ring.from_integer(g)};
}

groebner::ModuleVector as_vector(const Ring& ring, const Elem& e) {
  groebner::ModuleVector v;
  v.comp.push_back(ring.as_polynomial(e));
  return v;
}

}  // namespace

Ideal::Ideal(const Ring& ring, std::vector<Elem> generators)
    : ring_(ring), generators_(std::move(generators)) {
  if (generators_.empty()) generators_.push_back(ring.zero());
  if (ring.is_pir()) {
    basis_ = pir_basis(ring, generators_);
    return;
  }
  std::vector<groebner::ModuleVector> gens;
  for (const auto& g : generators_) gens.push_back(as_vector(ring, g));
  auto gb = std::make_shared<groebner::ModuleBasis>(ring, 1, std::move(gens));
  for (const auto& v : gb->elements()) basis_.push_back(v.comp[0]);
  reducer_ = std::move(gb);
}

Ideal Ideal::from_elements(const std::vector<RingElement>& generators) {
  if (generators.empty()) throw Error(ErrorCode::IllFormed, "ideal needs generators");
  const Ring& ring = generators.front().ring;
  std::vector<Elem> values;
  for (const auto& g : generators) {
    require_same_ring(ring, g.ring);
    values.push_back(g.value);
  }
  return Ideal(ring, std::move(values));
}

bool Ideal::is_unit() const { return basis_.size() == 1 && ring_.is_unit(basis_[0]); }

Elem Ideal::normal_form(const Elem& f) const {
  if (basis_.empty()) return f;
  if (ring_.is_pir()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), ring_.as_integer(f).get_mpz_t(),
               ring_.as_integer(basis_[0]).get_mpz_t());
    return ring_.from_integer(r);
  }
  return reducer_->normal_form(as_vector(ring_, f)).comp[0];
}

bool Ideal::contains(const Elem& f) const { return ring_.is_zero(normal_form(f)); }

std::string Ideal::to_string() const {
  std::string out = "(";
  const auto& shown = basis_.empty() ? std::vector<Elem>{ring_.zero()} : basis_;
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) out += ", ";
    out += ring_.format(shown[i]);
  }
  return out + ")";
}

Ideal groebner_basis(const std::vector<RingElement>& generators) {
  return Ideal::from_elements(generators);
}

RingElement normal_form(const RingElement& f, const Ideal& ideal) {
  require_same_ring(f.ring, ideal.ring());
  return RingElement(f.ring, ideal.normal_form(f.value));
}

bool ideal_contains(const Ideal& ideal, const RingElement& f) {
  require_same_ring(f.ring, ideal.ring());
  return ideal.contains(f.value);
}

bool ideal_subset(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  for (const auto& g : a.basis())
    if (!b.contains(g)) return false;
  return true;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.ring().is_pir()) return a.basis() == b.basis();
  return ideal_subset(a, b) && ideal_subset(b, a);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  const Ring& ring = a.ring();
  std::vector<Elem> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(ring.mul(x, y));
  return Ideal(ring, std::move(gens));
}

Ideal ideal_power(const Ideal& ideal, unsigned k) {
  if (k == 0) throw Error(ErrorCode::BadExponents, "ideal power needs k >= 1");
  Ideal acc = ideal;
  for (unsigned i = 1; i < k; ++i) acc = ideal_product(acc, ideal);
  return acc;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Elem> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Ideal(a.ring(), std::move(gens));
}

}  // namespace redcor
