#pragma once

#include <memory>
#include <vector>

#include "redcor/ring.hpp"

namespace redcor {

namespace groebner {
class ModuleBasis;
}

/// Finitely generated ideal with its completed normal-form basis: the
/// reduced Gröbner basis over polynomial rings, the single nonnegative
/// gcd generator over ZZ (a divisor of n over ZZ/n). The zero ideal has an
/// empty basis.
class Ideal {
 public:
  Ideal(const Ring& ring, std::vector<Elem> generators);
  static Ideal from_elements(const std::vector<RingElement>& generators);
  static Ideal unit(const Ring& ring) { return Ideal(ring, {ring.one()}); }
  static Ideal zero(const Ring& ring) { return Ideal(ring, {ring.zero()}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Elem>& generators() const { return generators_; }
  const std::vector<Elem>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }
  bool is_unit() const;

  Elem normal_form(const Elem& f) const;
  bool contains(const Elem& f) const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Elem> generators_;
  std::vector<Elem> basis_;
  std::shared_ptr<const groebner::ModuleBasis> reducer_;
};

Ideal groebner_basis(const std::vector<RingElement>& generators);
RingElement normal_form(const RingElement& f, const Ideal& ideal);
bool ideal_contains(const Ideal& ideal, const RingElement& f);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// a is contained in b.
bool ideal_subset(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& ideal, unsigned k);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

}  // namespace redcor
