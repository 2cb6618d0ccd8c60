#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "redcor/error.hpp"

namespace redcor {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { Integers, ModularIntegers, Polynomial };
enum class CoefficientField { Rationals, PrimeField };
enum class MonomialOrder { Lex, Grlex, Grevlex };

std::string to_string(MonomialOrder order);
MonomialOrder parse_monomial_order(const std::string& name);

/// Value description of one of the supported base rings:
/// ZZ, ZZ/n, QQ[x1..xv] and F_p[x1..xv].
struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  Integer modulus = 0;  // ModularIntegers only, >= 2
  CoefficientField coefficients = CoefficientField::Rationals;
  Integer prime = 0;  // PrimeField only
  std::vector<std::string> variables;
  MonomialOrder order = MonomialOrder::Grevlex;

  bool operator==(const RingDescriptor& other) const;
};

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exponents;
  Rational coefficient;

  bool operator==(const Term&) const = default;
};

/// Sparse polynomial; terms are sorted strictly descending in the ring's
/// monomial order and carry no zero coefficients. Over F_p every
/// coefficient is an integer in [0, p).
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const Polynomial&) const = default;
};

/// Canonical element value. Integers for ZZ and ZZ/n (residues live in
/// [0, n)), polynomials otherwise. Equality of values is equality of ring
/// elements once both are canonical.
using Elem = std::variant<Integer, Polynomial>;

/// Shared handle to an immutable ring descriptor plus the arithmetic on
/// canonical element values.
class Ring {
 public:
  static Ring integers();
  static Ring modular(const Integer& n);
  static Ring polynomial(CoefficientField field, const Integer& prime,
                         std::vector<std::string> variables,
                         MonomialOrder order = MonomialOrder::Grevlex);
  static Ring rationals_poly(std::vector<std::string> variables,
                             MonomialOrder order = MonomialOrder::Grevlex);
  static Ring prime_field_poly(long p, std::vector<std::string> variables,
                               MonomialOrder order = MonomialOrder::Grevlex);
  static Ring from_descriptor(const RingDescriptor& d);

  const RingDescriptor& descriptor() const { return *desc_; }
  RingKind kind() const { return desc_->kind; }
  bool is_pir() const { return desc_->kind != RingKind::Polynomial; }
  bool is_polynomial() const { return desc_->kind == RingKind::Polynomial; }
  bool is_finite() const { return desc_->kind == RingKind::ModularIntegers; }
  /// 0 for ZZ, n for ZZ/n; meaningless for polynomial rings.
  const Integer& modulus() const { return desc_->modulus; }
  std::size_t num_variables() const { return desc_->variables.size(); }

  bool operator==(const Ring& other) const;
  bool operator!=(const Ring& other) const { return !(*this == other); }

  Elem zero() const;
  Elem one() const;
  Elem from_integer(const Integer& v) const;
  Elem from_int(long v) const { return from_integer(Integer(v)); }
  /// Polynomial rings only: the monomial x_i.
  Elem variable(std::size_t i) const;
  Elem monomial(const Exponents& e, const Rational& c) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned long k) const;

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool is_unit(const Elem& a) const;

  /// Integer value of a ZZ or ZZ/n element.
  const Integer& as_integer(const Elem& a) const;
  const Polynomial& as_polynomial(const Elem& a) const;

  std::string format(const Elem& a) const;
  Elem parse(const std::string& text) const;

  // Coefficient-field helpers for polynomial rings.
  Rational coeff_normalize(const Rational& c) const;
  Rational coeff_add(const Rational& a, const Rational& b) const;
  Rational coeff_sub(const Rational& a, const Rational& b) const;
  Rational coeff_mul(const Rational& a, const Rational& b) const;
  Rational coeff_inv(const Rational& a) const;
  Rational coeff_neg(const Rational& a) const;

  /// Three-way monomial comparison in the ring order (> 0 when a > b).
  int compare_monomials(const Exponents& a, const Exponents& b) const;

  Polynomial poly_add(const Polynomial& a, const Polynomial& b) const;
  Polynomial poly_scale(const Polynomial& a, const Rational& c, const Exponents& m) const;
  /// a + c * m * b, the reduction step.
  Polynomial poly_axpy(const Polynomial& a, const Rational& c, const Exponents& m,
                       const Polynomial& b) const;
  Polynomial poly_mul(const Polynomial& a, const Polynomial& b) const;

 private:
  explicit Ring(std::shared_ptr<const RingDescriptor> d) : desc_(std::move(d)) {}
  Integer reduce_integer(const Integer& v) const;

  std::shared_ptr<const RingDescriptor> desc_;
};

void require_same_ring(const Ring& a, const Ring& b);

/// Ring element bundled with its ring, for the public element API.
struct RingElement {
  Ring ring;
  Elem value;

  RingElement(Ring r, Elem v) : ring(std::move(r)), value(std::move(v)) {}
  static RingElement parse(const Ring& r, const std::string& text) {
    return RingElement(r, r.parse(text));
  }

  bool is_zero() const { return ring.is_zero(value); }
  std::string to_string() const { return ring.format(value); }

  friend RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring, b.ring);
    return RingElement(a.ring, a.ring.add(a.value, b.value));
  }
  friend RingElement operator-(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring, b.ring);
    return RingElement(a.ring, a.ring.sub(a.value, b.value));
  }
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_ring(a.ring, b.ring);
    return RingElement(a.ring, a.ring.mul(a.value, b.value));
  }
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring == b.ring && a.value == b.value;
  }
};

// Monomial helpers.
bool monomial_divides(const Exponents& a, const Exponents& b);
Exponents monomial_lcm(const Exponents& a, const Exponents& b);
Exponents monomial_quotient(const Exponents& b, const Exponents& a);
std::uint64_t total_degree(const Exponents& e);

}  // namespace redcor
