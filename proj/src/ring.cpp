#include "redcor/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace redcor {

std::string to_string(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::Grlex: return "grlex";
    case MonomialOrder::Grevlex: return "grevlex";
  }
  return "grevlex";
}

MonomialOrder parse_monomial_order(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "grlex") return MonomialOrder::Grlex;
  if (name == "grevlex") return MonomialOrder::Grevlex;
  throw Error(ErrorCode::ParseError, "unknown monomial order '" + name + "'");
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case RingKind::Integers: return true;
    case RingKind::ModularIntegers: return modulus == o.modulus;
    case RingKind::Polynomial:
      return coefficients == o.coefficients &&
             (coefficients == CoefficientField::Rationals || prime == o.prime) &&
             variables == o.variables && order == o.order;
  }
  return false;
}

bool monomial_divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents monomial_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents monomial_quotient(const Exponents& b, const Exponents& a) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

std::uint64_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

// ---------------------------------------------------------------------------

Ring Ring::integers() {
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Integers;
  return Ring(std::move(d));
}

Ring Ring::modular(const Integer& n) {
  if (n < 2) throw Error(ErrorCode::IllFormed, "modulus must be >= 2");
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::ModularIntegers;
  d->modulus = n;
  return Ring(std::move(d));
}

Ring Ring::polynomial(CoefficientField field, const Integer& prime,
                      std::vector<std::string> variables, MonomialOrder order) {
  if (variables.empty()) throw Error(ErrorCode::IllFormed, "polynomial ring needs variables");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw Error(ErrorCode::IllFormed, "empty variable name");
    if (!std::isalpha(static_cast<unsigned char>(v[0])))
      throw Error(ErrorCode::IllFormed, "variable names must start with a letter: " + v);
    for (char ch : v)
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
        throw Error(ErrorCode::IllFormed, "bad variable name: " + v);
    if (!seen.insert(v).second) throw Error(ErrorCode::IllFormed, "duplicate variable " + v);
  }
  auto d = std::make_shared<RingDescriptor>();
  d->kind = RingKind::Polynomial;
  d->coefficients = field;
  if (field == CoefficientField::PrimeField) {
    if (prime < 2 || mpz_probab_prime_p(prime.get_mpz_t(), 30) == 0)
      throw Error(ErrorCode::IllFormed, "coefficient field characteristic must be prime");
    d->prime = prime;
  }
  d->variables = std::move(variables);
  d->order = order;
  return Ring(std::move(d));
}

Ring Ring::rationals_poly(std::vector<std::string> variables, MonomialOrder order) {
  return polynomial(CoefficientField::Rationals, 0, std::move(variables), order);
}

Ring Ring::prime_field_poly(long p, std::vector<std::string> variables, MonomialOrder order) {
  return polynomial(CoefficientField::PrimeField, p, std::move(variables), order);
}

Ring Ring::from_descriptor(const RingDescriptor& d) {
  switch (d.kind) {
    case RingKind::Integers: return integers();
    case RingKind::ModularIntegers: return modular(d.modulus);
    case RingKind::Polynomial: return polynomial(d.coefficients, d.prime, d.variables, d.order);
  }
  throw Error(ErrorCode::IllFormed, "unknown ring kind");
}

bool Ring::operator==(const Ring& other) const {
  return desc_ == other.desc_ || *desc_ == *other.desc_;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a != b) throw Error(ErrorCode::MixedRings, "operands belong to different rings");
}

Integer Ring::reduce_integer(const Integer& v) const {
  if (desc_->kind != RingKind::ModularIntegers) return v;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), desc_->modulus.get_mpz_t());
  return r;
}

Elem Ring::zero() const {
  if (is_polynomial()) return Polynomial{};
  return Integer(0);
}

Elem Ring::one() const { return from_integer(1); }

Elem Ring::from_integer(const Integer& v) const {
  if (!is_polynomial()) return reduce_integer(v);
  Rational c = coeff_normalize(Rational(v));
  if (c == 0) return Polynomial{};
  return Polynomial{{Term{Exponents(num_variables(), 0), c}}};
}

Elem Ring::variable(std::size_t i) const {
  if (!is_polynomial() || i >= num_variables())
    throw Error(ErrorCode::IllFormed, "no such variable");
  Exponents e(num_variables(), 0);
  e[i] = 1;
  return Polynomial{{Term{e, Rational(1)}}};
}

Elem Ring::monomial(const Exponents& e, const Rational& c) const {
  Rational n = coeff_normalize(c);
  if (n == 0) return Polynomial{};
  return Polynomial{{Term{e, n}}};
}

// Coefficients ----------------------------------------------------------------

Rational Ring::coeff_normalize(const Rational& c) const {
  if (desc_->coefficients == CoefficientField::Rationals) {
    Rational r = c;
    r.canonicalize();
    return r;
  }
  const Integer& p = desc_->prime;
  Integer num = c.get_num(), den = c.get_den();
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(ErrorCode::IllFormed, "denominator divisible by the characteristic");
  Integer v = num * inv;
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
  return Rational(v);
}

Rational Ring::coeff_add(const Rational& a, const Rational& b) const {
  if (desc_->coefficients == CoefficientField::Rationals) return a + b;
  Integer v = a.get_num() + b.get_num();
  if (v >= desc_->prime) v -= desc_->prime;
  return Rational(v);
}

Rational Ring::coeff_sub(const Rational& a, const Rational& b) const {
  if (desc_->coefficients == CoefficientField::Rationals) return a - b;
  Integer v = a.get_num() - b.get_num();
  if (v < 0) v += desc_->prime;
  return Rational(v);
}

Rational Ring::coeff_mul(const Rational& a, const Rational& b) const {
  if (desc_->coefficients == CoefficientField::Rationals) return a * b;
  Integer v = a.get_num() * b.get_num();
  mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), desc_->prime.get_mpz_t());
  return Rational(v);
}

Rational Ring::coeff_inv(const Rational& a) const {
  if (a == 0) throw Error(ErrorCode::IllFormed, "inverse of zero coefficient");
  if (desc_->coefficients == CoefficientField::Rationals) return 1 / a;
  Integer inv;
  Integer num = a.get_num();
  mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), desc_->prime.get_mpz_t());
  return Rational(inv);
}

Rational Ring::coeff_neg(const Rational& a) const {
  if (desc_->coefficients == CoefficientField::Rationals) return -a;
  if (a == 0) return a;
  return Rational(desc_->prime - a.get_num());
}

// Monomial orders -------------------------------------------------------------

int Ring::compare_monomials(const Exponents& a, const Exponents& b) const {
  const std::size_t n = a.size();
  switch (desc_->order) {
    case MonomialOrder::Lex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Grlex: {
      auto da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    }
    case MonomialOrder::Grevlex: {
      auto da = total_degree(a), db = total_degree(b);
      if (da != db) return da > db ? 1 : -1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
  }
  return 0;
}

// Polynomial arithmetic ---------------------------------------------------------

Polynomial Ring::poly_axpy(const Polynomial& a, const Rational& c, const Exponents& m,
                           const Polynomial& b) const {
  Polynomial out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  auto shifted = [&](const Term& t) {
    Exponents e(t.exponents.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exponents[i] + m[i];
    return e;
  };
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Exponents eb = shifted(b.terms[j]);
    int cmp = i == a.terms.size() ? -1 : compare_monomials(a.terms[i].exponents, eb);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      Rational v = coeff_mul(c, b.terms[j].coefficient);
      if (v != 0) out.terms.push_back(Term{std::move(eb), std::move(v)});
      ++j;
    } else {
      Rational v = coeff_add(a.terms[i].coefficient, coeff_mul(c, b.terms[j].coefficient));
      if (v != 0) out.terms.push_back(Term{std::move(eb), std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Ring::poly_add(const Polynomial& a, const Polynomial& b) const {
  return poly_axpy(a, Rational(1), Exponents(num_variables(), 0), b);
}

Polynomial Ring::poly_scale(const Polynomial& a, const Rational& c, const Exponents& m) const {
  return poly_axpy(Polynomial{}, c, m, a);
}

Polynomial Ring::poly_mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.terms.size() <= b.terms.size() ? a : b;
  const Polynomial& large = a.terms.size() <= b.terms.size() ? b : a;
  Polynomial acc;
  for (const auto& t : small.terms) acc = poly_axpy(acc, t.coefficient, t.exponents, large);
  return acc;
}

// Element arithmetic ------------------------------------------------------------

const Integer& Ring::as_integer(const Elem& a) const {
  if (const auto* v = std::get_if<Integer>(&a)) return *v;
  throw Error(ErrorCode::MixedRings, "expected an integer element");
}

const Polynomial& Ring::as_polynomial(const Elem& a) const {
  if (const auto* v = std::get_if<Polynomial>(&a)) return *v;
  throw Error(ErrorCode::MixedRings, "expected a polynomial element");
}

Elem Ring::add(const Elem& a, const Elem& b) const {
  if (is_polynomial()) return poly_add(as_polynomial(a), as_polynomial(b));
  return reduce_integer(as_integer(a) + as_integer(b));
}

Elem Ring::sub(const Elem& a, const Elem& b) const {
  if (is_polynomial())
    return poly_axpy(as_polynomial(a), coeff_neg(Rational(1)), Exponents(num_variables(), 0),
                     as_polynomial(b));
  return reduce_integer(as_integer(a) - as_integer(b));
}

Elem Ring::neg(const Elem& a) const { return sub(zero(), a); }

Elem Ring::mul(const Elem& a, const Elem& b) const {
  if (is_polynomial()) return poly_mul(as_polynomial(a), as_polynomial(b));
  return reduce_integer(as_integer(a) * as_integer(b));
}

Elem Ring::pow(const Elem& a, unsigned long k) const {
  Elem result = one();
  Elem base = a;
  while (k > 0) {
    if (k & 1UL) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

bool Ring::is_zero(const Elem& a) const {
  if (is_polynomial()) return as_polynomial(a).is_zero();
  return as_integer(a) == 0;
}

bool Ring::is_one(const Elem& a) const { return a == one(); }

bool Ring::is_unit(const Elem& a) const {
  switch (kind()) {
    case RingKind::Integers: {
      const Integer& v = as_integer(a);
      return v == 1 || v == -1;
    }
    case RingKind::ModularIntegers: {
      Integer g;
      mpz_gcd(g.get_mpz_t(), as_integer(a).get_mpz_t(), modulus().get_mpz_t());
      return g == 1;
    }
    case RingKind::Polynomial: {
      const auto& p = as_polynomial(a);
      return p.terms.size() == 1 && total_degree(p.terms[0].exponents) == 0;
    }
  }
  return false;
}

// Printing ------------------------------------------------------------------------

std::string Ring::format(const Elem& a) const {
  if (!is_polynomial()) return as_integer(a).get_str();
  const auto& p = as_polynomial(a);
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms) {
    Rational c = t.coefficient;
    bool negative = c < 0;
    if (negative) c = -c;
    if (negative)
      out << '-';
    else if (!first)
      out << '+';
    first = false;
    bool constant = total_degree(t.exponents) == 0;
    bool printed = false;
    if (constant || c != 1) {
      out << c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      if (t.exponents[i] == 0) continue;
      if (printed) out << '*';
      out << desc_->variables[i];
      if (t.exponents[i] > 1) out << '^' << t.exponents[i];
      printed = true;
    }
  }
  return out.str();
}

// Parsing ---------------------------------------------------------------------------

namespace {

class ElementParser {
 public:
  ElementParser(const Ring& ring, const std::string& text) : ring_(ring), text_(text) {}

  Elem parse() {
    Elem e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                msg + " at column " + std::to_string(pos_ + 1) + " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Elem expression() {
    skip_space();
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    Elem acc = product();
    if (negate) acc = ring_.neg(acc);
    for (;;) {
      if (accept('+'))
        acc = ring_.add(acc, product());
      else if (accept('-'))
        acc = ring_.sub(acc, product());
      else
        return acc;
    }
  }

  Elem product() {
    Elem acc = power();
    for (;;) {
      skip_space();
      if (accept('*')) {
        acc = ring_.mul(acc, power());
        continue;
      }
      // Juxtaposition such as `2x` or `x y`.
      if (pos_ < text_.size() &&
          (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        acc = ring_.mul(acc, power());
        continue;
      }
      return acc;
    }
  }

  Elem power() {
    Elem base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned long k = std::stoul(text_.substr(start, pos_ - start));
      base = ring_.pow(base, k);
    }
    return base;
  }

  Integer integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected number");
    return Integer(text_.substr(start, pos_ - start));
  }

  Elem atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Elem e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = integer_literal();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        Integer den = integer_literal();
        if (den == 0) fail("zero denominator");
        if (!ring_.is_polynomial()) fail("rational literal in an integer ring");
        return ring_.monomial(Exponents(ring_.num_variables(), 0), Rational(num, den));
      }
      return ring_.from_integer(num);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (ring_.is_polynomial()) {
        const auto& vars = ring_.descriptor().variables;
        // Longest-match fallback lets `xy` read as x*y when no variable is named `xy`.
        for (std::size_t i = 0; i < vars.size(); ++i)
          if (vars[i] == name) return ring_.variable(i);
        Elem acc = ring_.one();
        std::size_t k = 0;
        while (k < name.size()) {
          std::size_t best = 0, best_len = 0;
          for (std::size_t i = 0; i < vars.size(); ++i)
            if (name.compare(k, vars[i].size(), vars[i]) == 0 && vars[i].size() > best_len) {
              best = i;
              best_len = vars[i].size();
            }
          if (best_len == 0) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
          }
          acc = ring_.mul(acc, ring_.variable(best));
          k += best_len;
        }
        return acc;
      }
      pos_ = start;
      fail("variables are not allowed in this ring");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Ring& ring_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Elem Ring::parse(const std::string& text) const { return ElementParser(*this, text).parse(); }

}  // namespace redcor
