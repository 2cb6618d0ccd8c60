#include "redcor/smith.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace redcor {

namespace {

using integer_linear::IntMatrix;
using integer_linear::IntRow;

struct IntSmith {
  IntMatrix d, u, v;
};

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, IntRow(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_addmul(IntMatrix& m, std::size_t target, const Integer& q, std::size_t source) {
  for (std::size_t j = 0; j < m[target].size(); ++j)
    if (m[source][j] != 0)
      mpz_addmul(m[target][j].get_mpz_t(), q.get_mpz_t(), m[source][j].get_mpz_t());
}

void col_addmul(IntMatrix& m, std::size_t target, const Integer& q, std::size_t source) {
  for (auto& row : m)
    if (row[source] != 0) mpz_addmul(row[target].get_mpz_t(), q.get_mpz_t(), row[source].get_mpz_t());
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

IntSmith integer_smith(IntMatrix d, std::size_t rows, std::size_t cols) {
  IntSmith s{std::move(d), identity_int(rows), identity_int(cols)};
  auto& a = s.d;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found_any = false;
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 &&
              (pi == rows || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      found_any = true;
      std::swap(a[t], a[pi]);
      std::swap(s.u[t], s.u[pi]);
      swap_cols(a, t, pj);
      swap_cols(s.v, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        q = -q;
        row_addmul(a, i, q, t);
        row_addmul(s.u, i, q, t);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        q = -q;
        col_addmul(a, j, q, t);
        col_addmul(s.v, j, q, t);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      row_addmul(a, t, Integer(1), bad);
      row_addmul(s.u, t, Integer(1), bad);
    }
    if (!found_any) break;
    if (a[t][t] < 0) {
      for (auto& e : a[t]) e = -e;
      for (auto& e : s.u[t]) e = -e;
    }
  }
  return s;
}

// Unit u mod n with u * d = gcd(d, n) mod n.
Integer associate_unit(const Integer& d, const Integer& n) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer m = n / g;
  if (m == 1) return 1;
  Integer dd = (d / g) % m;
  if (dd < 0) dd += m;
  Integer u;
  mpz_invert(u.get_mpz_t(), dd.get_mpz_t(), m.get_mpz_t());
  for (;; u += m) {
    Integer c;
    mpz_gcd(c.get_mpz_t(), u.get_mpz_t(), n.get_mpz_t());
    if (c == 1) return u;
  }
}

Matrix to_matrix(const Ring& ring, const IntMatrix& m, std::size_t cols) {
  Matrix out = Matrix::from_rows(cols, {});
  for (const auto& row : m) {
    Vector v;
    v.reserve(cols);
    for (const auto& e : row) v.push_back(ring.from_integer(e));
    out.append_row(v);
  }
  return out;
}

void require_pir(const Ring& ring) {
  if (!ring.is_pir())
    throw Error(ErrorCode::UnsupportedRing, "Smith form needs ZZ or ZZ/n");
}

}  // namespace

SmithForm smith_form(const Ring& ring, const Matrix& a) {
  require_pir(ring);
  const std::size_t r = a.rows(), g = a.cols();
  IntMatrix lifted;
  for (std::size_t i = 0; i < r; ++i) {
    IntRow row;
    for (std::size_t j = 0; j < g; ++j) row.push_back(ring.as_integer(a(i, j)));
    lifted.push_back(std::move(row));
  }
  IntSmith s = integer_smith(std::move(lifted), r, g);
  if (ring.is_finite()) {
    const Integer& n = ring.modulus();
    for (std::size_t t = 0; t < std::min(r, g); ++t) {
      Integer dt = s.d[t][t] % n;
      if (dt == 0) continue;
      Integer u = associate_unit(dt, n);
      for (auto& e : s.d[t]) e *= u;
      for (auto& e : s.u[t]) e *= u;
    }
  }
  SmithForm out;
  out.U = to_matrix(ring, s.u, r);
  out.V = to_matrix(ring, s.v, g);
  out.D = to_matrix(ring, s.d, g);
  for (std::size_t t = 0; t < std::min(r, g); ++t)
    if (!ring.is_zero(out.D(t, t))) out.invariants.push_back(out.D(t, t));
  out.free_rank = g - out.invariants.size();
  return out;
}

SmithForm smith_invariants(const Presentation& m) {
  return smith_form(m.ring(), m.relations());
}

std::vector<Integer> module_invariants(const Presentation& m) {
  const Ring& ring = m.ring();
  SmithForm s = smith_invariants(m);
  std::vector<Integer> out;
  for (const auto& d : s.invariants)
    if (!ring.is_unit(d)) out.push_back(ring.as_integer(d));
  for (std::size_t i = 0; i < s.free_rank; ++i) out.push_back(ring.modulus());
  return out;
}

bool isomorphic(const Presentation& a, const Presentation& b) {
  require_same_ring(a.ring(), b.ring());
  return module_invariants(a) == module_invariants(b);
}

std::optional<Integer> module_order(const Presentation& m) {
  Integer order = 1;
  for (const auto& d : module_invariants(m)) {
    if (d == 0) return std::nullopt;
    order *= d;
  }
  return order;
}

std::optional<std::vector<std::pair<std::size_t, Exponents>>> standard_basis(
    const Presentation& m, std::size_t cap) {
  const Ring& ring = m.ring();
  if (!ring.is_polynomial())
    throw Error(ErrorCode::UnsupportedRing, "standard bases need a polynomial ring");
  const std::size_t nv = ring.num_variables();
  std::vector<std::vector<Exponents>> leads(m.gens());
  for (auto& [p, e] : m.relation_span().leading_terms()) leads[p].push_back(e);

  auto standard = [&](std::size_t p, const Exponents& e) {
    return std::none_of(leads[p].begin(), leads[p].end(),
                        [&](const Exponents& l) { return monomial_divides(l, e); });
  };

  std::vector<std::pair<std::size_t, Exponents>> out;
  for (std::size_t p = 0; p < m.gens(); ++p) {
    const Exponents one(nv, 0);
    if (!standard(p, one)) continue;
    for (std::size_t v = 0; v < nv; ++v) {
      bool bounded = std::any_of(leads[p].begin(), leads[p].end(), [&](const Exponents& l) {
        for (std::size_t w = 0; w < nv; ++w)
          if (w != v && l[w] != 0) return false;
        return l[v] != 0;
      });
      if (!bounded) return std::nullopt;
    }
    std::set<Exponents> seen{one};
    std::deque<Exponents> queue{one};
    std::vector<Exponents> found;
    while (!queue.empty()) {
      Exponents e = queue.front();
      queue.pop_front();
      found.push_back(e);
      if (out.size() + found.size() > cap)
        throw Error(ErrorCode::TooLarge, "standard basis exceeds " + std::to_string(cap));
      for (std::size_t v = 0; v < nv; ++v) {
        Exponents next = e;
        ++next[v];
        if (standard(p, next) && seen.insert(next).second) queue.push_back(next);
      }
    }
    std::sort(found.begin(), found.end(), [&](const Exponents& a, const Exponents& b) {
      return ring.compare_monomials(a, b) < 0;
    });
    for (auto& e : found) out.emplace_back(p, std::move(e));
  }
  return out;
}

std::vector<std::string> invariant_strings(const Presentation& m) {
  if (m.ring().is_pir()) {
    std::vector<std::string> out;
    for (const auto& d : module_invariants(m)) out.push_back(d.get_str());
    return out;
  }
  auto basis = standard_basis(m);
  if (basis && basis->empty()) return {};
  if (basis) return {"dim " + std::to_string(basis->size())};
  return {"gens " + std::to_string(m.gens())};
}

std::string describe(const Presentation& m) {
  const Ring& ring = m.ring();
  if (!ring.is_pir()) {
    auto inv = invariant_strings(m);
    return inv.empty() ? "0" : inv.front();
  }
  auto inv = module_invariants(m);
  if (inv.empty()) return "0";
  std::string out;
  std::size_t free = 0;
  for (const auto& d : inv) {
    if (ring.is_finite() ? d == ring.modulus() : d == 0) {
      ++free;
      continue;
    }
    if (!out.empty()) out += "+";
    out += "Z/" + d.get_str();
  }
  if (free) {
    std::string f = ring.is_finite() ? "(Z/" + ring.modulus().get_str() + ")" : std::string("Z");
    if (free > 1) f += "^" + std::to_string(free);
    if (!out.empty()) out += "+";
    out += f;
  }
  return out;
}

}  // namespace redcor
