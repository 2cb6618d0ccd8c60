#include "redcor/groebner.hpp"

#include <algorithm>
#include <limits>

namespace redcor::groebner {

bool ModuleVector::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t ModuleVector::lead_position() const {
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!comp[i].is_zero()) return i;
  return comp.size();
}

namespace {

// f + c * m * g, position by position.
void axpy(const Ring& ring, ModuleVector& f, const Rational& c, const Exponents& m,
          const ModuleVector& g, std::size_t from) {
  for (std::size_t p = from; p < g.comp.size(); ++p) {
    if (g.comp[p].is_zero()) continue;
    f.comp[p] = ring.poly_axpy(f.comp[p], c, m, g.comp[p]);
  }
}

}  // namespace

ModuleVector make_monic(const Ring& ring, ModuleVector v) {
  std::size_t p = v.lead_position();
  if (p == v.comp.size()) return v;
  Rational inv = ring.coeff_inv(v.comp[p].terms.front().coefficient);
  if (inv == 1) return v;
  Exponents one(ring.num_variables(), 0);
  for (std::size_t q = p; q < v.comp.size(); ++q)
    if (!v.comp[q].is_zero()) v.comp[q] = ring.poly_scale(v.comp[q], inv, one);
  return v;
}

ModuleBasis::ModuleBasis(const Ring& ring, std::size_t width,
                         std::vector<ModuleVector> generators)
    : ring_(ring), width_(width) {
  if (!ring.is_polynomial())
    throw Error(ErrorCode::UnsupportedRing, "Gröbner bases need a polynomial ring");
  for (const auto& g : generators)
    if (g.comp.size() != width) throw Error(ErrorCode::IllFormed, "generator width mismatch");
  buchberger(std::move(generators));
  interreduce();
}

const Exponents& ModuleBasis::lead_monomial(std::size_t i) const {
  const auto& v = basis_[i];
  return v.comp[v.lead_position()].terms.front().exponents;
}

ModuleVector ModuleBasis::reduce_with(ModuleVector f, std::size_t stop, std::size_t skip) const {
  const std::size_t nvars = ring_.num_variables();
  stop = std::min(stop, width_);
  for (std::size_t p = 0; p < stop; ++p) {
    Polynomial rem;
    while (!f.comp[p].is_zero()) {
      const Term lead = f.comp[p].terms.front();
      const ModuleVector* divisor = nullptr;
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == skip) continue;
        const auto& g = basis_[k];
        if (g.lead_position() != p) continue;
        if (monomial_divides(g.comp[p].terms.front().exponents, lead.exponents)) {
          divisor = &g;
          break;
        }
      }
      if (divisor == nullptr) {
        rem.terms.push_back(lead);
        f.comp[p].terms.erase(f.comp[p].terms.begin());
        continue;
      }
      Exponents m(nvars);
      const auto& dl = divisor->comp[p].terms.front();
      for (std::size_t v = 0; v < nvars; ++v) m[v] = lead.exponents[v] - dl.exponents[v];
      Rational c = ring_.coeff_neg(ring_.coeff_mul(lead.coefficient, ring_.coeff_inv(dl.coefficient)));
      axpy(ring_, f, c, m, *divisor, p);
    }
    f.comp[p] = std::move(rem);
  }
  return f;
}

ModuleVector ModuleBasis::reduce(ModuleVector f, std::size_t stop) const {
  if (f.comp.size() != width_) throw Error(ErrorCode::IllFormed, "vector width mismatch");
  return reduce_with(std::move(f), stop, std::numeric_limits<std::size_t>::max());
}

void ModuleBasis::buchberger(std::vector<ModuleVector> generators) {
  struct Pair {
    std::size_t i, j;
    Exponents lcm;
    std::uint64_t degree;
  };
  std::vector<Pair> queue;
  std::vector<std::vector<char>> queued;  // queued[max][min]

  auto mark = [&](std::size_t a, std::size_t b, char v) {
    if (a < b) std::swap(a, b);
    queued[a][b] = v;
  };
  auto in_queue = [&](std::size_t a, std::size_t b) {
    if (a < b) std::swap(a, b);
    return queued[a][b] != 0;
  };

  auto add_element = [&](ModuleVector v) {
    v = make_monic(ring_, std::move(v));
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(v));
    queued.emplace_back(idx + 1, 0);
    const std::size_t pos = basis_[idx].lead_position();
    for (std::size_t k = 0; k < idx; ++k) {
      if (basis_[k].lead_position() != pos) continue;
      Exponents l = monomial_lcm(lead_monomial(k), lead_monomial(idx));
      std::uint64_t d = total_degree(l);
      queue.push_back(Pair{k, idx, std::move(l), d});
      mark(k, idx, 1);
    }
  };

  for (auto& g : generators)
    if (!g.is_zero()) add_element(std::move(g));

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return ring_.compare_monomials(a.lcm, b.lcm) < 0;
    });
    Pair pr = *it;
    queue.erase(it);
    mark(pr.i, pr.j, 0);
    ++stats_.pairs_considered;

    const Exponents& li = lead_monomial(pr.i);
    const Exponents& lj = lead_monomial(pr.j);
    if (width_ == 1 && total_degree(pr.lcm) == total_degree(li) + total_degree(lj)) {
      ++stats_.pairs_skipped_coprime;
      continue;
    }
    const std::size_t pos = basis_[pr.i].lead_position();
    bool chain = false;
    for (std::size_t k = 0; k < basis_.size() && !chain; ++k) {
      if (k == pr.i || k == pr.j || basis_[k].lead_position() != pos) continue;
      if (!monomial_divides(lead_monomial(k), pr.lcm)) continue;
      if (!in_queue(pr.i, k) && !in_queue(pr.j, k)) chain = true;
    }
    if (chain) {
      ++stats_.pairs_skipped_chain;
      continue;
    }

    ModuleVector s;
    s.comp.assign(width_, Polynomial{});
    axpy(ring_, s, Rational(1), monomial_quotient(pr.lcm, li), basis_[pr.i], pos);
    axpy(ring_, s, ring_.coeff_neg(Rational(1)), monomial_quotient(pr.lcm, lj), basis_[pr.j],
         pos);
    s = reduce(std::move(s), width_);
    if (s.is_zero()) {
      ++stats_.reductions_to_zero;
      continue;
    }
    add_element(std::move(s));
  }
}

void ModuleBasis::interreduce() {
  std::vector<char> keep(basis_.size(), 1);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t pi = basis_[i].lead_position();
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      if (i == j || !keep[j] || basis_[j].lead_position() != pi) continue;
      const auto& lj = lead_monomial(j);
      const auto& li = lead_monomial(i);
      if (monomial_divides(lj, li) && (lj != li || j < i)) {
        keep[i] = 0;
        break;
      }
    }
  }
  std::vector<ModuleVector> minimal;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (keep[i]) minimal.push_back(std::move(basis_[i]));
  basis_ = std::move(minimal);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    // Tail reduction against the others; the lead term is irreducible by them.
    basis_[i] = make_monic(ring_, reduce_with(std::move(basis_[i]), width_, i));
  }
  // Deterministic order: by position, then descending lead monomial.
  std::sort(basis_.begin(), basis_.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    std::size_t pa = a.lead_position(), pb = b.lead_position();
    if (pa != pb) return pa < pb;
    return ring_.compare_monomials(a.comp[pa].terms.front().exponents,
                                   b.comp[pb].terms.front().exponents) > 0;
  });
}

}  // namespace redcor::groebner
