#include "redcor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>

namespace redcor::oracle {

namespace {

constexpr long kAmbientCap = 1L << 24;

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorCode::TooLarge, "entry does not fit a machine integer");
  return v.get_si();
}

long residue(const Integer& v, long n) {
  Integer r = v % n;
  if (r < 0) r += n;
  return r.get_si();
}

Integer bareiss_det(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Smallest N > 0 with N * M = 0 found among g x g minors of the relations.
long integer_module_modulus(const Presentation& m) {
  const Ring& ring = m.ring();
  const std::size_t g = m.gens(), r = m.relations().rows();
  if (g == 0) return 1;
  if (r < g) throw Error(ErrorCode::InfiniteModule, "fewer relations than generators");
  std::vector<std::vector<Integer>> rows(r, std::vector<Integer>(g));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g; ++j) rows[i][j] = ring.as_integer(m.relations()(i, j));
  Integer best = 0;
  std::vector<bool> pick(r, false);
  std::fill(pick.begin(), pick.begin() + g, true);
  do {
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 0; i < r; ++i)
      if (pick[i]) minor.push_back(rows[i]);
    Integer d = abs(bareiss_det(std::move(minor)));
    if (d != 0 && (best == 0 || d < best)) best = d;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (best == 0) throw Error(ErrorCode::InfiniteModule, "module has a free summand");
  return to_long(best);
}

long module_modulus(const Presentation& m) {
  const Ring& ring = m.ring();
  if (ring.is_polynomial())
    throw Error(ErrorCode::UnsupportedRing, "oracle enumerates modules over ZZ and ZZ/n only");
  if (ring.is_finite()) return to_long(ring.modulus());
  return integer_module_modulus(m);
}

void require_same(const Ring& a, const Ring& b) { require_same_ring(a, b); }

}  // namespace

FiniteModuleTable::FiniteModuleTable(const Presentation& m, std::size_t size_cap)
    : module_(m), modulus_(module_modulus(m)) {
  const std::size_t g = m.gens();
  long ambient = 1;
  for (std::size_t j = 0; j < g; ++j) {
    if (ambient > kAmbientCap / modulus_)
      throw Error(ErrorCode::TooLarge, "ambient coordinate space too large to enumerate");
    ambient *= modulus_;
  }

  // Relation subgroup of (Z/N)^g by additive closure of the rows.
  std::vector<std::vector<long>> rel_rows;
  for (std::size_t i = 0; i < m.relations().rows(); ++i) {
    std::vector<long> row(g);
    for (std::size_t j = 0; j < g; ++j)
      row[j] = residue(m.ring().as_integer(m.relations()(i, j)), modulus_);
    rel_rows.push_back(std::move(row));
  }
  std::vector<char> in_span(ambient, 0);
  std::vector<std::vector<long>> span;
  std::deque<std::vector<long>> queue{std::vector<long>(g, 0)};
  in_span[0] = 1;
  while (!queue.empty()) {
    std::vector<long> v = std::move(queue.front());
    queue.pop_front();
    for (const auto& row : rel_rows) {
      std::vector<long> w(g);
      for (std::size_t j = 0; j < g; ++j) w[j] = (v[j] + row[j]) % modulus_;
      std::size_t c = code(w);
      if (!in_span[c]) {
        in_span[c] = 1;
        queue.push_back(std::move(w));
      }
    }
    span.push_back(std::move(v));
  }

  if (static_cast<std::size_t>(ambient) / span.size() > size_cap)
    throw Error(ErrorCode::TooLarge, "module has more than " + std::to_string(size_cap) + " elements");

  constexpr std::uint32_t unset = UINT32_MAX;
  label_.assign(ambient, unset);
  std::vector<long> coords(g, 0);
  for (long c = 0; c < ambient; ++c) {
    long rest = c;
    for (std::size_t j = 0; j < g; ++j) {
      coords[j] = rest % modulus_;
      rest /= modulus_;
    }
    if (label_[c] != unset) continue;
    const auto index = static_cast<std::uint32_t>(elements_.size());
    elements_.push_back(coords);
    for (const auto& s : span) {
      std::vector<long> w(g);
      for (std::size_t j = 0; j < g; ++j) w[j] = (coords[j] + s[j]) % modulus_;
      label_[code(w)] = index;
    }
  }
}

std::size_t FiniteModuleTable::code(std::span<const long> coords) const {
  std::size_t c = 0;
  for (std::size_t j = coords.size(); j-- > 0;) {
    long r = coords[j] % modulus_;
    if (r < 0) r += modulus_;
    c = c * modulus_ + r;
  }
  return c;
}

std::size_t FiniteModuleTable::index_of(std::span<const long> coords) const {
  if (coords.size() != module_.gens()) throw Error(ErrorCode::IllFormed, "coordinate length mismatch");
  return label_[code(coords)];
}

std::size_t FiniteModuleTable::index_of_vector(std::span<const Elem> v) const {
  std::vector<long> coords;
  for (const auto& e : v) coords.push_back(residue(module_.ring().as_integer(e), modulus_));
  return index_of(coords);
}

std::size_t FiniteModuleTable::add(std::size_t a, std::size_t b) const {
  std::vector<long> w(module_.gens());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = elements_[a][j] + elements_[b][j];
  return index_of(w);
}

std::size_t FiniteModuleTable::scale(long r, std::size_t a) const {
  std::vector<long> w(module_.gens());
  const long rr = ((r % modulus_) + modulus_) % modulus_;
  for (std::size_t j = 0; j < w.size(); ++j) w[j] = (rr * elements_[a][j]) % modulus_;
  return index_of(w);
}

Vector FiniteModuleTable::lift(std::size_t a) const {
  Vector out;
  for (long c : elements_[a]) out.push_back(module_.ring().from_int(c));
  return out;
}

std::vector<std::size_t> FiniteModuleTable::closure(const std::vector<std::size_t>& gens) const {
  std::vector<char> seen(size(), 0);
  std::vector<std::size_t> out{zero()};
  seen[zero()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (std::size_t g : gens) {
      std::size_t s = add(out[k], g);
      if (!seen[s]) {
        seen[s] = 1;
        out.push_back(s);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteModuleTable enumerate_module(const Presentation& m, std::size_t size_cap) {
  return FiniteModuleTable(m, size_cap);
}

std::vector<long> ideal_elements(const Ideal& ideal, long modulus) {
  const Ring& ring = ideal.ring();
  if (ring.is_polynomial())
    throw Error(ErrorCode::UnsupportedRing, "ideal enumeration needs ZZ or ZZ/n");
  std::vector<long> gens;
  for (const auto& g : ideal.generators()) gens.push_back(residue(ring.as_integer(g), modulus));
  std::vector<char> seen(modulus, 0);
  std::vector<long> out{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (long g : gens)
      for (long r = 0; r < modulus; ++r) {
        long s = (out[k] + r * g) % modulus;
        if (!seen[s]) {
          seen[s] = 1;
          out.push_back(s);
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::size_t> kernel_of(const FiniteModuleTable& t, long a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.scale(a, i) == t.zero()) out.push_back(i);
  return out;
}

std::set<std::size_t> image_of(const FiniteModuleTable& t, long a) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.insert(t.scale(a, i));
  return out;
}

}  // namespace

bool elementwise_reduced_check(const Presentation& m, const Ideal& ideal) {
  require_same(m.ring(), ideal.ring());
  FiniteModuleTable t(m);
  for (long a : ideal_elements(ideal, t.modulus()))
    if (kernel_of(t, a) != kernel_of(t, a * a % t.modulus())) return false;
  return true;
}

bool elementwise_coreduced_check(const Presentation& m, const Ideal& ideal) {
  require_same(m.ring(), ideal.ring());
  FiniteModuleTable t(m);
  for (long a : ideal_elements(ideal, t.modulus()))
    if (image_of(t, a) != image_of(t, a * a % t.modulus())) return false;
  return true;
}

std::vector<std::size_t> annihilated_elements(const FiniteModuleTable& t, const Ideal& ideal) {
  auto as = ideal_elements(ideal, t.modulus());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (std::all_of(as.begin(), as.end(), [&](long a) { return t.scale(a, i) == t.zero(); }))
      out.push_back(i);
  return out;
}

std::vector<std::size_t> product_elements(const FiniteModuleTable& t, const Ideal& ideal) {
  std::set<std::size_t> products;
  for (long a : ideal_elements(ideal, t.modulus()))
    for (std::size_t i = 0; i < t.size(); ++i) products.insert(t.scale(a, i));
  return t.closure({products.begin(), products.end()});
}

std::vector<std::size_t> image_elements(const FiniteModuleTable& t, const ModuleMap& f) {
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < f.matrix().rows(); ++i) gens.push_back(t.index_of_vector(f.matrix().row(i)));
  return t.closure(gens);
}

std::vector<ModuleMap> brute_force_homs(const Presentation& m, const Presentation& n,
                                        std::size_t cap) {
  require_same(m.ring(), n.ring());
  FiniteModuleTable tn(n);
  const std::size_t g = m.gens();
  double candidates = std::pow(static_cast<double>(tn.size()), static_cast<double>(g));
  if (candidates > static_cast<double>(cap))
    throw Error(ErrorCode::TooLarge, "too many generator assignments");

  const Ring& ring = m.ring();
  std::vector<std::vector<long>> rels;
  for (std::size_t i = 0; i < m.relations().rows(); ++i) {
    std::vector<long> row;
    for (std::size_t j = 0; j < g; ++j)
      row.push_back(residue(ring.as_integer(m.relations()(i, j)), tn.modulus()));
    rels.push_back(std::move(row));
  }

  std::vector<ModuleMap> out;
  std::vector<std::size_t> images(g, 0);
  for (;;) {
    bool ok = std::all_of(rels.begin(), rels.end(), [&](const std::vector<long>& row) {
      std::size_t sum = tn.zero();
      for (std::size_t j = 0; j < g; ++j) sum = tn.add(sum, tn.scale(row[j], images[j]));
      return sum == tn.zero();
    });
    if (ok) {
      Matrix p = Matrix::from_rows(n.gens(), {});
      for (std::size_t j = 0; j < g; ++j) p.append_row(tn.lift(images[j]));
      out.emplace_back(m, n, std::move(p));
    }
    std::size_t j = 0;
    while (j < g && ++images[j] == tn.size()) images[j++] = 0;
    if (j == g) break;
  }
  return out;
}

std::size_t tensor_order_by_forms(const Presentation& m, const Presentation& n, std::size_t cap) {
  require_same(m.ring(), n.ring());
  const Ring& ring = m.ring();
  const long e = ring.is_finite() ? to_long(ring.modulus())
                                  : std::gcd(module_modulus(m), module_modulus(n));
  const std::size_t gm = m.gens(), gn = n.gens(), cells = gm * gn;
  double candidates = std::pow(static_cast<double>(e), static_cast<double>(cells));
  if (candidates > static_cast<double>(cap))
    throw Error(ErrorCode::TooLarge, "too many candidate bilinear forms");

  auto rows_of = [&](const Presentation& p) {
    std::vector<std::vector<long>> out;
    for (std::size_t i = 0; i < p.relations().rows(); ++i) {
      std::vector<long> row;
      for (std::size_t j = 0; j < p.gens(); ++j)
        row.push_back(residue(ring.as_integer(p.relations()(i, j)), e));
      out.push_back(std::move(row));
    }
    return out;
  };
  const auto rm = rows_of(m), rn = rows_of(n);

  std::size_t count = 0;
  std::vector<long> b(cells, 0);  // b[j * gn + k] = form(e_j, f_k)
  for (;;) {
    bool ok = true;
    for (const auto& r : rm)
      for (std::size_t k = 0; k < gn && ok; ++k) {
        long s = 0;
        for (std::size_t j = 0; j < gm; ++j) s = (s + r[j] * b[j * gn + k]) % e;
        ok = s == 0;
      }
    for (const auto& r : rn)
      for (std::size_t j = 0; j < gm && ok; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < gn; ++k) s = (s + r[k] * b[j * gn + k]) % e;
        ok = s == 0;
      }
    if (ok) ++count;
    std::size_t c = 0;
    while (c < cells && ++b[c] == e) b[c++] = 0;
    if (c == cells) break;
  }
  return count;
}

bool coreduced_ring_is_reduced_check(const Ring& ring) {
  if (!ring.is_finite())
    throw Error(ErrorCode::UnsupportedRing, "finite rings are ZZ/n here");
  const long n = to_long(ring.modulus());
  auto principal = [&](long a) {
    std::set<long> out;
    for (long r = 0; r < n; ++r) out.insert(a * r % n);
    return out;
  };
  bool coreduced = true;
  for (long a = 0; a < n && coreduced; ++a) coreduced = principal(a) == principal(a * a % n);
  if (!coreduced) return true;
  for (long a = 1; a < n; ++a)
    if (a * a % n == 0) return false;
  return true;
}

}  // namespace redcor::oracle
