#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redcor/module.hpp"

namespace redcor {

/// Cochain complex on the degree interval [lo, hi]. differential(p) maps
/// term(p) to term(p + 1); outside the interval terms are zero.
class ChainComplex {
 public:
  ChainComplex(Ring ring, int lo, std::vector<Presentation> terms,
               std::vector<ModuleMap> differentials);

  const Ring& ring() const { return ring_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
  Presentation term(int p) const;
  ModuleMap differential(int p) const;
  /// d^{p+1} ∘ d^p = 0 for every p.
  bool is_complex() const;

 private:
  Ring ring_;
  int lo_;
  std::vector<Presentation> terms_;
  std::vector<ModuleMap> differentials_;  // d^lo .. d^{hi-1}
};

class ChainMap {
 public:
  /// components[p - source.lo()] : source.term(p) -> target.term(p). Both
  /// complexes must share the degree interval.
  ChainMap(ChainComplex source, ChainComplex target, std::vector<ModuleMap> components);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const ModuleMap& component(int p) const;
  /// component ∘ d_src = d_tgt ∘ component in every degree.
  bool commutes() const;

 private:
  ChainComplex source_, target_;
  std::vector<ModuleMap> components_;
};

/// K(R; r) in degrees -n..0; the degree -p term has basis the p-subsets S of
/// {0..n-1} in lexicographic order and d(e_S) = Σ_t (-1)^{#{s in S : s > t}} r_t e_{S \ t}.
ChainComplex koszul_complex(const Ring& ring, const std::vector<Elem>& r);
/// p-subsets of {0..n-1} in the basis order used by koszul_complex.
std::vector<std::vector<std::size_t>> koszul_basis(std::size_t n, std::size_t p);

/// ker d^p / im d^{p-1}, presented on kernel representatives in term(p).
/// Throws OutOfRange outside [lo, hi].
Subquotient cohomology(const ChainComplex& c, int p);
/// Map induced by f on H^p.
ModuleMap induced_map(const ChainMap& f, int p);

/// K(R; r^j) -> K(R; r^i), on e_S multiplication by Π_{t in S} r_t^{j-i}.
ChainMap koszul_transition(const Ring& ring, const std::vector<Elem>& r, unsigned i, unsigned j);

struct ProZeroVerdict {
  bool pro_zero = false;  // ProZeroUpTo(i_bound) when true, otherwise Inconclusive
  unsigned i_bound = 0, j_bound = 0;
  /// (i, p) -> least j in [i, j_bound] whose induced map H^p(r^j) -> H^p(r^i) is zero.
  std::map<std::pair<unsigned, int>, unsigned> witnesses;
  unsigned failed_i = 0;
  int failed_p = 0;
};

ProZeroVerdict weak_proregularity_check(const Ring& ring, const std::vector<Elem>& r,
                                        unsigned i_bound = 4, unsigned j_bound = 8);

/// F_L -> ... -> F_1 -> F_0 with F_i in degree -i, F_0 = R^g, F_1 given by
/// the nonzero relation rows, higher terms by iterated syzygies.
ChainComplex free_resolution(const Presentation& m, unsigned length);
/// Complex with terms C^p ⊗ N and differentials d ⊗ id.
ChainComplex tensor_complex(const ChainComplex& c, const Presentation& n);
/// Tor_i(M, N) = H^{-i}(free_resolution(M) ⊗ N).
Presentation tor(const Presentation& m, const Presentation& n, unsigned i);

struct StrongIdempotenceVerdict {
  bool holds = false;  // HoldsUpTo(bound); otherwise FailsAt(failed_at)
  unsigned bound = 0;
  unsigned failed_at = 0;
};

StrongIdempotenceVerdict strongly_idempotent_check(const Ideal& ideal, unsigned i_bound = 4);

}  // namespace redcor
