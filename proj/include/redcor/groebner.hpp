#pragma once

#include <cstddef>
#include <vector>

#include "redcor/ring.hpp"

namespace redcor::groebner {

/// Element of a free module R^w over a polynomial ring, stored densely by
/// position. Module terms are ordered position-over-term with position 0
/// the largest, so any prefix of positions is eliminated first.
struct ModuleVector {
  std::vector<Polynomial> comp;

  bool is_zero() const;
  /// Index of the first nonzero position; comp.size() when zero.
  std::size_t lead_position() const;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t pairs_skipped_coprime = 0;
  std::size_t reductions_to_zero = 0;
};

/// Reduced Gröbner basis of a submodule of R^w (w = width). All basis
/// elements are monic and no lead term divides another lead term
/// at the same position.
class ModuleBasis {
 public:
  ModuleBasis(const Ring& ring, std::size_t width, std::vector<ModuleVector> generators);

  const Ring& ring() const { return ring_; }
  std::size_t width() const { return width_; }
  const std::vector<ModuleVector>& elements() const { return basis_; }
  const BuchbergerStats& stats() const { return stats_; }

  /// Full reduction of every term at positions [0, stop); positions >= stop
  /// are left as the reduction leaves them. Returns (remainder, tail).
  /// With stop == width this is the ordinary normal form.
  ModuleVector reduce(ModuleVector f, std::size_t stop) const;
  ModuleVector normal_form(ModuleVector f) const { return reduce(std::move(f), width_); }

 private:
  void buchberger(std::vector<ModuleVector> generators);
  void interreduce();
  ModuleVector reduce_with(ModuleVector f, std::size_t stop, std::size_t skip) const;
  const Exponents& lead_monomial(std::size_t i) const;

  Ring ring_;
  std::size_t width_;
  std::vector<ModuleVector> basis_;
  BuchbergerStats stats_;
};

ModuleVector make_monic(const Ring& ring, ModuleVector v);

}  // namespace redcor::groebner
