#pragma once

#include <cstdint>
#include <vector>

#include "redcor/module.hpp"

namespace redcor::oracle {

/// Exhaustive element table of a finite module over ZZ or ZZ/n.
/// Elements are coordinate tuples in (Z/N)^g, with N * M = 0; each coset of
/// the relation subgroup is stored once, by its smallest code.
class FiniteModuleTable {
 public:
  /// Throws InfiniteModule if M is infinite, TooLarge past `size_cap`
  /// elements, UnsupportedRing over polynomial rings.
  explicit FiniteModuleTable(const Presentation& m, std::size_t size_cap = 4096);

  const Presentation& module() const { return module_; }
  long modulus() const { return modulus_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<long>& element(std::size_t i) const { return elements_[i]; }

  std::size_t zero() const { return 0; }
  std::size_t index_of(std::span<const long> coords) const;
  std::size_t index_of_vector(std::span<const Elem> v) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t scale(long r, std::size_t a) const;
  Vector lift(std::size_t a) const;

  /// Indices of the submodule generated by the given elements, sorted.
  std::vector<std::size_t> closure(const std::vector<std::size_t>& gens) const;

 private:
  std::size_t code(std::span<const long> coords) const;

  Presentation module_;
  long modulus_ = 1;
  std::vector<std::vector<long>> elements_;
  std::vector<std::uint32_t> label_;  // code -> element index
};

/// Enumerates M; size_cap bounds |M|.
FiniteModuleTable enumerate_module(const Presentation& m, std::size_t size_cap = 4096);

/// Residues mod `modulus` of the ideal, by closing its generators under
/// addition and multiplication by ring elements.
std::vector<long> ideal_elements(const Ideal& ideal, long modulus);

/// For every a in I: {m : am = 0} = {m : a^2 m = 0}.
bool elementwise_reduced_check(const Presentation& m, const Ideal& ideal);
/// For every a in I: aM = a^2 M.
bool elementwise_coreduced_check(const Presentation& m, const Ideal& ideal);

/// {m : Im = 0} and I·M as sorted index sets of `table`.
std::vector<std::size_t> annihilated_elements(const FiniteModuleTable& table, const Ideal& ideal);
std::vector<std::size_t> product_elements(const FiniteModuleTable& table, const Ideal& ideal);
/// Image of f: L -> table.module() as a sorted index set.
std::vector<std::size_t> image_elements(const FiniteModuleTable& table, const ModuleMap& f);

/// Every assignment of generator images that respects the relations.
/// Throws TooLarge when |N|^g exceeds `cap`.
std::vector<ModuleMap> brute_force_homs(const Presentation& m, const Presentation& n,
                                        std::size_t cap = 4096);

/// |M ⊗ N| counted as the number of bilinear forms M x N -> Z/e for an
/// exponent e killing both modules. Throws TooLarge past `cap` candidates.
std::size_t tensor_order_by_forms(const Presentation& m, const Presentation& n,
                                  std::size_t cap = 1 << 20);

/// If aR = a^2 R for all a, then R has no nonzero a with a^2 = 0.
/// Throws UnsupportedRing unless R is ZZ/n.
bool coreduced_ring_is_reduced_check(const Ring& ring);

}  // namespace redcor::oracle
