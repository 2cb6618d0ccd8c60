#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redcor/module.hpp"

namespace redcor {

/// U * A * V = D with U, V invertible over ZZ or ZZ/n and D diagonal with
/// d1 | d2 | ... . Over ZZ/n each nonzero diagonal entry is a divisor of n.
struct SmithForm {
  Matrix U, V, D;
  /// Nonzero diagonal entries in order, units included.
  std::vector<Elem> invariants;
  /// Generators minus nonzero diagonal entries.
  std::size_t free_rank = 0;
};

SmithForm smith_form(const Ring& ring, const Matrix& a);
/// Smith form of the relation matrix. Throws UnsupportedRing over polynomial rings.
SmithForm smith_invariants(const Presentation& m);

/// Canonical isomorphism type over ZZ or ZZ/n: the non-unit invariant
/// factors followed by one entry per free summand (0 over ZZ, n over ZZ/n).
std::vector<Integer> module_invariants(const Presentation& m);
bool isomorphic(const Presentation& a, const Presentation& b);
/// Number of elements; nullopt when infinite. PIR base rings only.
std::optional<Integer> module_order(const Presentation& m);

/// k-basis of a module over a polynomial ring as (generator, monomial)
/// pairs standard for the relation Gröbner basis; nullopt when the module
/// is infinite-dimensional. Throws TooLarge past `cap` basis elements.
std::optional<std::vector<std::pair<std::size_t, Exponents>>> standard_basis(
    const Presentation& m, std::size_t cap = 4096);

/// Short isomorphism-type label: "Z/2+Z/3", "Z^2", "0", "dim 3", "gens 2".
std::string describe(const Presentation& m);
/// Invariant strings as used in reports: module_invariants over PIRs,
/// otherwise a single descriptive entry.
std::vector<std::string> invariant_strings(const Presentation& m);

}  // namespace redcor
