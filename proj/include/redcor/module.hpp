#pragma once

#include <memory>
#include <optional>
#include <string>

#include "redcor/ideal.hpp"
#include "redcor/linear.hpp"

namespace redcor {

/// M = R^g / rowspan(A). Elements are row vectors in R^g; maps act on
/// generator rows from the right. g = 0 is the zero module.
class Presentation {
 public:
  Presentation(const Ring& ring, std::size_t gens, Matrix relations);

  static Presentation free(const Ring& ring, std::size_t gens);
  static Presentation zero(const Ring& ring) { return free(ring, 0); }
  /// R/I on one generator, relations the basis of I.
  static Presentation cyclic(const Ideal& ideal);
  /// R/(d1) + ... + R/(dk), diagonal relations (zero entries give free summands).
  static Presentation diagonal(const Ring& ring, const std::vector<Elem>& entries);

  const Ring& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const Matrix& relations() const { return relations_; }

  /// Reducer for the relation rowspan; computed once and shared by copies.
  const RowSpan& relation_span() const;
  Vector reduce(std::span<const Elem> v) const { return relation_span().reduce(v); }
  bool is_zero_element(std::span<const Elem> v) const { return relation_span().contains(v); }
  bool equal_elements(std::span<const Elem> a, std::span<const Elem> b) const;
  /// True iff every generator vanishes.
  bool is_zero() const;
  Vector generator(std::size_t i) const;

 private:
  struct Cache;
  Ring ring_;
  std::size_t gens_;
  Matrix relations_;
  std::shared_ptr<Cache> cache_;
};

/// Morphism source -> target sending generator i to row i of `matrix`.
/// `certificate` X satisfies A_src * matrix = X * A_tgt.
class ModuleMap {
 public:
  /// Throws NotWellDefined when some relation does not map into the target relations.
  ModuleMap(Presentation source, Presentation target, Matrix matrix);

  static ModuleMap identity(const Presentation& m);
  static ModuleMap zero(const Presentation& source, const Presentation& target);

  const Presentation& source() const { return source_; }
  const Presentation& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  const Matrix& certificate() const { return certificate_; }
  Vector apply(std::span<const Elem> v) const;

 private:
  Presentation source_, target_;
  Matrix matrix_, certificate_;
};

/// Tries to build the map; nullopt instead of throwing when ill-defined.
std::optional<ModuleMap> try_module_map(const Presentation& source, const Presentation& target,
                                        const Matrix& matrix);
ModuleMap compose(const ModuleMap& first, const ModuleMap& second);
/// Equal as maps: every generator image agrees modulo target relations.
bool maps_equal(const ModuleMap& a, const ModuleMap& b);

struct MapAnalysis {
  bool well_defined = false;
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};

MapAnalysis map_analyze(const ModuleMap& map);
/// Generators (rows in R^{g_src}) of the kernel of the map.
Matrix kernel_generators(const ModuleMap& map);

/// A submodule of M as (presentation, injective inclusion).
struct Submodule {
  Presentation module;
  ModuleMap include;
};

/// (S + T + rel M) / (T + rel M) presented on the rows of S; the rows that
/// survive presentation pruning are returned as representatives in R^{g_M}.
struct Subquotient {
  Presentation module;
  Matrix representatives;
};

Subquotient subquotient(const Presentation& ambient, const Matrix& numerator,
                        const Matrix& denominator);
Submodule submodule(const Presentation& ambient, const Matrix& generators);
Presentation quotient(const Presentation& ambient, const Matrix& generators);
/// Rows of `inner` lie in rowspan(outer) + rel M.
bool submodule_contains(const Presentation& ambient, const Matrix& outer, const Matrix& inner);
bool same_submodule(const Presentation& ambient, const Matrix& a, const Matrix& b);

/// f: X -> M with image inside the injective ι: S -> M gives X -> S.
std::optional<ModuleMap> factor_through_injection(const ModuleMap& f, const ModuleMap& include);
/// A map M -> N that kills `generators` induces M / <generators> -> N.
std::optional<ModuleMap> descend_to_quotient(const ModuleMap& f, const Presentation& quotient);

/// Hom_R(M, N) as a finitely presented module. Generator j corresponds
/// to the map realize(j); the row `generators()[j]` is its matrix flattened
/// row-major (g_M x g_N).
class HomModule {
 public:
  HomModule(Presentation module, Presentation source, Presentation target, Matrix generators);

  const Presentation& module() const { return module_; }
  const Presentation& source() const { return source_; }
  const Presentation& target() const { return target_; }
  const Matrix& generators() const { return generators_; }

  ModuleMap realize(std::size_t j) const;
  /// Coordinates of a well-defined map matrix in terms of the generators.
  Vector coordinates(const Matrix& map_matrix) const;
  /// The map given by a coordinate vector.
  ModuleMap map_of(std::span<const Elem> coordinates) const;

 private:
  Presentation module_, source_, target_;
  Matrix generators_;
  std::shared_ptr<const RowSpan> solver_;
};

HomModule hom_module(const Presentation& m, const Presentation& n);
/// Generator (i, j) -> index i * g_N + j.
Presentation tensor_product(const Presentation& m, const Presentation& n);
/// f (x) g on block presentations.
ModuleMap tensor_maps(const ModuleMap& f, const ModuleMap& g);
Presentation direct_sum(const Presentation& m, const Presentation& n);

/// (0 :_M I) = {m : a m = 0 for all a in I}.
Submodule colon_annihilator(const Presentation& m, const Ideal& ideal);

struct ScalarSubmodule {
  Presentation submodule;  // I M
  ModuleMap include;
  Presentation quotient;  // M / I M, same generators as M
  ModuleMap project;
};

ScalarSubmodule scalar_submodule(const Presentation& m, const Ideal& ideal);
/// Generating rows of I M inside R^{g_M}.
Matrix scalar_generators(const Presentation& m, const Ideal& ideal);

/// Multiplication by a on M.
ModuleMap multiplication_map(const Presentation& m, const Elem& a);

}  // namespace redcor
