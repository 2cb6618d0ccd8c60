#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redcor/module.hpp"

namespace redcor {

struct TowerStage {
  unsigned exponent = 0;
  std::vector<std::string> invariants;
};

/// Γ_I(M) as the stabilized colon submodule (0 :_M I^k).
struct GammaResult {
  Presentation module;
  ModuleMap include;
  unsigned exponent = 0;
  std::vector<TowerStage> tower;  // (0 :_M I^j) for j = 1..exponent
};

/// Λ_I(M) = M / I^k M when I^k M = I^{k+1} M for some k <= bound.
struct LambdaResult {
  bool stabilized = false;
  unsigned exponent = 0;  // k when stabilized, else the bound
  std::optional<Presentation> module;
  std::optional<ModuleMap> project;
  std::vector<TowerStage> tower;  // M / I^j M for the exponents visited
};

GammaResult gamma(const Presentation& m, const Ideal& ideal, unsigned bound = 64);
LambdaResult lambda(const Presentation& m, const Ideal& ideal, unsigned bound = 64);

/// (0 :_M I) = (0 :_M I^2).
bool is_I_reduced(const Presentation& m, const Ideal& ideal);
/// I M = I^2 M.
bool is_I_coreduced(const Presentation& m, const Ideal& ideal);
bool is_torsion(const Presentation& m, const Ideal& ideal, unsigned bound = 64);

enum class Tristate { False, True, Unknown };
std::string to_string(Tristate t);

struct CompletenessVerdict {
  Tristate value = Tristate::Unknown;
  unsigned bound = 0;
};

CompletenessVerdict is_complete(const Presentation& m, const Ideal& ideal, unsigned bound = 64);

struct RepresentabilityReport {
  bool reduced = false;
  bool coreduced = false;
  /// Hom(R/I, M) -> Γ_I(M), evaluation at 1; present when M is I-reduced.
  std::optional<MapAnalysis> gamma_check;
  /// R/I ⊗ M -> Λ_I(M); present when M is I-coreduced.
  std::optional<MapAnalysis> lambda_check;
  std::vector<std::string> hom_side, gamma_side, tensor_side, lambda_side;
};

/// Throws PredicateFailed when M is neither I-reduced nor I-coreduced.
RepresentabilityReport representability_check(const Presentation& m, const Ideal& ideal);

/// Hom(R/I, M) -> M, evaluation at the generator.
ModuleMap hom_evaluation(const HomModule& hom);

/// The principal ideals of a finite ring ZZ/n, one per divisor of n.
std::vector<Ideal> cyclic_ideals(const Ring& ring);
/// Reduced (coreduced) with respect to every ideal. Finite base rings only;
/// otherwise UnsupportedQuery. The list overload checks the given ideals.
bool is_globally_reduced(const Presentation& m);
bool is_globally_coreduced(const Presentation& m);
bool is_reduced_for(const Presentation& m, const std::vector<Ideal>& ideals);
bool is_coreduced_for(const Presentation& m, const std::vector<Ideal>& ideals);

}  // namespace redcor
