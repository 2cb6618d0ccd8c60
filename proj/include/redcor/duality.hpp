#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redcor/torsion.hpp"

namespace redcor {

/// Hom(Λ_I M, N) -> Hom(M, Γ_I N) with Λ_I M = R/I ⊗ M and Γ_I N = Hom(R/I, N).
struct AdjunctionReport {
  bool coreduced_m = false, reduced_n = false;
  std::vector<std::string> left, right;  // invariant strings of both Hom modules
  std::string left_label, right_label;   // describe() of both Hom modules
  MapAnalysis currying;
  bool invariants_agree = false;  // PIR corroboration; true elsewhere
  bool conclusion = false;
};

/// Throws PredicateFailed unless M is I-coreduced and N is I-reduced.
AdjunctionReport gm_adjunction_check(const Presentation& m, const Presentation& n,
                                     const Ideal& ideal);

/// For u: M' -> M between I-coreduced modules and v: N -> N' between
/// I-reduced ones, currying commutes with φ ↦ v ∘ φ ∘ (1 ⊗ u) and
/// ψ ↦ Γ(v) ∘ ψ ∘ u, checked on every generator of Hom(Λ_I M, N).
bool gm_naturality_check(const ModuleMap& u, const ModuleMap& v, const Ideal& ideal);

struct MgmReport {
  bool reduced = false, coreduced = false, torsion = false;
  Tristate complete = Tristate::Unknown;
  bool in_d = false, in_e = false;  // torsion ∩ reduced, complete ∩ coreduced
  // Reduced clause: Γ_I(M) is I-complete and I-coreduced.
  std::optional<bool> gamma_complete, gamma_coreduced;
  // Coreduced clause: Λ_I(M) is I-torsion and I-reduced.
  std::optional<bool> lambda_torsion, lambda_reduced;
  // Round trips Λ(Γ(M)) -> M on 𝔇 and Γ(Λ(M)) -> M on 𝔈.
  std::optional<MapAnalysis> lambda_gamma, gamma_lambda;
  std::vector<std::string> skipped;
  bool all_pass = false;
};

MgmReport mgm_check(const Presentation& m, const Ideal& ideal);

/// Finite-length model of D = Hom(-, E).
struct MatlisDual {
  enum class Kind { Character, Linear };
  Kind kind = Kind::Character;
  Presentation source = Presentation::zero(Ring::integers());
  Presentation module = Presentation::zero(Ring::integers());
  // Character: SNF change of generators and the cyclic orders kept.
  Matrix v, v_inverse;
  std::vector<std::size_t> components;  // indices into the Smith diagonal
  std::vector<Integer> orders;
  // Linear: standard monomial basis of the source.
  std::vector<std::pair<std::size_t, Exponents>> basis;
};

/// Throws UnsupportedQuery for infinite-length modules.
MatlisDual matlis_dual(const Presentation& m);
/// D(f): D(N) -> D(M) for f: M -> N, with dm = D(M) and dn = D(N).
ModuleMap dual_map(const MatlisDual& dm, const MatlisDual& dn, const ModuleMap& f);
/// Coordinates of an element of a finite-dimensional module in its standard basis.
std::vector<Rational> standard_coordinates(const MatlisDual& d, std::span<const Elem> v);

struct TransferRow {
  std::string ideal;
  bool reduced_m = false, coreduced_dual = false;
  bool coreduced_m = false, reduced_dual = false;
  bool holds = false;
};

struct TransferReport {
  std::vector<std::string> dual_invariants;
  std::vector<TransferRow> rows;
  bool holds = false;
};

/// The biconditionals for I, plus every ideal of a finite base ring.
TransferReport matlis_transfer_check(const Presentation& m, const Ideal& ideal);
TransferReport matlis_transfer_check(const Presentation& m, const std::vector<Ideal>& ideals);

struct SquareReport {
  /// Γ_I(D M) <- D(Λ_I M) from D(π); present when M is I-coreduced.
  std::optional<MapAnalysis> gamma_of_dual;
  /// Λ_I(D M) -> D(Γ_I M) from D(ι); present when M is I-reduced.
  std::optional<MapAnalysis> lambda_of_dual;
  std::vector<std::string> gamma_dual_side, dual_lambda_side, lambda_dual_side, dual_gamma_side;
  bool all_pass = false;
};

/// Throws PredicateFailed when M is neither I-reduced nor I-coreduced.
SquareReport duality_square_check(const Presentation& m, const Ideal& ideal);

struct SemigroupReport {
  MapAnalysis hh, tt, th, ht;  // HH -> H, TT -> T, TH -> H, HT -> T
  std::vector<std::string> h_side, t_side;
  bool all_pass = false;
};

SemigroupReport semigroup_table_check(const Presentation& m, const Ideal& ideal);

struct YonedaReport {
  Presentation value;  // Γ_I(R/I)
  MapAnalysis canonical;  // R/I -> Γ_I(R/I)
  bool companion_zero = false;  // I · (R/I) = 0
  std::vector<std::string> invariants;
  bool all_pass = false;
};

YonedaReport yoneda_gamma_nat(const Ideal& ideal);

/// For idempotent I: Γ_I(N) ≅ Hom(Λ_I R, N) and Λ_I(N) ≅ Hom(Γ_I R, N).
struct IdempotentHomReport {
  MapAnalysis gamma_side, lambda_side;
  bool all_pass = false;
};

/// Throws PredicateFailed unless I = I^2.
IdempotentHomReport idempotent_hom_check(const Presentation& n, const Ideal& ideal);

}  // namespace redcor
