#pragma once

// Invariants of E_{h,m} computed from (p, q, m): Cox presentation, orbits,
// class group, canonical class, the flip E- <- E -> E+ with its slice
// surfaces and intersection numbers, colored cones, and the toric
// degeneration.

#include "sl2flip/git.hpp"
#include "sl2flip/lattice.hpp"
#include "sl2flip/semigroup.hpp"
#include "sl2flip/toricgeom.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sl2flip::core {

using lattice::IntVec;
using lattice::Rational;

struct SL2Params {
  std::int64_t p = 1, q = 1, m = 1;
  std::int64_t k = 1, a = 1, b = 0;
  /// Set when the input fraction was not in lowest terms.
  std::optional<std::pair<std::int64_t, std::int64_t>> unreduced_input;

  bool height_one() const { return p == q; }
};

/// Reduces p/q to lowest terms. Throws std::invalid_argument on
/// nonpositive input or p > q.
SL2Params derive_params(std::int64_t p, std::int64_t q, std::int64_t m);

struct CoxPresentation {
  std::int64_t b = 0;
  git::DiagonalAction action;
  std::int64_t finite_shift = 0;
  std::size_t ambient_dim = 5;

  std::string equation() const;  // "Y0^2 = X1*X4 - X2*X3", "1 = ..." for b = 0
};

CoxPresentation cox_presentation(const SL2Params& P);
bool is_toric(const SL2Params& P);
bool is_smooth(const SL2Params& P);

struct Orbit {
  std::string label;   // "SL(2)/U_4"
  int dimension = 0;
};

std::vector<Orbit> orbit_structure(const SL2Params& P);

struct ClassGroupData {
  lattice::FinAbGroup via_splus;   // generators [D], [S+]; relation ap[D] + m[S+]
  lattice::FinAbGroup via_sminus;  // generators [D], [S-]; relation -aq[D] + m[S-]
  lattice::GroupElement D, S_plus, S_minus;
  git::GroupCharacter chi_D, chi_Splus, chi_Sminus;
};

ClassGroupData class_group(const SL2Params& P);

struct CanonicalClass {
  std::int64_t coefficient = -1;  // K = coefficient * [D]
  lattice::GroupElement element;
  git::GroupCharacter chi;        // t^(-k+2p-2q) part of the adjunction
  git::GroupCharacter chi_prime;  // t^(q-p)
  git::GroupCharacter chi_plus;   // -(1+b) chi_D
  git::GroupCharacter chi_minus;
};

CanonicalClass canonical_class(const SL2Params& P);

struct IntersectionNumbers {
  Rational K_dot_Cminus;
  Rational K_dot_Cplus;
};

/// Throws std::domain_error for height 1.
IntersectionNumbers intersection_numbers(const SL2Params& P);

struct SliceSurface {
  std::string name;
  semigroup::AffineSemigroup semigroup;
  semigroup::HilbertBasis basis;
  std::vector<IntVec> lattice_basis;  // congruence lattice
  toric::Cone cone;                   // semigroup cone in lattice coordinates
  toric::Cone dual;                   // cone of the surface in the dual lattice
  toric::CyclicSingularity singularity;
  std::int64_t expected_order = 1;
};

/// Slice surface for a pointed rank-2 semigroup.
SliceSurface make_slice(const semigroup::AffineSemigroup& s, std::int64_t expected_order);

struct SliceSurfaces {
  SliceSurface plus, minus;
  std::optional<SliceSurface> prime;  // absent for height 1
};

SliceSurfaces slice_surfaces(const SL2Params& P);

struct VarietySummary {
  std::string name;
  std::string description;
  std::vector<std::string> orbits;
  bool smooth = false;
  std::optional<toric::CyclicSingularity> transverse;  // along the flipping curve
};

struct ToricFlipData {
  toric::Cone sigma;
  toric::Fan star;
  toric::Fan e_plus;   // subdivision with positive normalized wall degree
  toric::Fan e_minus;
  toric::Cone wall_plus, wall_minus;
  Rational raw_plus, raw_minus;
  std::int64_t mult_plus = 1, mult_minus = 1;
  Rational normalized_plus, normalized_minus;
  bool star_smooth = false;
};

/// Toric model of the flip (b = 1 only).
ToricFlipData toric_flip(const SL2Params& P);

struct FlipReport {
  SL2Params params;
  git::GroupCharacter chi_trivial, chi_plus, chi_minus;
  git::SemistableReport ss_trivial, ss_plus, ss_minus;
  IntersectionNumbers numbers;
  IntersectionNumbers numbers_via_slices;
  SliceSurfaces slices;
  VarietySummary E, E_minus, E_plus, E_prime;
  std::optional<ToricFlipData> toric;
  std::vector<std::string> proj_descriptions;
};

FlipReport flip_report(const SL2Params& P, const git::SearchBudget& budget);
FlipReport flip_report(const SL2Params& P);

struct ColoredCone {
  std::string variety;
  std::vector<IntVec> generators;
  std::vector<std::string> colors;
};

struct ColoredConeData {
  std::int64_t lattice_modulus = 1;  // Lambda = {(i, j) : m | i - j}
  IntVec rho_plus{1, 0}, rho_minus{0, 1};
  IntVec rho, rho_prime;
  std::vector<ColoredCone> cones;  // E, E-, E+, E'

  bool rho_in_valuation_cone = false;
  bool colors_contained = false;
  bool strictly_convex = false;
  bool rho_plus_interior = false;
  bool prime_colorless = false;
  bool growth_law = false;

  bool all_ok() const;
};

ColoredConeData colored_cones(const SL2Params& P);

struct FiberCheck {
  IntVec base;
  std::size_t count = 0;
  std::size_t expected = 0;
};

struct Degeneration {
  semigroup::AffineSemigroup mtilde;
  semigroup::AffineSemigroup mtilde_verbatim;
  toric::Cone sigma0;
  bool relation_holds = false;
  bool gaifullin_sigma0 = true;
  bool gaifullin_sigma = false;
  std::vector<FiberCheck> fibers;           // over the M+ Hilbert basis
  std::vector<FiberCheck> fibers_verbatim;  // same points, coordinates swapped
  std::vector<FiberCheck> fibers_off;       // lattice points outside M+

  bool fibers_ok() const;
};

Degeneration toric_degeneration(const SL2Params& P);

struct EmbeddingEntry {
  IntVec exponents;     // (i, j)
  std::int64_t degree;  // i + j, module V_{i+j}
};

std::vector<EmbeddingEntry> embedding_data(const SL2Params& P);

/// Notes on the places where the computed data departs from the printed
/// statements, each present only when its trigger holds.
std::vector<std::string> discrepancy_notes(const SL2Params& P);

}  // namespace sl2flip::core
