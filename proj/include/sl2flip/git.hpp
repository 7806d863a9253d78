#pragma once

// Diagonal actions of G = C* x mu_a on the coordinates (Y0, X1, X2, X3, X4)
// of the hypersurface H_b : Y0^b = X1 X4 - X2 X3, characters, monomial
// certificates of (semi)stability and stabilizers of coordinate supports.

#include "sl2flip/lattice.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sl2flip::git {

using lattice::IntVec;

inline constexpr std::size_t kY0 = 0, kX1 = 1, kX2 = 2, kX3 = 3, kX4 = 4;
inline constexpr std::array<const char*, 5> kCoordinateNames{"Y0", "X1", "X2", "X3", "X4"};

struct DiagonalAction {
  IntVec torus_weights;
  std::int64_t finite_order = 1;
  IntVec finite_weights;  // reduced mod finite_order
};

DiagonalAction make_action(IntVec torus_weights, std::int64_t finite_order, IntVec finite_weights);

struct GroupCharacter {
  std::int64_t torus = 0;
  std::int64_t finite = 0;  // reduced mod the finite order of the action

  friend bool operator==(const GroupCharacter&, const GroupCharacter&) = default;
};

GroupCharacter make_character(std::int64_t torus, std::int64_t finite, std::int64_t finite_order);
GroupCharacter scale(const GroupCharacter& chi, std::int64_t n, std::int64_t finite_order);
GroupCharacter add(const GroupCharacter& x, const GroupCharacter& y, std::int64_t finite_order);

/// Smallest c0 >= 0 with gcd(q c0 - k, a) = 1. It is 0 exactly when
/// gcd(a, k) = 1; otherwise the mu_a weights below are shifted by c0 so
/// that C* x mu_a acts with the right invariants and faithfully.
std::int64_t finite_shift(std::int64_t p, std::int64_t q, std::int64_t m);

/// Torus weights (k, -p, -p, q, q); mu_a weights (c0, b c0 - 1, b c0 - 1, 1, 1).
DiagonalAction standard_action(std::int64_t p, std::int64_t q, std::int64_t m);

GroupCharacter monomial_character(const DiagonalAction& act, std::span<const std::int64_t> exponents);

struct SearchBudget {
  std::int64_t n_max = 1;  // largest power of the linearization tried
  std::int64_t box = 1;    // per-coordinate exponent bound
};

/// n_max = 2(p+q+k), box = 4(p+q+k).
SearchBudget default_budget(std::int64_t p, std::int64_t q, std::int64_t m);

struct Witness {
  IntVec exponents;
  std::int64_t power = 1;
};

enum class PatternStatus {
  kSemistable,  // an invariant monomial of weight n chi avoids the pattern
  kUnstable,    // weight signs rule out every such monomial
  kUndecided,   // no witness and no certificate within the budget
  kEmpty,       // no point of H_b has this vanishing pattern
};

std::string to_string(PatternStatus s);

struct PatternResult {
  std::vector<std::size_t> pattern;  // coordinates set to zero
  std::vector<std::size_t> closure;  // forced zeros on H_b
  PatternStatus status = PatternStatus::kUndecided;
  std::optional<Witness> witness;
};

struct SemistableReport {
  /// Minimal unstable vanishing patterns; empty means everything is semistable.
  std::vector<std::vector<std::size_t>> unstable_vanishing;
  std::vector<PatternResult> patterns;
  std::vector<std::vector<std::size_t>> undecided;
  SearchBudget budget;
};

/// Decides every single-coordinate and two-coordinate vanishing pattern on
/// H_b by witness search or a sign certificate.
SemistableReport semistable_locus(const DiagonalAction& act, const GroupCharacter& chi,
                                  std::int64_t relation_degree, const SearchBudget& budget);

/// Character group of the subgroup of G fixing a point whose nonzero
/// coordinates are exactly `support`.
lattice::FinAbGroup stabilizer_of_support(const DiagonalAction& act, std::span<const std::size_t> support);

/// Pairs (i, j), 0 <= i, j <= box, such that X0^(pi - qj) X1^i X3^j is
/// invariant under (t, t^-p, t^q) and mu_m with weights (0, -1, 1).
std::vector<IntVec> u_invariant_exponents(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t box);

std::string pattern_to_string(std::span<const std::size_t> pattern);

}  // namespace sl2flip::git
