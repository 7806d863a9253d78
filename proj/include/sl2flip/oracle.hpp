#pragma once

// Brute-force reference computations. Each one avoids the algorithm it
// checks: exhaustive scans, determinantal divisors, explicit counting.
// Shared by the test suite and the `verify` sweep.

#include "sl2flip/git.hpp"
#include "sl2flip/lattice.hpp"
#include "sl2flip/semigroup.hpp"
#include "sl2flip/toricgeom.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sl2flip::oracle {

using lattice::IntVec;

/// Indecomposable nonzero elements of s inside [lo, hi]^2 (per coordinate).
std::vector<IntVec> hilbert_basis_in_box(const semigroup::AffineSemigroup& s, IntVec lo, IntVec hi);

/// Minimal generators of M+ by the box [0, m + aq]^2 scan.
std::vector<IntVec> mplus_hilbert_basis(std::int64_t p, std::int64_t q, std::int64_t m);

/// Direct constraint check qj <= pi, i, j >= 0, m | i - j.
bool mplus_contains(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t i, std::int64_t j);

/// Number of k >= 0 with k <= i + j over a base point of M+, 0 elsewhere.
std::size_t mtilde_fiber(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t i, std::int64_t j);

/// Full box scan in lexicographic order.
std::vector<IntVec> diophantine_scan(std::span<const std::int64_t> weights, std::int64_t target,
                                     const lattice::Congruence& congruence, std::span<const std::int64_t> box);

/// Invariant factors as quotients of gcds of k x k minors.
std::vector<lattice::Integer> invariant_factors(const lattice::IntMatrix& a);

/// Cofactor expansion (small matrices only).
lattice::Integer cofactor_determinant(const lattice::IntMatrix& a);

/// gcd of the maximal minors of the ray matrix.
std::int64_t multiplicity(const toric::Cone& c);

/// Order |det| and the unique c in [0, n) with n | ray1 + c ray0.
toric::CyclicSingularity classify_2d(const toric::Cone& c);

/// Order of the stabilizer in C* x mu_a, counted over roots of unity;
/// nullopt when the stabilizer is infinite.
std::optional<std::int64_t> stabilizer_order(const git::DiagonalAction& act, std::span<const std::size_t> support);

}  // namespace sl2flip::oracle
