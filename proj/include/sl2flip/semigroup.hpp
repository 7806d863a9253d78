#pragma once

// Affine semigroups of rank 2 and 3 cut out by integral half-spaces,
// coordinate sign conditions and congruences: membership, Hilbert bases
// (rank 2 only) and fiber counts over a rank-2 projection.

#include "sl2flip/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sl2flip::semigroup {

using lattice::IntVec;

/// modulus | covector . x
struct CongruenceConstraint {
  IntVec covector;
  std::int64_t modulus = 1;
};

struct AffineSemigroup {
  std::string name;
  std::size_t rank = 2;
  std::vector<IntVec> inequalities;  // c . x >= 0
  std::vector<CongruenceConstraint> congruences;
  std::vector<std::size_t> nonneg_coords;  // x[i] >= 0
};

struct HilbertBasis {
  std::vector<IntVec> generators;  // lexicographically sorted
};

/// Throws std::invalid_argument unless 0 < p <= q, gcd(p, q) = 1, m >= 1.
void validate_params(std::int64_t p, std::int64_t q, std::int64_t m);

/// Which reading of the M-tilde inequality to use. kCompatible projects
/// onto M+ as written (pi - qj >= 0); kVerbatim takes jp - qi >= 0 and
/// projects onto M+ only after swapping the first two coordinates.
enum class TildeConvention { kCompatible, kVerbatim };

AffineSemigroup make_Mplus(std::int64_t p, std::int64_t q, std::int64_t m);
AffineSemigroup make_Mminus(std::int64_t p, std::int64_t q, std::int64_t m);
AffineSemigroup make_Mprime(std::int64_t p, std::int64_t q, std::int64_t m);
AffineSemigroup make_Mtilde(std::int64_t p, std::int64_t q, std::int64_t m,
                            TildeConvention convention = TildeConvention::kCompatible);

bool contains(const AffineSemigroup& s, std::span<const std::int64_t> x);

/// Primitive generators of the two extremal rays of a rank-2 semigroup,
/// ordered so that det(ray0, ray1) > 0. Throws std::invalid_argument when
/// the cone is not pointed and 2-dimensional.
std::vector<IntVec> extremal_rays(const AffineSemigroup& s);

/// Smallest nonzero semigroup point on the given primitive ray of s.
IntVec minimal_ray_point(const AffineSemigroup& s, std::span<const std::int64_t> ray);

HilbertBasis hilbert_basis(const AffineSemigroup& s);

/// Basis of the congruence sublattice {x in Z^rank : all congruences hold}.
std::vector<IntVec> congruence_lattice(const AffineSemigroup& s);

/// Number of last coordinates t with (base, t) in s, for a rank-3 s.
/// Throws std::invalid_argument when the fiber is unbounded.
std::size_t fiber_count(const AffineSemigroup& s, std::span<const std::int64_t> base);

}  // namespace sl2flip::semigroup
