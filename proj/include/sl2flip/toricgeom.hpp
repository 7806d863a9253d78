#pragma once

// Cones and small simplicial fans in rank 2 and 3: multiplicities, the
// normal form of 2-dimensional cyclic quotient singularities, wall-curve
// degrees of the canonical class, and the cones attached to E_{h,m}.

#include "sl2flip/lattice.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sl2flip::toric {

using lattice::IntVec;
using lattice::Rational;

struct Cone {
  std::vector<IntVec> rays;  // primitive, pairwise non-proportional

  std::size_t dim() const { return rays.empty() ? 0 : rays.front().size(); }
};

/// Normalizes every ray to its primitive generator and rejects zero,
/// proportional or ragged input.
Cone make_cone(std::vector<IntVec> rays);

struct Fan {
  std::vector<Cone> max_cones;

  /// Distinct rays in order of first appearance.
  std::vector<IntVec> rays() const;
};

/// Type 1/n(1, c): order n >= 1 and twist 0 <= c < n.
struct CyclicSingularity {
  std::int64_t order = 1;
  std::int64_t twist = 0;

  bool smooth() const { return order == 1; }
  friend bool operator==(const CyclicSingularity&, const CyclicSingularity&) = default;
};

/// Index of the sublattice spanned by the rays inside the saturated lattice
/// of their span. Throws std::invalid_argument if the rays are dependent.
std::int64_t multiplicity(const Cone& c);

/// Unimodular normal form ray0 -> (1,0), ray1 -> (-c, n).
CyclicSingularity classify_2d(const Cone& c);

/// Dual of a pointed 2-dimensional cone: the normals n0, n1 with n0 . ray0 = 0,
/// n0 . ray1 > 0 and n1 . ray1 = 0, n1 . ray0 > 0.
Cone dual_cone_2d(const Cone& c);

/// sigma spanned by v1 = e1, v2 = -e1 + aq e3, v3 = e2, v4 = -e2 + ap e3.
Cone sigma_of(std::int64_t p, std::int64_t q, std::int64_t a);
/// v5 = e3.
IntVec sigma_center();

/// Star subdivision of a 4-ray 3-dimensional cone at an interior vector.
Fan star_subdivide(const Cone& sigma, std::span<const std::int64_t> center);
Fan star_subdivide_at_v5(const Cone& sigma);

struct FlipSubdivisions {
  Fan wall_v1v2;  // cones {v3,v1,v2}, {v4,v1,v2}
  Fan wall_v3v4;  // cones {v1,v3,v4}, {v2,v3,v4}
};

/// The two triangulations of sigma (rays ordered v1..v4 as in sigma_of)
/// without new rays.
FlipSubdivisions flip_subdivisions(const Cone& sigma);

/// Maximal cones pairwise meet in a common face (exhaustive check for the
/// small rank-3 fans in scope).
bool is_face_compatible(const Fan& f);

/// K . V(wall) on the toric variety of f, with -K the sum of all toric
/// prime divisors. Throws std::invalid_argument unless exactly two maximal
/// cones contain the wall.
Rational wall_curve_K_degree(const Fan& f, const Cone& wall);

/// True iff n1 = n2 and n3 = n4, after checking n1 v1 + n2 v2 = n3 v3 + n4 v4
/// with positive coefficients (std::invalid_argument otherwise).
bool gaifullin_criterion(std::span<const IntVec> rays, std::span<const std::int64_t> coefficients);

/// v1 = (0,0,1), v2 = (1,1,-1), v3 = (0,1,0), v4 = (p,-q,0).
Cone sigma0_of(std::int64_t p, std::int64_t q);

std::string to_string(const Cone& c);

}  // namespace sl2flip::toric
