#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2flip/oracle.hpp"
#include "sl2flip/toricgeom.hpp"
#include "support.hpp"

using namespace sl2flip;
using namespace sl2flip::toric;
using lattice::IntVec;
using lattice::Rational;
using sl2test::uniform;

namespace {

struct ToricCase {
  std::int64_t p, q, a;
};

// b = 1 instances: m = a(q - p), so k = q - p.
std::vector<ToricCase> toric_sweep() {
  std::vector<ToricCase> out;
  for (std::int64_t q = 2; q <= 6; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (lattice::gcd(p, q) == 1)
        for (std::int64_t a = 1; a <= 3; ++a) out.push_back({p, q, a});
  return out;
}

Cone transformed(const Cone& c, const std::vector<std::vector<std::int64_t>>& u) {
  std::vector<IntVec> rays;
  for (const auto& r : c.rays) rays.push_back(sl2test::apply(u, r));
  return make_cone(rays);
}

}  // namespace

TEST_CASE("make_cone normalizes and rejects bad input") {
  CHECK(make_cone({{2, 0}, {0, 3}}).rays == std::vector<IntVec>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(make_cone({{1, 0}, {2, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_cone({{0, 0}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_cone({{1, 0}, {1, 0, 0}}), std::invalid_argument);
}

TEST_CASE("multiplicity examples") {
  CHECK(multiplicity(make_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(multiplicity(make_cone({{1, 0, 0}, {-1, 0, 2}})) == 2);
  for (std::int64_t ap = 1; ap <= 6; ++ap) {
    const Cone c = make_cone({{0, 1, 0}, {0, -1, ap}});
    CHECK(multiplicity(c) == ap);
    CHECK(oracle::multiplicity(c) == ap);
  }
}

TEST_CASE("classify_2d examples") {
  CHECK(classify_2d(make_cone({{1, 0}, {0, 1}})) == CyclicSingularity{1, 0});
  CHECK(classify_2d(make_cone({{1, 0}, {-1, 2}})) == CyclicSingularity{2, 1});
  // Cone of M'(1,3,1) in the character lattice; its dual has order b = 2.
  const Cone mprime = make_cone({{1, 3}, {-1, -1}});
  CHECK(multiplicity(mprime) == 2);
  CHECK(classify_2d(dual_cone_2d(mprime)).order == 2);
}

TEST_CASE("classify_2d agrees with the divisibility oracle") {
  for (int trial = 0; trial < 300; ++trial) {
    IntVec r0{uniform(-7, 7), uniform(-7, 7)}, r1{uniform(-7, 7), uniform(-7, 7)};
    if (r0[0] * r1[1] - r0[1] * r1[0] == 0) continue;
    const Cone c = make_cone({r0, r1});
    CHECK(classify_2d(c) == oracle::classify_2d(c));
  }
}

TEST_CASE("classify_2d is invariant under unimodular transforms") {
  for (int trial = 0; trial < 300; ++trial) {
    IntVec r0{uniform(-6, 6), uniform(-6, 6)}, r1{uniform(-6, 6), uniform(-6, 6)};
    if (r0[0] * r1[1] - r0[1] * r1[0] == 0) continue;
    const Cone c = make_cone({r0, r1});
    const auto u = sl2test::random_unimodular_2d();
    CHECK(classify_2d(transformed(c, u)) == classify_2d(c));
  }
}

TEST_CASE("dual cone pairs correctly") {
  const Cone c = make_cone({{1, 0}, {-1, 2}});
  const Cone d = dual_cone_2d(c);
  CHECK(lattice::dot(d.rays[0], c.rays[0]) == 0);
  CHECK(lattice::dot(d.rays[0], c.rays[1]) > 0);
  CHECK(lattice::dot(d.rays[1], c.rays[1]) == 0);
  CHECK(lattice::dot(d.rays[1], c.rays[0]) > 0);
}

TEST_CASE("wall degrees on the (1,2,1) fan") {
  const Cone sigma = sigma_of(1, 2, 1);
  const auto subs = flip_subdivisions(sigma);
  const auto& v = sigma.rays;
  const Cone wall34 = make_cone({v[2], v[3]});
  const Cone wall12 = make_cone({v[0], v[1]});
  CHECK(wall_curve_K_degree(subs.wall_v3v4, wall34) == 2);
  CHECK(wall_curve_K_degree(subs.wall_v1v2, wall12) == -1);
  CHECK(multiplicity(wall12) == 2);
  CHECK(wall_curve_K_degree(subs.wall_v1v2, wall12) / multiplicity(wall12) == Rational(-1, 2));
}

TEST_CASE("conifold wall has K-degree 0 in any coordinates") {
  const std::vector<IntVec> rays{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  auto fan_of = [](const std::vector<IntVec>& r) {
    return Fan{{make_cone({r[0], r[1], r[2]}), make_cone({r[1], r[2], r[3]})}};
  };
  CHECK(wall_curve_K_degree(fan_of(rays), make_cone({rays[1], rays[2]})) == 0);
  CHECK(gaifullin_criterion(std::vector<IntVec>{rays[1], rays[2], rays[0], rays[3]}, IntVec{1, 1, 1, 1}));
  for (int trial = 0; trial < 30; ++trial) {
    // Unimodular change of coordinates in the first two axes, then a shear by e3.
    const auto u = sl2test::random_unimodular_2d();
    const std::int64_t s = uniform(-3, 3), t = uniform(-3, 3);
    std::vector<IntVec> moved;
    for (const auto& r : rays) {
      const IntVec xy = sl2test::apply(u, IntVec{r[0], r[1]});
      moved.push_back({xy[0] + s * r[2], xy[1] + t * r[2], r[2]});
    }
    CHECK(wall_curve_K_degree(fan_of(moved), make_cone({moved[1], moved[2]})) == 0);
  }
}

TEST_CASE("toric sweep: star fan smooth, wall signs and normalization bridge") {
  for (const auto& c : toric_sweep()) {
    CAPTURE(c.p);
    CAPTURE(c.q);
    CAPTURE(c.a);
    const Cone sigma = sigma_of(c.p, c.q, c.a);
    const Fan star = star_subdivide_at_v5(sigma);
    CHECK(star.max_cones.size() == 4);
    CHECK(is_face_compatible(star));
    for (const auto& cone : star.max_cones) CHECK(multiplicity(cone) == 1);

    const auto subs = flip_subdivisions(sigma);
    CHECK(is_face_compatible(subs.wall_v1v2));
    CHECK(is_face_compatible(subs.wall_v3v4));
    const auto& v = sigma.rays;
    const Cone wall_plus = make_cone({v[2], v[3]});
    const Cone wall_minus = make_cone({v[0], v[1]});
    const Rational raw_plus = wall_curve_K_degree(subs.wall_v3v4, wall_plus);
    const Rational raw_minus = wall_curve_K_degree(subs.wall_v1v2, wall_minus);
    CHECK(raw_plus > 0);
    CHECK(raw_minus < 0);
    CHECK(raw_plus / multiplicity(wall_plus) == lattice::make_rational(2 * (c.q - c.p), c.a * c.p * c.p));
    CHECK(raw_minus / multiplicity(wall_minus) == lattice::make_rational(2 * (c.p - c.q), c.a * c.q * c.q));
    CHECK(multiplicity(wall_plus) == oracle::multiplicity(wall_plus));
  }
}

TEST_CASE("overlapping cones are not face compatible") {
  const Fan bad{{make_cone({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), make_cone({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}})}};
  CHECK_FALSE(is_face_compatible(bad));
}

TEST_CASE("four-ray quasihomogeneity criterion") {
  for (const auto& c : toric_sweep()) {
    const Cone sigma = sigma_of(c.p, c.q, c.a);
    CHECK(gaifullin_criterion(sigma.rays, IntVec{c.p, c.p, c.q, c.q}));
    const Cone s0 = sigma0_of(c.p, c.q);
    CHECK_FALSE(gaifullin_criterion(s0.rays, IntVec{c.p, c.p, c.p + c.q, 1}));
  }
  // (1,3): (1,1,0) = 4 v3 + v4.
  const Cone s0 = sigma0_of(1, 3);
  CHECK(s0.rays[0][0] + s0.rays[1][0] == 4 * s0.rays[2][0] + s0.rays[3][0]);
  CHECK_THROWS_AS(gaifullin_criterion(s0.rays, IntVec{1, 1, 1, 1}), std::invalid_argument);
}
