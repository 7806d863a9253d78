// The oracles are only useful if they are right on hand-checked cases.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2flip/oracle.hpp"

using namespace sl2flip;
using lattice::IntVec;

TEST_CASE("box Hilbert basis of M+") {
  CHECK(oracle::mplus_hilbert_basis(1, 3, 2) == std::vector<IntVec>{{2, 0}, {3, 1}});
  CHECK(oracle::mplus_hilbert_basis(1, 1, 1) == std::vector<IntVec>{{1, 0}, {1, 1}});
  CHECK(oracle::mplus_contains(1, 3, 2, 3, 1));
  CHECK_FALSE(oracle::mplus_contains(1, 3, 2, 2, 1));
}

TEST_CASE("fiber oracle") {
  CHECK(oracle::mtilde_fiber(1, 3, 2, 2, 0) == 3);
  CHECK(oracle::mtilde_fiber(1, 3, 2, 1, 1) == 0);
}

TEST_CASE("determinantal divisors") {
  const lattice::IntMatrix a{{2, 4}, {6, 8}};
  CHECK(oracle::invariant_factors(a) == std::vector<lattice::Integer>{2, 4});
  CHECK(oracle::cofactor_determinant(a) == -8);
  CHECK(oracle::invariant_factors(lattice::IntMatrix{{0, 0}, {0, 0}}) == std::vector<lattice::Integer>{0, 0});
}

TEST_CASE("multiplicity and normal form oracles") {
  CHECK(oracle::multiplicity(toric::make_cone({{1, 0, 0}, {-1, 0, 2}})) == 2);
  CHECK(oracle::classify_2d(toric::make_cone({{1, 0}, {-1, 2}})) == toric::CyclicSingularity{2, 1});
  CHECK(oracle::classify_2d(toric::make_cone({{1, 0}, {0, 1}})) == toric::CyclicSingularity{1, 0});
  // 1/5(1,2): ray1 + 2 ray0 = (0, 5).
  CHECK(oracle::classify_2d(toric::make_cone({{1, 0}, {-2, 5}})) == toric::CyclicSingularity{5, 2});
}

TEST_CASE("stabilizer counting") {
  const auto act = git::standard_action(2, 3, 4);
  const std::size_t y0[] = {git::kY0};
  CHECK(oracle::stabilizer_order(act, y0) == 4);
  CHECK_FALSE(oracle::stabilizer_order(act, std::span<const std::size_t>{}).has_value());
}

TEST_CASE("diophantine scan") {
  const IntVec w{1, 2}, box{3, 3};
  CHECK(oracle::diophantine_scan(w, 4, lattice::Congruence{}, box) == std::vector<IntVec>{{0, 2}, {2, 1}});
}
