// Linked against the mutation build, where the sign of K.C+ is flipped.
// The sweep has to notice.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2flip/sl2core.hpp"
#include "sl2flip/verify.hpp"

#include <algorithm>

using namespace sl2flip;

TEST_CASE("the mutated build reports the flipped sign") {
  CHECK(core::intersection_numbers(core::derive_params(1, 2, 1)).K_dot_Cplus == -2);
}

TEST_CASE("verify rejects the mutated build on the toric bridge") {
  const auto result = verify::run_sweep(verify::SweepOptions{4, 3, 20});
  CHECK_FALSE(result.passed());
  const auto failed = verify::failures(result);
  CHECK(std::any_of(failed.begin(), failed.end(),
                    [](const std::string& f) { return f.find("toric_bridge") != std::string::npos; }));
  for (const auto& inst : result.instances)
    for (const auto& prop : inst.properties)
      if (prop.name == "toric_bridge") CHECK_FALSE(prop.passed);
}
