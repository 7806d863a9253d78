#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sl2flip/git.hpp"
#include "sl2flip/oracle.hpp"
#include "sl2flip/semigroup.hpp"
#include "sl2flip/sl2core.hpp"
#include "support.hpp"

#include <algorithm>

using namespace sl2flip;
using namespace sl2flip::git;
using lattice::IntVec;
using Pattern = std::vector<std::size_t>;

namespace {

bool meets_both_sides(const Pattern& support) {
  auto has = [&](std::size_t c) { return std::find(support.begin(), support.end(), c) != support.end(); };
  return (has(kX1) || has(kX2)) && (has(kX3) || has(kX4));
}

std::vector<Pattern> all_supports() {
  std::vector<Pattern> out;
  for (unsigned mask = 0; mask < 32; ++mask) {
    Pattern s;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1U << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

void check_witnesses(const DiagonalAction& act, const GroupCharacter& chi, const SemistableReport& r) {
  for (const auto& pr : r.patterns) {
    if (!pr.witness) continue;
    const auto& w = *pr.witness;
    CHECK(monomial_character(act, w.exponents) == scale(chi, w.power, act.finite_order));
    for (std::size_t c : pr.closure) CHECK(w.exponents[c] == 0);
  }
}

Pattern mirrored(const Pattern& p) {
  static const std::size_t swap[5] = {kY0, kX3, kX4, kX1, kX2};
  Pattern out;
  for (std::size_t c : p) out.push_back(swap[c]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("standard action weights") {
  const auto act = standard_action(1, 3, 1);
  CHECK(act.torus_weights == IntVec{1, -1, -1, 3, 3});
  CHECK(act.finite_order == 1);
  CHECK(monomial_character(act, IntVec{1, 0, 0, 0, 0}) == GroupCharacter{1, 0});
  CHECK(monomial_character(act, IntVec{0, 0, 0, 0, 0}) == GroupCharacter{0, 0});
  // X2 carries t^-p zeta^-1.
  const auto act2 = standard_action(2, 3, 4);
  CHECK(monomial_character(act2, IntVec{0, 0, 1, 0, 0}) == make_character(-2, -1, 4));
  CHECK(act2.finite_order == 4);
}

TEST_CASE("finite shift is zero exactly when gcd(a, k) = 1") {
  for (const auto& I : sl2test::sweep(7, 12, false)) {
    const std::int64_t k = lattice::gcd(I.q - I.p, I.m), a = I.m / k;
    const std::int64_t c0 = finite_shift(I.p, I.q, I.m);
    CHECK((c0 == 0) == (lattice::gcd(a, k) == 1));
    CHECK(lattice::gcd(I.q * c0 - k, a) == 1);
  }
  // (1,5,8): k = 4, a = 2; the unshifted weights would not act faithfully.
  CHECK(finite_shift(1, 5, 8) == 1);
}

TEST_CASE("the corrected action is faithful and matches the counting oracle") {
  for (const auto& I : sl2test::sweep(5, 8, false)) {
    CAPTURE(I.p);
    CAPTURE(I.q);
    CAPTURE(I.m);
    const auto act = standard_action(I.p, I.q, I.m);
    const Pattern everything{kY0, kX1, kX2, kX3, kX4};
    CHECK(stabilizer_of_support(act, everything).is_trivial());
    for (const auto& s : all_supports()) {
      const auto group = stabilizer_of_support(act, s);
      const auto counted = oracle::stabilizer_order(act, s);
      if (counted) {
        REQUIRE(group.order());
        CHECK(*group.order() == *counted);
      } else {
        CHECK_FALSE(group.order());
      }
    }
  }
}

TEST_CASE("invariants of the corrected action recover the U-invariants") {
  // Invariant monomials Y0^e X1^i X3^j (X2 = X4 = 0 slice) with weight 0
  // project onto (i, j) in M+: the categorical quotient route.
  for (const auto& I : sl2test::sweep(5, 6, false)) {
    CAPTURE(I.p);
    CAPTURE(I.q);
    CAPTURE(I.m);
    const auto act = standard_action(I.p, I.q, I.m);
    const auto M = semigroup::make_Mplus(I.p, I.q, I.m);
    for (std::int64_t i = 0; i <= 8; ++i)
      for (std::int64_t j = 0; j <= 8; ++j) {
        bool invariant = false;
        for (std::int64_t e = 0; e <= 8 * I.q && !invariant; ++e)
          invariant = monomial_character(act, IntVec{e, i, 0, j, 0}) == GroupCharacter{0, 0};
        CHECK(invariant == semigroup::contains(M, IntVec{i, j}));
      }
  }
}

TEST_CASE("stabilizer examples") {
  const auto act = standard_action(2, 3, 4);
  const auto y0 = stabilizer_of_support(act, Pattern{kY0});
  REQUIRE(y0.order());
  CHECK(*y0.order() == 4);
  const auto empty = stabilizer_of_support(act, Pattern{});
  CHECK(empty.free_rank() == 1);
  CHECK(empty.to_string() == "Z + Z/4");
}

TEST_CASE("free action on U+ and U-, and monotone stabilizers") {
  for (const auto& I : sl2test::sweep(5, 4, false)) {
    const auto act = standard_action(I.p, I.q, I.m);
    for (const auto& s : all_supports()) {
      const auto g = stabilizer_of_support(act, s);
      if (meets_both_sides(s)) CHECK(g.is_trivial());
      for (std::size_t extra = 0; extra < 5; ++extra) {
        if (std::find(s.begin(), s.end(), extra) != s.end()) continue;
        Pattern bigger = s;
        bigger.push_back(extra);
        std::sort(bigger.begin(), bigger.end());
        const auto h = stabilizer_of_support(act, bigger);
        if (g.order()) {
          REQUIRE(h.order());
          CHECK(*g.order() % *h.order() == 0);
        }
      }
    }
  }
}

TEST_CASE("semistable loci on the sweep") {
  for (const auto& I : sl2test::sweep(5, 4, false)) {
    CAPTURE(I.p);
    CAPTURE(I.q);
    CAPTURE(I.m);
    const auto P = core::derive_params(I.p, I.q, I.m);
    const auto act = standard_action(P.p, P.q, P.m);
    const auto canon = core::canonical_class(P);
    const auto budget = default_budget(P.p, P.q, P.m);

    const auto plus = semistable_locus(act, canon.chi_plus, P.b, budget);
    const auto minus = semistable_locus(act, canon.chi_minus, P.b, budget);
    const auto trivial = semistable_locus(act, GroupCharacter{0, 0}, P.b, budget);
    CHECK(plus.unstable_vanishing == std::vector<Pattern>{{kX1, kX2}});
    CHECK(minus.unstable_vanishing == std::vector<Pattern>{{kX3, kX4}});
    CHECK(trivial.unstable_vanishing.empty());
    CHECK(plus.undecided.empty());
    CHECK(minus.undecided.empty());
    CHECK(trivial.undecided.empty());
    check_witnesses(act, canon.chi_plus, plus);
    check_witnesses(act, canon.chi_minus, minus);
    check_witnesses(act, GroupCharacter{0, 0}, trivial);

    // Mirror: chi- behaves on (X3, X4) as chi+ does on (X1, X2).
    REQUIRE(plus.patterns.size() == minus.patterns.size());
    for (const auto& pr : plus.patterns) {
      const auto it = std::find_if(minus.patterns.begin(), minus.patterns.end(),
                                   [&](const PatternResult& r) { return r.pattern == mirrored(pr.pattern); });
      REQUIRE(it != minus.patterns.end());
      CHECK(it->status == pr.status);
    }
  }
}

TEST_CASE("witness X1^(q-p+k) for (1,2,1)") {
  const auto P = core::derive_params(1, 2, 1);
  const auto act = standard_action(1, 2, 1);
  const auto chi = core::canonical_class(P).chi_plus;
  CHECK(monomial_character(act, IntVec{0, 2, 0, 0, 0}) == scale(chi, 1, 1));
}

TEST_CASE("a tiny budget yields undecided patterns, never a silent answer") {
  const auto P = core::derive_params(2, 5, 3);
  const auto act = standard_action(P.p, P.q, P.m);
  const auto chi = core::canonical_class(P).chi_plus;
  const auto r = semistable_locus(act, chi, P.b, SearchBudget{1, 1});
  for (const auto& pr : r.patterns)
    if (pr.status == PatternStatus::kUndecided)
      CHECK(std::find(r.undecided.begin(), r.undecided.end(), pr.pattern) != r.undecided.end());
  CHECK_FALSE(r.undecided.empty());
  CHECK(r.budget.n_max == 1);
}

TEST_CASE("height one: patterns killing X1 X4 and X2 X3 miss H_0") {
  const auto act = standard_action(1, 1, 3);
  const auto r = semistable_locus(act, GroupCharacter{0, 0}, 0, default_budget(1, 1, 3));
  for (const auto& pr : r.patterns) {
    // X1 X4 = X2 X3 = 0 contradicts 1 = X1 X4 - X2 X3.
    auto has = [&](std::size_t c) { return std::find(pr.pattern.begin(), pr.pattern.end(), c) != pr.pattern.end(); };
    const bool empty = (has(kX1) || has(kX4)) && (has(kX2) || has(kX3));
    CHECK((pr.status == PatternStatus::kEmpty) == empty);
  }
}

TEST_CASE("U-invariant exponents equal M+ membership") {
  CHECK(u_invariant_exponents(1, 2, 1, 0) == std::vector<IntVec>{{0, 0}});
  std::vector<IntVec> expected;
  for (std::int64_t i = 0; i <= 6; ++i)
    for (std::int64_t j = 0; 2 * j <= i; ++j) expected.push_back({i, j});
  std::sort(expected.begin(), expected.end());
  CHECK(u_invariant_exponents(1, 2, 1, 6) == expected);

  for (const auto& I : sl2test::sweep(5, 4)) {
    std::vector<IntVec> members;
    const auto M = semigroup::make_Mplus(I.p, I.q, I.m);
    for (std::int64_t i = 0; i <= 20; ++i)
      for (std::int64_t j = 0; j <= 20; ++j)
        if (semigroup::contains(M, IntVec{i, j})) members.push_back({i, j});
    CHECK(u_invariant_exponents(I.p, I.q, I.m, 20) == members);
  }
}
