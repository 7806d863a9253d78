// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact.

#include "sl2flip/git.hpp"
#include "sl2flip/semigroup.hpp"
#include "sl2flip/sl2core.hpp"
#include "sl2flip/toricgeom.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace sl2flip;
using lattice::IntVec;
using lattice::make_rational;
using lattice::Rational;

namespace {

struct Instance {
  std::int64_t p, q, m;
};

// q <= q_max, m <= m_max, reduced p/q, optionally with height 1.
std::vector<Instance> sweep(std::int64_t q_max, std::int64_t m_max, bool with_height_one) {
  std::vector<Instance> out;
  for (std::int64_t q = 1; q <= q_max; ++q)
    for (std::int64_t p = 1; p <= q; ++p)
      if (lattice::gcd(p, q) == 1 && (p < q || with_height_one))
        for (std::int64_t m = 1; m <= m_max; ++m) out.push_back({p, q, m});
  return out;
}

// p < q <= 6, a <= 3, m = a(q - p): the b = 1 family.
std::vector<Instance> toric_sweep() {
  std::vector<Instance> out;
  for (std::int64_t q = 2; q <= 6; ++q)
    for (std::int64_t p = 1; p < q; ++p)
      if (lattice::gcd(p, q) == 1)
        for (std::int64_t a = 1; a <= 3; ++a) out.push_back({p, q, a * (q - p)});
  return out;
}

std::string tag(const Instance& I) {
  return std::to_string(I.p) + "/" + std::to_string(I.q) + " m=" + std::to_string(I.m);
}

// A criterion returns an empty string on success, the first failure otherwise.
using Criterion = std::function<std::string()>;

std::string closed_form_bases() {
  for (const auto& I : toric_sweep()) {
    const std::int64_t a = I.m / (I.q - I.p);
    std::vector<IntVec> expected;
    for (std::int64_t t = 0; t <= a * I.p; ++t) expected.push_back({I.m + t, t});
    if (semigroup::hilbert_basis(semigroup::make_Mplus(I.p, I.q, I.m)).generators != expected) return tag(I);
  }
  return "";
}

std::string u_invariants() {
  for (const auto& I : sweep(5, 4, true)) {
    const auto M = semigroup::make_Mplus(I.p, I.q, I.m);
    std::vector<IntVec> members;
    for (std::int64_t i = 0; i <= 20; ++i)
      for (std::int64_t j = 0; j <= 20; ++j)
        if (semigroup::contains(M, IntVec{i, j})) members.push_back({i, j});
    if (git::u_invariant_exponents(I.p, I.q, I.m, 20) != members) return tag(I);
  }
  return "";
}

std::string class_groups() {
  for (const auto& I : sweep(5, 4, true)) {
    const auto P = core::derive_params(I.p, I.q, I.m);
    const auto cl = core::class_group(P);
    const std::vector<lattice::Integer> torsion =
        P.a == 1 ? std::vector<lattice::Integer>{} : std::vector<lattice::Integer>{lattice::Integer(P.a)};
    for (const auto* g : {&cl.via_splus, &cl.via_sminus})
      if (g->free_rank() != 1 || g->torsion() != torsion) return tag(I) + ": " + g->to_string();
  }
  return "";
}

std::string canonical_and_intersections() {
  for (const auto& I : sweep(5, 4, true)) {
    const auto P = core::derive_params(I.p, I.q, I.m);
    const auto K = core::canonical_class(P);
    const auto cl = core::class_group(P);
    if (K.coefficient != -(1 + P.b)) return tag(I) + ": K coefficient";
    if (!(K.element == cl.via_splus.combine(IntVec{-(1 + P.b), 0}))) return tag(I) + ": K class";
    if (P.height_one()) continue;
    const auto n = core::intersection_numbers(P);
    const std::int64_t num = (1 + P.b) * P.k;
    if (n.K_dot_Cminus != -make_rational(num, P.a * P.q * P.q)) return tag(I) + ": K.C-";
    if (n.K_dot_Cplus != make_rational(num, P.a * P.p * P.p)) return tag(I) + ": K.C+";
  }
  const struct {
    Instance I;
    Rational minus, plus;
  } spots[] = {{{1, 2, 1}, Rational(-1, 2), Rational(2)},
               {{1, 3, 1}, Rational(-1, 3), Rational(3)},
               {{2, 3, 2}, Rational(-1, 9), Rational(1, 4)}};
  for (const auto& s : spots) {
    const auto n = core::intersection_numbers(core::derive_params(s.I.p, s.I.q, s.I.m));
    if (n.K_dot_Cminus != s.minus || n.K_dot_Cplus != s.plus)
      return tag(s.I) + ": got (" + n.K_dot_Cminus.get_str() + ", " + n.K_dot_Cplus.get_str() + ")";
  }
  return "";
}

std::string toric_bridge() {
  std::vector<Instance> cases = toric_sweep();
  for (const auto& I : sweep(5, 4, false))
    if (core::is_toric(core::derive_params(I.p, I.q, I.m))) cases.push_back(I);
  for (const auto& I : cases) {
    const auto P = core::derive_params(I.p, I.q, I.m);
    const toric::Cone sigma = toric::sigma_of(P.p, P.q, P.a);
    const auto subs = toric::flip_subdivisions(sigma);
    const auto& v = sigma.rays;
    const toric::Cone w34 = toric::make_cone({v[2], v[3]});
    const toric::Cone w12 = toric::make_cone({v[0], v[1]});
    const Rational plus = toric::wall_curve_K_degree(subs.wall_v3v4, w34) / toric::multiplicity(w34);
    const Rational minus = toric::wall_curve_K_degree(subs.wall_v1v2, w12) / toric::multiplicity(w12);
    if (plus != make_rational(2 * (P.q - P.p), P.a * P.p * P.p)) return tag(I) + ": sigma+ wall";
    if (minus != make_rational(2 * (P.p - P.q), P.a * P.q * P.q)) return tag(I) + ": sigma- wall";
    const auto n = core::intersection_numbers(P);
    if (plus != n.K_dot_Cplus || minus != n.K_dot_Cminus) return tag(I) + ": closed form";
  }
  const std::vector<IntVec> r{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  const toric::Fan conifold{{toric::make_cone({r[0], r[1], r[2]}), toric::make_cone({r[1], r[2], r[3]})}};
  if (toric::wall_curve_K_degree(conifold, toric::make_cone({r[1], r[2]})) != 0) return "conifold wall";
  return "";
}

std::string git_loci() {
  using Pattern = std::vector<std::size_t>;
  for (const auto& I : sweep(5, 4, false)) {
    const auto P = core::derive_params(I.p, I.q, I.m);
    const auto act = git::standard_action(P.p, P.q, P.m);
    const auto K = core::canonical_class(P);
    const auto budget = git::default_budget(P.p, P.q, P.m);
    const struct {
      git::GroupCharacter chi;
      std::vector<Pattern> expected;
    } cases[] = {{K.chi_plus, {{git::kX1, git::kX2}}},
                 {K.chi_minus, {{git::kX3, git::kX4}}},
                 {git::GroupCharacter{0, 0}, {}}};
    for (const auto& c : cases) {
      const auto r = git::semistable_locus(act, c.chi, P.b, budget);
      if (!r.undecided.empty()) return tag(I) + ": undecided patterns";
      if (r.unstable_vanishing != c.expected) return tag(I) + ": unstable locus";
      for (const auto& pr : r.patterns)
        if (pr.witness &&
            !(git::monomial_character(act, pr.witness->exponents) == git::scale(c.chi, pr.witness->power, P.a)))
          return tag(I) + ": witness character";
    }
  }
  return "";
}

std::string free_action() {
  for (const auto& I : sweep(5, 4, false)) {
    const auto act = git::standard_action(I.p, I.q, I.m);
    for (unsigned mask = 0; mask < 32; ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < 5; ++i)
        if (mask & (1U << i)) support.push_back(i);
      const bool left = (mask & (1U << git::kX1)) || (mask & (1U << git::kX2));
      const bool right = (mask & (1U << git::kX3)) || (mask & (1U << git::kX4));
      if (!left || !right) continue;
      const auto g = git::stabilizer_of_support(act, support);
      if (!g.order() || *g.order() != 1) return tag(I) + ": " + git::pattern_to_string(support);
    }
  }
  return "";
}

std::string smoothness_ladder() {
  for (const auto& I : sweep(5, 4, true)) {
    const auto P = core::derive_params(I.p, I.q, I.m);
    if (core::is_toric(P) != (P.b == 1)) return tag(I) + ": toricity";
    if (core::is_smooth(P) != (P.b == 0)) return tag(I) + ": smoothness";
    if (P.height_one()) continue;
    const auto slices = core::slice_surfaces(P);
    if (slices.prime->singularity.order != P.b) return tag(I) + ": S' order";
    if (slices.prime->singularity.smooth() != (P.b == 1)) return tag(I) + ": E' along C";
    if (slices.plus.singularity.smooth() != (P.a * P.p == 1)) return tag(I) + ": E+ fiber";
  }
  for (const auto& I : toric_sweep()) {
    const auto t = core::toric_flip(core::derive_params(I.p, I.q, I.m));
    for (const auto& c : t.star.max_cones)
      if (toric::multiplicity(c) != 1) return tag(I) + ": star fan";
  }
  return "";
}

std::string degeneration() {
  for (const auto& I : sweep(5, 4, false)) {
    const auto d = core::toric_degeneration(core::derive_params(I.p, I.q, I.m));
    if (!d.relation_holds) return tag(I) + ": sigma0 relation";
    if (d.gaifullin_sigma0 || !d.gaifullin_sigma) return tag(I) + ": criterion";
    for (const auto& f : d.fibers)
      if (f.count != static_cast<std::size_t>(f.base[0] + f.base[1] + 1)) return tag(I) + ": fiber";
  }
  return "";
}

std::string colored_cones() {
  for (const auto& I : sweep(5, 4, false)) {
    const auto d = core::colored_cones(core::derive_params(I.p, I.q, I.m));
    if (!(d.rho_in_valuation_cone && d.colors_contained && d.strictly_convex && d.rho_plus_interior &&
          d.prime_colorless))
      return tag(I) + ": containment";
    if (!d.growth_law) return tag(I) + ": color growth";
  }
  return "";
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"closed-form Hilbert bases of M+", closed_form_bases},
      {"U-invariants equal M+ membership", u_invariants},
      {"class group Z + Z/a via [S+] and [S-]", class_groups},
      {"canonical class and intersection numbers", canonical_and_intersections},
      {"toric bridge and conifold wall", toric_bridge},
      {"GIT loci with verified witnesses", git_loci},
      {"free action on U+ and U-", free_action},
      {"smoothness and toricity ladder", smoothness_ladder},
      {"toric degeneration", degeneration},
      {"colored cones and color growth", colored_cones},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    std::string detail;
    try {
      detail = run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      std::printf("criterion %2d PASS  %s\n", index, name);
    } else {
      ++failed;
      std::printf("criterion %2d FAIL  %s (%s)\n", index, name, detail.c_str());
    }
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
