#include "sl2flip/sl2core.hpp"

#include <algorithm>
#include <stdexcept>

namespace sl2flip::core {

using lattice::checked_mul;

SL2Params derive_params(std::int64_t p, std::int64_t q, std::int64_t m) {
  if (p < 1 || q < 1 || m < 1) throw std::invalid_argument("p, q and m must be positive");
  if (p > q) throw std::invalid_argument("height p/q must satisfy p <= q");
  SL2Params P;
  const std::int64_t g = lattice::gcd(p, q);
  if (g != 1) P.unreduced_input = std::make_pair(p, q);
  P.p = p / g;
  P.q = q / g;
  P.m = m;
  P.k = lattice::gcd(P.q - P.p, m);
  P.a = m / P.k;
  P.b = (P.q - P.p) / P.k;
  return P;
}

std::string CoxPresentation::equation() const {
  std::string lhs = b == 0 ? "1" : b == 1 ? "Y0" : "Y0^" + std::to_string(b);
  return lhs + " = X1*X4 - X2*X3";
}

CoxPresentation cox_presentation(const SL2Params& P) {
  CoxPresentation c;
  c.b = P.b;
  c.action = git::standard_action(P.p, P.q, P.m);
  c.finite_shift = git::finite_shift(P.p, P.q, P.m);
  return c;
}

bool is_toric(const SL2Params& P) { return P.b == 1; }
bool is_smooth(const SL2Params& P) { return P.b == 0; }

std::vector<Orbit> orbit_structure(const SL2Params& P) {
  std::vector<Orbit> out{{"SL(2)/C_" + std::to_string(P.m), 3}};
  if (P.height_one()) {
    out.push_back({"SL(2)/T", 2});
  } else {
    out.push_back({"SL(2)/U_" + std::to_string(checked_mul(P.a, P.p + P.q)), 2});
    out.push_back({"{O}", 0});
  }
  return out;
}

namespace {

// Presentation with generators ([D], [X]) and the single relation
// d_coeff [D] + m [X] = 0, with the free coordinate of [D] made positive.
lattice::FinAbGroup two_generator_group(std::int64_t d_coeff, std::int64_t m) {
  lattice::FinAbGroup g = lattice::cokernel(lattice::IntMatrix{{static_cast<long>(d_coeff)}, {static_cast<long>(m)}});
  if (g.free_rank() != 1) throw std::logic_error("class group must have free rank 1");
  if (g.generator_images()[0].free[0] < 0) g = g.negate_free_coordinate(0);
  return g;
}

}  // namespace

ClassGroupData class_group(const SL2Params& P) {
  ClassGroupData out;
  out.via_splus = two_generator_group(checked_mul(P.a, P.p), P.m);
  out.via_sminus = two_generator_group(-checked_mul(P.a, P.q), P.m);
  out.D = out.via_splus.generator_images()[0];
  out.S_plus = out.via_splus.generator_images()[1];
  out.S_minus = out.via_sminus.generator_images()[1];

  const auto act = git::standard_action(P.p, P.q, P.m);
  out.chi_D = git::monomial_character(act, IntVec{1, 0, 0, 0, 0});
  out.chi_Splus = git::monomial_character(act, IntVec{0, 0, 1, 0, 0});
  out.chi_Sminus = git::monomial_character(act, IntVec{0, 0, 0, 0, 1});
  return out;
}

CanonicalClass canonical_class(const SL2Params& P) {
  CanonicalClass out;
  out.coefficient = -(1 + P.b);
  const auto cl = class_group(P);
  const IntVec coeffs{out.coefficient, 0};
  out.element = cl.via_splus.combine(coeffs);
  out.chi_plus = git::scale(cl.chi_D, out.coefficient, P.a);
  out.chi_minus = git::scale(out.chi_plus, -1, P.a);
  out.chi_prime = git::make_character(P.q - P.p, 0, P.a);
  out.chi = git::add(out.chi_plus, git::scale(out.chi_prime, -1, P.a), P.a);
  return out;
}

IntersectionNumbers intersection_numbers(const SL2Params& P) {
  if (P.height_one()) throw std::domain_error("no flip for height 1");
  const long num = static_cast<long>(checked_mul(1 + P.b, P.k));
  IntersectionNumbers out;
  out.K_dot_Cminus = Rational(-num, static_cast<unsigned long>(checked_mul(P.a, checked_mul(P.q, P.q))));
  out.K_dot_Cplus = Rational(num, static_cast<unsigned long>(checked_mul(P.a, checked_mul(P.p, P.p))));
#ifdef SL2FLIP_INJECT_K_SIGN_FAULT
  out.K_dot_Cplus = -out.K_dot_Cplus;
#endif
  out.K_dot_Cminus.canonicalize();
  out.K_dot_Cplus.canonicalize();
  return out;
}

SliceSurface make_slice(const semigroup::AffineSemigroup& s, std::int64_t expected_order) {
  SliceSurface out;
  out.name = s.name;
  out.semigroup = s;
  out.expected_order = expected_order;
  out.basis = semigroup::hilbert_basis(s);
  out.lattice_basis = semigroup::congruence_lattice(s);
  if (out.lattice_basis.size() != 2) throw std::logic_error("congruence lattice must have rank 2");

  const IntVec& b1 = out.lattice_basis[0];
  const IntVec& b2 = out.lattice_basis[1];
  const std::int64_t det = b1[0] * b2[1] - b1[1] * b2[0];
  std::vector<IntVec> rays;
  for (const auto& r : semigroup::extremal_rays(s)) {
    const IntVec u = semigroup::minimal_ray_point(s, r);
    const std::int64_t c1 = u[0] * b2[1] - u[1] * b2[0];
    const std::int64_t c2 = b1[0] * u[1] - b1[1] * u[0];
    if (c1 % det != 0 || c2 % det != 0) throw std::logic_error("ray point outside the congruence lattice");
    rays.push_back(lattice::primitive(IntVec{c1 / det, c2 / det}));
  }
  out.cone = toric::make_cone(rays);
  out.dual = toric::dual_cone_2d(out.cone);
  out.singularity = toric::classify_2d(out.dual);
  return out;
}

SliceSurfaces slice_surfaces(const SL2Params& P) {
  SliceSurfaces out{make_slice(semigroup::make_Mplus(P.p, P.q, P.m), checked_mul(P.a, P.p)),
                    make_slice(semigroup::make_Mminus(P.p, P.q, P.m), checked_mul(P.a, P.q)),
                    std::nullopt};
  if (!P.height_one()) out.prime = make_slice(semigroup::make_Mprime(P.p, P.q, P.m), P.b);
  return out;
}

ToricFlipData toric_flip(const SL2Params& P) {
  if (!is_toric(P)) throw std::domain_error("toric model needs b = 1");
  ToricFlipData t;
  t.sigma = toric::sigma_of(P.p, P.q, P.a);
  t.star = toric::star_subdivide_at_v5(t.sigma);
  t.star_smooth = std::all_of(t.star.max_cones.begin(), t.star.max_cones.end(),
                              [](const toric::Cone& c) { return toric::multiplicity(c) == 1; });
  const auto subs = toric::flip_subdivisions(t.sigma);
  const auto& v = t.sigma.rays;
  const toric::Cone wall34 = toric::make_cone({v[2], v[3]});
  const toric::Cone wall12 = toric::make_cone({v[0], v[1]});
  const Rational raw34 = toric::wall_curve_K_degree(subs.wall_v3v4, wall34);
  const Rational raw12 = toric::wall_curve_K_degree(subs.wall_v1v2, wall12);

  const bool v34_positive = raw34 > 0;
  t.e_plus = v34_positive ? subs.wall_v3v4 : subs.wall_v1v2;
  t.e_minus = v34_positive ? subs.wall_v1v2 : subs.wall_v3v4;
  t.wall_plus = v34_positive ? wall34 : wall12;
  t.wall_minus = v34_positive ? wall12 : wall34;
  t.raw_plus = v34_positive ? raw34 : raw12;
  t.raw_minus = v34_positive ? raw12 : raw34;
  t.mult_plus = toric::multiplicity(t.wall_plus);
  t.mult_minus = toric::multiplicity(t.wall_minus);
  t.normalized_plus = t.raw_plus / Rational(static_cast<long>(t.mult_plus));
  t.normalized_minus = t.raw_minus / Rational(static_cast<long>(t.mult_minus));
  t.normalized_plus.canonicalize();
  t.normalized_minus.canonicalize();
  return t;
}

FlipReport flip_report(const SL2Params& P, const git::SearchBudget& budget) {
  if (P.height_one()) throw std::domain_error("no flip for height 1");
  FlipReport r;
  r.params = P;
  const auto cox = cox_presentation(P);
  const auto canon = canonical_class(P);
  r.chi_trivial = git::GroupCharacter{0, 0};
  r.chi_plus = canon.chi_plus;
  r.chi_minus = canon.chi_minus;
  r.ss_trivial = git::semistable_locus(cox.action, r.chi_trivial, P.b, budget);
  r.ss_plus = git::semistable_locus(cox.action, r.chi_plus, P.b, budget);
  r.ss_minus = git::semistable_locus(cox.action, r.chi_minus, P.b, budget);

  r.numbers = intersection_numbers(P);
  r.slices = slice_surfaces(P);
  // K.C+ = -(1+b) D.C+, with D.C+ = -(m / ap) / (transverse order of S+).
  const long factor = static_cast<long>(1 + P.b);
  r.numbers_via_slices.K_dot_Cplus =
      Rational(factor * static_cast<long>(P.m),
               static_cast<unsigned long>(checked_mul(checked_mul(P.a, P.p), r.slices.plus.singularity.order)));
  r.numbers_via_slices.K_dot_Cminus =
      Rational(-factor * static_cast<long>(P.m),
               static_cast<unsigned long>(checked_mul(checked_mul(P.a, P.q), r.slices.minus.singularity.order)));
  r.numbers_via_slices.K_dot_Cplus.canonicalize();
  r.numbers_via_slices.K_dot_Cminus.canonicalize();

  std::vector<std::string> orbits;
  for (const auto& o : orbit_structure(P)) orbits.push_back(o.label);
  std::vector<std::string> bundle_orbits(orbits.begin(), orbits.end() - 1);

  r.E = VarietySummary{"E", "affine; isolated singular fixed point O", orbits, false, std::nullopt};
  r.E_minus = VarietySummary{"E-", "SL(2) x_B S-; -K relatively ample; O replaced by C- = SL(2)/B",
                             bundle_orbits, r.slices.minus.singularity.smooth(), r.slices.minus.singularity};
  r.E_minus.orbits.push_back("C- = SL(2)/B");
  r.E_plus = VarietySummary{"E+", "SL(2) x_B S+; K relatively ample; O replaced by C+ = SL(2)/B",
                            bundle_orbits, r.slices.plus.singularity.smooth(), r.slices.plus.singularity};
  r.E_plus.orbits.push_back("C+ = SL(2)/B");
  r.E_prime = VarietySummary{"E'", "blow-up of O; exceptional divisor D' over C = SL(2)/B; slice S'",
                             {}, r.slices.prime->singularity.smooth(), r.slices.prime->singularity};

  if (is_toric(P)) r.toric = toric_flip(P);
  r.proj_descriptions = {"E+ = Proj of the sum over n >= 0 of Gamma(E, nK)",
                         "E- = Proj of the sum over n >= 0 of Gamma(E, -nK)"};
  return r;
}

FlipReport flip_report(const SL2Params& P) { return flip_report(P, git::default_budget(P.p, P.q, P.m)); }

namespace {

std::int64_t det2(const IntVec& u, const IntVec& v) { return u[0] * v[1] - u[1] * v[0]; }

// x = alpha u + beta v; returns the signs of (alpha, beta) scaled by det(u, v).
std::pair<std::int64_t, std::int64_t> cone_coords(const IntVec& u, const IntVec& v, const IntVec& x) {
  const std::int64_t d = det2(u, v);
  const std::int64_t alpha = det2(x, v);
  const std::int64_t beta = det2(u, x);
  return d > 0 ? std::make_pair(alpha, beta) : std::make_pair(-alpha, -beta);
}

bool in_cone(const IntVec& u, const IntVec& v, const IntVec& x) {
  const auto [alpha, beta] = cone_coords(u, v, x);
  return alpha >= 0 && beta >= 0;
}

}  // namespace

bool ColoredConeData::all_ok() const {
  return rho_in_valuation_cone && colors_contained && strictly_convex && rho_plus_interior && prime_colorless &&
         growth_law;
}

ColoredConeData colored_cones(const SL2Params& P) {
  if (P.height_one()) throw std::domain_error("no flip for height 1");
  ColoredConeData d;
  d.lattice_modulus = P.m;
  d.rho = {P.p, -P.q};
  d.rho_prime = {1, -1};
  d.cones = {{"E", {d.rho, d.rho_minus}, {"rho+", "rho-"}},
             {"E-", {d.rho, d.rho_plus}, {"rho+"}},
             {"E+", {d.rho, d.rho_minus}, {"rho-"}},
             {"E'", {d.rho, d.rho_prime}, {}}};

  auto color_vector = [&](const std::string& c) { return c == "rho+" ? d.rho_plus : d.rho_minus; };

  d.rho_in_valuation_cone = d.rho[0] + d.rho[1] <= 0;
  d.colors_contained = true;
  d.strictly_convex = true;
  for (const auto& c : d.cones) {
    if (det2(c.generators[0], c.generators[1]) == 0) d.strictly_convex = false;
    for (const auto& col : c.colors)
      if (!in_cone(c.generators[0], c.generators[1], color_vector(col))) d.colors_contained = false;
  }
  const auto [alpha, beta] = cone_coords(d.cones[0].generators[0], d.cones[0].generators[1], d.rho_plus);
  d.rho_plus_interior = alpha > 0 && beta > 0;
  const auto& prime = d.cones[3];
  d.prime_colorless = prime.colors.empty() && !in_cone(prime.generators[0], prime.generators[1], d.rho_plus) &&
                      !in_cone(prime.generators[0], prime.generators[1], d.rho_minus);

  auto with = [](std::vector<std::string> s, const std::string& extra) {
    s.push_back(extra);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  };
  std::vector<std::string> colors_E = d.cones[0].colors;
  std::sort(colors_E.begin(), colors_E.end());
  // Each contraction E+- -> E adds the color that E+- lacks.
  auto opposite = [](const std::vector<std::string>& c) { return c == std::vector<std::string>{"rho+"} ? "rho-" : "rho+"; };
  d.growth_law = with(d.cones[1].colors, opposite(d.cones[1].colors)) == colors_E &&
                 with(d.cones[2].colors, opposite(d.cones[2].colors)) == colors_E &&
                 d.cones[2].generators == d.cones[0].generators;
  return d;
}

bool Degeneration::fibers_ok() const {
  auto ok = [](const std::vector<FiberCheck>& v) {
    return std::all_of(v.begin(), v.end(), [](const FiberCheck& f) { return f.count == f.expected; });
  };
  return ok(fibers) && ok(fibers_verbatim) && ok(fibers_off);
}

Degeneration toric_degeneration(const SL2Params& P) {
  if (P.height_one()) throw std::domain_error("no flip for height 1");
  Degeneration d;
  d.mtilde = semigroup::make_Mtilde(P.p, P.q, P.m);
  d.mtilde_verbatim = semigroup::make_Mtilde(P.p, P.q, P.m, semigroup::TildeConvention::kVerbatim);
  d.sigma0 = toric::sigma0_of(P.p, P.q);

  const auto& v = d.sigma0.rays;
  d.relation_holds = true;
  for (int i = 0; i < 3; ++i)
    if (P.p * v[0][i] + P.p * v[1][i] != (P.p + P.q) * v[2][i] + v[3][i]) d.relation_holds = false;
  const std::int64_t n0[4] = {P.p, P.p, P.p + P.q, 1};
  d.gaifullin_sigma0 = toric::gaifullin_criterion(d.sigma0.rays, n0);
  const auto sigma = toric::sigma_of(P.p, P.q, P.a);
  const std::int64_t n[4] = {P.p, P.p, P.q, P.q};
  d.gaifullin_sigma = toric::gaifullin_criterion(sigma.rays, n);

  const auto mplus = semigroup::make_Mplus(P.p, P.q, P.m);
  for (const auto& g : semigroup::hilbert_basis(mplus).generators) {
    const auto expected = static_cast<std::size_t>(g[0] + g[1] + 1);
    d.fibers.push_back({g, semigroup::fiber_count(d.mtilde, g), expected});
    const IntVec swapped{g[1], g[0]};
    d.fibers_verbatim.push_back({swapped, semigroup::fiber_count(d.mtilde_verbatim, swapped), expected});
  }
  const std::int64_t side = P.m + checked_mul(P.a, P.q);
  for (std::int64_t i = 0; i <= side; ++i)
    for (std::int64_t j = 0; j <= side; ++j) {
      const IntVec x{i, j};
      if (!semigroup::contains(mplus, x)) d.fibers_off.push_back({x, semigroup::fiber_count(d.mtilde, x), 0});
    }
  return d;
}

std::vector<EmbeddingEntry> embedding_data(const SL2Params& P) {
  std::vector<EmbeddingEntry> out;
  for (const auto& g : semigroup::hilbert_basis(semigroup::make_Mplus(P.p, P.q, P.m)).generators)
    out.push_back({g, g[0] + g[1]});
  return out;
}

std::vector<std::string> discrepancy_notes(const SL2Params& P) {
  std::vector<std::string> notes;
  const std::int64_t c0 = git::finite_shift(P.p, P.q, P.m);
  if (c0 != 0)
    notes.push_back("mu_a weights shifted by c0 = " + std::to_string(c0) +
                    ": with gcd(a,k) > 1 the unshifted weights (0,-1,-1,1,1) do not give a faithful action");
  if (P.height_one()) return notes;

  notes.push_back("E+ is the subdivision with wall cone(v3,v4), where K.C+ > 0; listing the subdivisions in "
                  "the order (v3,v4), (v1,v2) as E-, E+ would contradict the sign of K");
  notes.push_back("M~ uses pi - qj >= 0 so that (i,j,k) -> (i,j) maps onto M+; the variant jp - qi >= 0 "
                  "maps onto M+ only after swapping i and j");
  if (is_toric(P))
    notes.push_back("sigma+ has index ap and sigma- index aq (v3+v4 = ap v5, v1+v2 = aq v5); the cone over "
                    "P1 embedded by O(ap) belongs to sigma+, not sigma-");
  notes.push_back("colored cones follow the listed data E- = (cone(rho,rho+), {rho+}), E+ = (cone(rho,rho-), "
                  "{rho-}); E gains rho- over E- and rho+ over E+, and C(E+) = C(E), the reverse of the "
                  "growth statements naming rho+ for E- and rho- for E+");
  const auto slices = slice_surfaces(P);
  for (const SliceSurface* s : {&slices.plus, &slices.minus}) {
    const auto& sing = s->singularity;
    if (sing.order > 2 && sing.twist != sing.order - 1)
      notes.push_back("slice " + s->name + " is of type 1/" + std::to_string(sing.order) + "(1," +
                      std::to_string(sing.twist) + "), not A_" + std::to_string(sing.order - 1));
  }
  if ((P.q - P.p + P.k) % P.a != 0)
    notes.push_back("X1^(q-p+k) is not mu_a-invariant here; semistability witnesses come from the "
                    "exhaustive search");
  return notes;
}

}  // namespace sl2flip::core
