#include "sl2flip/verify.hpp"

#include "sl2flip/oracle.hpp"
#include "sl2flip/sl2core.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

namespace sl2flip::verify {

using lattice::IntVec;
using lattice::Rational;

bool InstanceResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& r) { return r.passed; });
}

bool SweepResult::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](const InstanceResult& r) { return r.passed(); });
}

const std::vector<std::string>& all_property_names() {
  static const std::vector<std::string> names{
      "hilbert_oracle", "closed_form", "u_invariants", "class_group", "characters", "canonical",
      "intersection",   "toric_bridge", "git_loci",    "free_action", "slices",     "smoothness",
      "degeneration",   "colored_cones"};
  return names;
}

std::vector<std::string> SweepResult::property_names() const {
  std::vector<std::string> out;
  for (const auto& name : all_property_names())
    for (const auto& inst : instances)
      if (std::any_of(inst.properties.begin(), inst.properties.end(),
                      [&](const PropertyResult& r) { return r.name == name; })) {
        out.push_back(name);
        break;
      }
  return out;
}

namespace {

// A check returns an empty string on success, a failure description otherwise.
using Check = std::function<std::string()>;

std::string str(const Rational& r) { return r.get_str(); }

std::string check_hilbert(const core::SL2Params& P) {
  const auto hb = semigroup::hilbert_basis(semigroup::make_Mplus(P.p, P.q, P.m)).generators;
  if (hb != oracle::mplus_hilbert_basis(P.p, P.q, P.m)) return "M+ basis differs from box oracle";
  const auto minus = semigroup::make_Mminus(P.p, P.q, P.m);
  const std::int64_t side = P.m + P.a * P.q;
  if (semigroup::hilbert_basis(minus).generators != oracle::hilbert_basis_in_box(minus, {0, -side}, {side, side}))
    return "M- basis differs from box oracle";
  return "";
}

std::string check_closed_form(const core::SL2Params& P) {
  std::vector<IntVec> expected;
  for (std::int64_t t = 0; t <= P.a * P.p; ++t) expected.push_back({P.m + t, t});
  if (semigroup::hilbert_basis(semigroup::make_Mplus(P.p, P.q, P.m)).generators != expected)
    return "basis is not {(m+t,t) : 0 <= t <= ap}";
  return "";
}

std::string check_u_invariants(const core::SL2Params& P, std::int64_t box) {
  std::vector<IntVec> expected;
  for (std::int64_t i = 0; i <= box; ++i)
    for (std::int64_t j = 0; j <= box; ++j)
      if (oracle::mplus_contains(P.p, P.q, P.m, i, j)) expected.push_back({i, j});
  if (git::u_invariant_exponents(P.p, P.q, P.m, box) != expected) return "U-invariants differ from M+ membership";
  return "";
}

std::string check_class_group(const core::SL2Params& P) {
  const auto cl = core::class_group(P);
  const lattice::FinAbGroup expected(1, P.a == 1 ? std::vector<lattice::Integer>{}
                                                 : std::vector<lattice::Integer>{static_cast<long>(P.a)});
  if (!cl.via_splus.isomorphic_to(expected)) return "via S+: " + cl.via_splus.to_string();
  if (!cl.via_sminus.isomorphic_to(expected)) return "via S-: " + cl.via_sminus.to_string();
  const IntVec rel_plus{P.a * P.p, P.m}, rel_minus{-P.a * P.q, P.m};
  if (!cl.via_splus.is_zero(cl.via_splus.combine(rel_plus))) return "ap[D] + m[S+] != 0";
  if (!cl.via_sminus.is_zero(cl.via_sminus.combine(rel_minus))) return "-aq[D] + m[S-] != 0";
  return "";
}

std::string check_characters(const core::SL2Params& P) {
  const auto cl = core::class_group(P);
  const std::int64_t c0 = git::finite_shift(P.p, P.q, P.m);
  if (cl.chi_D != git::make_character(P.k, c0, P.a)) return "chi_D";
  if (cl.chi_Splus != git::make_character(-P.p, P.b * c0 - 1, P.a)) return "chi_S+";
  if (cl.chi_Sminus != git::make_character(P.q, 1, P.a)) return "chi_S-";
  const git::GroupCharacter zero{0, 0};
  if (git::add(git::scale(cl.chi_D, P.a * P.p, P.a), git::scale(cl.chi_Splus, P.m, P.a), P.a) != zero)
    return "ap chi_D + m chi_S+ != 0";
  if (git::add(git::scale(cl.chi_D, -P.a * P.q, P.a), git::scale(cl.chi_Sminus, P.m, P.a), P.a) != zero)
    return "-aq chi_D + m chi_S- != 0";
  return "";
}

std::string check_canonical(const core::SL2Params& P) {
  const auto K = core::canonical_class(P);
  const auto cl = core::class_group(P);
  const IntVec coeffs{-(1 + P.b), 0};
  if (K.coefficient != -(1 + P.b) || K.element != cl.via_splus.combine(coeffs)) return "K != -(1+b)[D]";
  if (K.chi_plus.torus != -P.k + P.p - P.q) return "chi+ torus part";
  if (git::add(K.chi, K.chi_prime, P.a) != K.chi_plus) return "chi + chi' != chi+";
  return "";
}

std::string check_intersection(const core::SL2Params& P) {
  const auto n = core::intersection_numbers(P);
  const Rational minus = lattice::make_rational(-(1 + P.b) * P.k, P.a * P.q * P.q);
  const Rational plus = lattice::make_rational((1 + P.b) * P.k, P.a * P.p * P.p);
  if (n.K_dot_Cminus != minus || n.K_dot_Cplus != plus)
    return "(" + str(n.K_dot_Cminus) + ", " + str(n.K_dot_Cplus) + ")";
  if (!(n.K_dot_Cminus < 0) || !(n.K_dot_Cplus > 0)) return "sign law";
  const Rational product = lattice::make_rational(-(1 + P.b) * (1 + P.b) * P.k * P.k, P.a * P.a * P.p * P.p * P.q * P.q);
  if (n.K_dot_Cminus * n.K_dot_Cplus != product) return "product";
  const auto r = core::flip_report(P);
  if (r.numbers_via_slices.K_dot_Cplus != n.K_dot_Cplus || r.numbers_via_slices.K_dot_Cminus != n.K_dot_Cminus)
    return "slice-order route disagrees";
  return "";
}

std::string check_toric_bridge(const core::SL2Params& P) {
  const auto t = core::toric_flip(P);
  const auto n = core::intersection_numbers(P);
  const Rational plus = lattice::make_rational(2 * (P.q - P.p), P.a * P.p * P.p);
  const Rational minus = lattice::make_rational(2 * (P.p - P.q), P.a * P.q * P.q);
  if (t.normalized_plus != plus || t.normalized_minus != minus)
    return "normalized wall degrees (" + str(t.normalized_minus) + ", " + str(t.normalized_plus) + ")";
  if (n.K_dot_Cplus != t.normalized_plus) return "K.C+ " + str(n.K_dot_Cplus) + " vs wall " + str(t.normalized_plus);
  if (n.K_dot_Cminus != t.normalized_minus)
    return "K.C- " + str(n.K_dot_Cminus) + " vs wall " + str(t.normalized_minus);
  if (t.wall_plus.rays != std::vector<IntVec>{t.sigma.rays[2], t.sigma.rays[3]}) return "E+ wall is not cone(v3,v4)";
  return "";
}

std::string check_git(const core::SL2Params& P) {
  const auto r = core::flip_report(P);
  const auto act = git::standard_action(P.p, P.q, P.m);
  const std::vector<std::vector<std::size_t>> plus{{git::kX1, git::kX2}}, minus{{git::kX3, git::kX4}};
  if (r.ss_plus.unstable_vanishing != plus) return "chi+ unstable set";
  if (r.ss_minus.unstable_vanishing != minus) return "chi- unstable set";
  if (!r.ss_trivial.unstable_vanishing.empty()) return "chi0 unstable set";
  for (const auto* rep : {&r.ss_trivial, &r.ss_plus, &r.ss_minus})
    if (!rep->undecided.empty()) return "undecided pattern " + git::pattern_to_string(rep->undecided.front());
  const std::pair<const git::SemistableReport*, git::GroupCharacter> reps[] = {
      {&r.ss_trivial, r.chi_trivial}, {&r.ss_plus, r.chi_plus}, {&r.ss_minus, r.chi_minus}};
  for (const auto& [rep, chi] : reps)
    for (const auto& pr : rep->patterns)
      if (pr.witness && git::monomial_character(act, pr.witness->exponents) != git::scale(chi, pr.witness->power, P.a))
        return "witness character for " + git::pattern_to_string(pr.pattern);
  return "";
}

std::string check_free_action(const core::SL2Params& P) {
  const auto act = git::standard_action(P.p, P.q, P.m);
  std::vector<std::vector<std::size_t>> supports;
  for (unsigned mask = 0; mask < 32; ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i)) s.push_back(i);
    supports.push_back(s);
  }
  for (const auto& s : supports) {
    const auto g = git::stabilizer_of_support(act, s);
    const auto expected = oracle::stabilizer_order(act, s);
    const auto order = g.order();
    if (expected.has_value() != order.has_value() || (order && *order != *expected))
      return "stabilizer order of " + git::pattern_to_string(s);
    const bool meets_12 = std::count(s.begin(), s.end(), git::kX1) || std::count(s.begin(), s.end(), git::kX2);
    const bool meets_34 = std::count(s.begin(), s.end(), git::kX3) || std::count(s.begin(), s.end(), git::kX4);
    if (meets_12 && meets_34 && !g.is_trivial()) return "nontrivial stabilizer on " + git::pattern_to_string(s);
    // Enlarging the support shrinks the stabilizer.
    for (const auto& t : supports) {
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      const auto bigger = git::stabilizer_of_support(act, t).order();
      if (order && (!bigger || *order % *bigger != 0)) return "monotonicity " + git::pattern_to_string(t);
    }
  }
  return "";
}

std::string check_slices(const core::SL2Params& P) {
  const auto s = core::slice_surfaces(P);
  for (const auto* sl : {&s.plus, &s.minus}) {
    if (sl->singularity.order != sl->expected_order) return sl->name + " order";
    if (sl->singularity != oracle::classify_2d(sl->dual)) return sl->name + " normal form";
  }
  if (s.prime) {
    if (s.prime->singularity.order != P.b) return "S' order";
    if (s.prime->singularity != oracle::classify_2d(s.prime->dual)) return "S' normal form";
  }
  return "";
}

std::string check_smoothness(const core::SL2Params& P) {
  if (core::is_toric(P) != (P.b == 1)) return "is_toric";
  if (core::is_smooth(P) != (P.b == 0)) return "is_smooth";
  if (P.height_one()) {
    try {
      core::flip_report(P);
      return "flip_report accepted height 1";
    } catch (const std::domain_error&) {
      return "";
    }
  }
  const auto r = core::flip_report(P);
  if (r.E_prime.smooth != (P.b == 1)) return "E' smoothness along C";
  if (r.E_plus.smooth != (P.a * P.p == 1)) return "E+ smoothness";
  if (r.E_minus.smooth) return "E- smooth";
  if (r.toric) {
    for (const auto& c : r.toric->star.max_cones)
      if (oracle::multiplicity(c) != 1) return "star fan cone " + toric::to_string(c);
    if (!toric::is_face_compatible(r.toric->star)) return "star fan faces";
  }
  return "";
}

std::string check_degeneration(const core::SL2Params& P) {
  const auto d = core::toric_degeneration(P);
  if (!d.relation_holds) return "sigma0 relation";
  if (d.gaifullin_sigma0) return "criterion true on sigma0";
  if (!d.gaifullin_sigma) return "criterion false on sigma";
  for (const auto& f : d.fibers)
    if (f.count != oracle::mtilde_fiber(P.p, P.q, P.m, f.base[0], f.base[1])) return "fiber oracle";
  if (!d.fibers_ok()) return "fiber counts";
  return "";
}

std::string check_colored(const core::SL2Params& P) { return core::colored_cones(P).all_ok() ? "" : "checks"; }

}  // namespace

InstanceResult check_instance(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t box) {
  const auto P = core::derive_params(p, q, m);
  InstanceResult out;
  out.p = P.p;
  out.q = P.q;
  out.m = P.m;

  std::vector<std::pair<std::string, Check>> checks{
      {"hilbert_oracle", [&] { return check_hilbert(P); }},
      {"u_invariants", [&] { return check_u_invariants(P, box); }},
      {"class_group", [&] { return check_class_group(P); }},
      {"characters", [&] { return check_characters(P); }},
      {"canonical", [&] { return check_canonical(P); }},
      {"smoothness", [&] { return check_smoothness(P); }},
  };
  if (!P.height_one()) {
    if (P.m == P.a * (P.q - P.p)) checks.emplace_back("closed_form", [&] { return check_closed_form(P); });
    checks.emplace_back("intersection", [&] { return check_intersection(P); });
    if (P.b == 1) checks.emplace_back("toric_bridge", [&] { return check_toric_bridge(P); });
    checks.emplace_back("git_loci", [&] { return check_git(P); });
    checks.emplace_back("free_action", [&] { return check_free_action(P); });
    checks.emplace_back("slices", [&] { return check_slices(P); });
    checks.emplace_back("degeneration", [&] { return check_degeneration(P); });
    checks.emplace_back("colored_cones", [&] { return check_colored(P); });
  }

  for (const auto& name : all_property_names())
    for (const auto& [n, fn] : checks) {
      if (n != name) continue;
      PropertyResult r{name, false, ""};
      try {
        r.detail = fn();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
      }
      out.properties.push_back(std::move(r));
    }
  return out;
}

SweepResult run_sweep(const SweepOptions& options) {
  if (options.q_max < 1 || options.m_max < 1 || options.box < 1)
    throw std::invalid_argument("sweep bounds must be >= 1");
  std::vector<std::future<InstanceResult>> pending;
  for (std::int64_t q = 1; q <= options.q_max; ++q)
    for (std::int64_t p = 1; p <= q; ++p) {
      if (lattice::gcd(p, q) != 1) continue;
      for (std::int64_t m = 1; m <= options.m_max; ++m)
        pending.push_back(std::async(std::launch::async, check_instance, p, q, m, options.box));
    }
  SweepResult out;
  for (auto& f : pending) out.instances.push_back(f.get());
  return out;
}

std::string render_matrix(const SweepResult& result) {
  const auto names = result.property_names();
  std::ostringstream os;
  os << "   h    m";
  for (const auto& n : names) os << "  " << n;
  os << '\n';
  for (const auto& inst : result.instances) {
    std::string h = std::to_string(inst.p) + "/" + std::to_string(inst.q);
    os << std::string(h.size() < 4 ? 4 - h.size() : 0, ' ') << h << "  " << std::string(inst.m < 10 ? 2 : 1, ' ')
       << inst.m;
    for (const auto& n : names) {
      std::string cell = "-";
      for (const auto& r : inst.properties)
        if (r.name == n) cell = r.passed ? "ok" : "FAIL";
      os << "  " << cell << std::string(n.size() - cell.size(), ' ');
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> failures(const SweepResult& result) {
  std::vector<std::string> out;
  for (const auto& inst : result.instances)
    for (const auto& r : inst.properties)
      if (!r.passed)
        out.push_back(std::to_string(inst.p) + "/" + std::to_string(inst.q) + " m=" + std::to_string(inst.m) + " " +
                      r.name + ": " + r.detail);
  return out;
}

}  // namespace sl2flip::verify
