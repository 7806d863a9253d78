#include "sl2flip/report.hpp"

#include <algorithm>
#include <sstream>

namespace sl2flip::report {

using lattice::IntVec;
using lattice::Rational;

bool operator==(const ReportDocument& x, const ReportDocument& y) {
  const auto& a = x.params;
  const auto& b = y.params;
  return x.schema_version == y.schema_version && a.p == b.p && a.q == b.q && a.m == b.m && a.k == b.k &&
         a.a == b.a && a.b == b.b && x.sections == y.sections && x.warnings == y.warnings;
}

json rational_json(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return json{{"num", lattice::to_int64(c.get_num())}, {"den", lattice::to_int64(c.get_den())}};
}

Rational rational_from_json(const json& j) {
  Rational r(lattice::Integer(j.at("num").get<long>()), lattice::Integer(j.at("den").get<long>()));
  r.canonicalize();
  return r;
}

json to_json(const ReportDocument& doc) {
  const auto& P = doc.params;
  return json{{"schema_version", doc.schema_version},
              {"params", {{"p", P.p}, {"q", P.q}, {"m", P.m}, {"k", P.k}, {"a", P.a}, {"b", P.b}}},
              {"sections", doc.sections},
              {"warnings", doc.warnings}};
}

ReportDocument from_json(const json& j) {
  ReportDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  const auto& p = j.at("params");
  doc.params.p = p.at("p").get<std::int64_t>();
  doc.params.q = p.at("q").get<std::int64_t>();
  doc.params.m = p.at("m").get<std::int64_t>();
  doc.params.k = p.at("k").get<std::int64_t>();
  doc.params.a = p.at("a").get<std::int64_t>();
  doc.params.b = p.at("b").get<std::int64_t>();
  doc.sections = j.at("sections");
  doc.warnings = j.at("warnings").get<std::vector<std::string>>();
  return doc;
}

SemigroupKind parse_semigroup_kind(const std::string& name) {
  if (name == "plus") return SemigroupKind::kPlus;
  if (name == "minus") return SemigroupKind::kMinus;
  if (name == "prime") return SemigroupKind::kPrime;
  if (name == "tilde") return SemigroupKind::kTilde;
  throw std::invalid_argument("unknown semigroup '" + name + "' (plus|minus|prime|tilde)");
}

git::GroupCharacter parse_character(const std::string& text, const core::SL2Params& P) {
  if (text == "trivial") return git::GroupCharacter{0, 0};
  if (text == "plus" || text == "minus") {
    const auto canon = core::canonical_class(P);
    return text == "plus" ? canon.chi_plus : canon.chi_minus;
  }
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("character must be plus|minus|trivial|w,c");
  try {
    std::size_t used = 0;
    const long w = std::stol(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const long c = std::stol(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return git::make_character(w, c, P.a);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed character '" + text + "'");
  }
}

namespace {

json element_json(const lattice::GroupElement& e) {
  json free = json::array(), torsion = json::array();
  for (const auto& x : e.free) free.push_back(lattice::to_int64(x));
  for (const auto& x : e.torsion) torsion.push_back(lattice::to_int64(x));
  return json{{"free", free}, {"torsion", torsion}};
}

json group_json(const lattice::FinAbGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion()) torsion.push_back(lattice::to_int64(d));
  return json{{"group", g.to_string()}, {"free_rank", g.free_rank()}, {"torsion", torsion}};
}

json character_json(const git::GroupCharacter& c) { return json{{"torus", c.torus}, {"finite", c.finite}}; }

json names_json(std::span<const std::size_t> pattern) {
  json out = json::array();
  for (auto i : pattern) out.push_back(git::kCoordinateNames.at(i));
  return out;
}

json cone_json(const toric::Cone& c) { return json(c.rays); }

json singularity_json(const toric::CyclicSingularity& s) {
  return json{{"order", s.order}, {"twist", s.twist}, {"smooth", s.smooth()}};
}

json semistable_json(const git::GroupCharacter& chi, const git::SemistableReport& r) {
  json unstable = json::array();
  for (const auto& p : r.unstable_vanishing) unstable.push_back(names_json(p));
  json patterns = json::array();
  for (const auto& pr : r.patterns) {
    json item{{"pattern", names_json(pr.pattern)},
              {"closure", names_json(pr.closure)},
              {"status", git::to_string(pr.status)}};
    if (pr.witness) item["witness"] = {{"exponents", pr.witness->exponents}, {"power", pr.witness->power}};
    patterns.push_back(item);
  }
  json undecided = json::array();
  for (const auto& p : r.undecided) undecided.push_back(names_json(p));
  return json{{"character", character_json(chi)},
              {"unstable_vanishing", unstable},
              {"patterns", patterns},
              {"undecided", undecided},
              {"budget", {{"n_max", r.budget.n_max}, {"box", r.budget.box}}}};
}

void note_undecided(ReportDocument& doc, const std::string& label, const git::SemistableReport& r) {
  for (const auto& p : r.undecided)
    doc.warnings.push_back("undecided at bound (n_max=" + std::to_string(r.budget.n_max) +
                           ", box=" + std::to_string(r.budget.box) + "): " + label + " pattern " +
                           git::pattern_to_string(p));
}

json slice_json(const core::SliceSurface& s) {
  return json{{"semigroup", s.name},
              {"hilbert_basis", s.basis.generators},
              {"lattice_basis", s.lattice_basis},
              {"cone", cone_json(s.cone)},
              {"dual_cone", cone_json(s.dual)},
              {"singularity", singularity_json(s.singularity)},
              {"expected_order", s.expected_order}};
}

json variety_json(const core::VarietySummary& v) {
  json out{{"description", v.description}, {"orbits", v.orbits}, {"smooth", v.smooth}};
  if (v.transverse) out["transverse_singularity"] = singularity_json(*v.transverse);
  return out;
}

ReportDocument base_document(const core::SL2Params& P) {
  ReportDocument doc;
  doc.params = P;
  if (P.unreduced_input)
    doc.warnings.push_back("height " + std::to_string(P.unreduced_input->first) + "/" +
                           std::to_string(P.unreduced_input->second) + " reduced to " + std::to_string(P.p) + "/" +
                           std::to_string(P.q));
  for (auto& n : core::discrepancy_notes(P)) doc.warnings.push_back(std::move(n));
  return doc;
}

json params_section(const core::SL2Params& P) {
  return json{{"h", std::to_string(P.p) + "/" + std::to_string(P.q)},
              {"p", P.p}, {"q", P.q}, {"m", P.m}, {"k", P.k}, {"a", P.a}, {"b", P.b},
              {"toric", core::is_toric(P)},
              {"smooth", core::is_smooth(P)}};
}

json cox_section(const core::SL2Params& P) {
  const auto cox = core::cox_presentation(P);
  return json{{"equation", cox.equation()},
              {"b", cox.b},
              {"coordinates", git::kCoordinateNames},
              {"ambient_dim", cox.ambient_dim},
              {"torus_weights", cox.action.torus_weights},
              {"finite_order", cox.action.finite_order},
              {"finite_weights", cox.action.finite_weights},
              {"finite_shift", cox.finite_shift}};
}

json orbits_section(const core::SL2Params& P) {
  json out = json::array();
  for (const auto& o : core::orbit_structure(P)) out.push_back({{"orbit", o.label}, {"dimension", o.dimension}});
  return out;
}

json class_group_section(const core::SL2Params& P) {
  const auto cl = core::class_group(P);
  json out = group_json(cl.via_splus);
  out["via_S_minus"] = group_json(cl.via_sminus);
  out["D"] = element_json(cl.D);
  out["S_plus"] = element_json(cl.S_plus);
  out["S_minus"] = element_json(cl.S_minus);
  out["relations"] = {std::to_string(P.a * P.p) + "[D] + " + std::to_string(P.m) + "[S+] = 0",
                      std::to_string(-P.a * P.q) + "[D] + " + std::to_string(P.m) + "[S-] = 0"};
  out["characters"] = {{"chi_D", character_json(cl.chi_D)},
                       {"chi_S_plus", character_json(cl.chi_Splus)},
                       {"chi_S_minus", character_json(cl.chi_Sminus)}};
  return out;
}

json canonical_section(const core::SL2Params& P) {
  const auto K = core::canonical_class(P);
  return json{{"K", std::to_string(K.coefficient) + "[D]"},
              {"coefficient", K.coefficient},
              {"element", element_json(K.element)},
              {"chi", character_json(K.chi)},
              {"chi_prime", character_json(K.chi_prime)},
              {"chi_plus", character_json(K.chi_plus)},
              {"chi_minus", character_json(K.chi_minus)}};
}

json flip_section(const core::FlipReport& r, ReportDocument& doc) {
  json out;
  out["intersection_numbers"] = {{"K_dot_C_minus", rational_json(r.numbers.K_dot_Cminus)},
                                 {"K_dot_C_plus", rational_json(r.numbers.K_dot_Cplus)}};
  out["intersection_numbers_via_slices"] = {{"K_dot_C_minus", rational_json(r.numbers_via_slices.K_dot_Cminus)},
                                            {"K_dot_C_plus", rational_json(r.numbers_via_slices.K_dot_Cplus)}};
  out["slices"] = {{"S_plus", slice_json(r.slices.plus)}, {"S_minus", slice_json(r.slices.minus)}};
  if (r.slices.prime) out["slices"]["S_prime"] = slice_json(*r.slices.prime);
  out["semistable"] = {{"trivial", semistable_json(r.chi_trivial, r.ss_trivial)},
                       {"plus", semistable_json(r.chi_plus, r.ss_plus)},
                       {"minus", semistable_json(r.chi_minus, r.ss_minus)}};
  note_undecided(doc, "trivial", r.ss_trivial);
  note_undecided(doc, "plus", r.ss_plus);
  note_undecided(doc, "minus", r.ss_minus);
  out["varieties"] = {{"E", variety_json(r.E)},
                      {"E_minus", variety_json(r.E_minus)},
                      {"E_plus", variety_json(r.E_plus)},
                      {"E_prime", variety_json(r.E_prime)}};
  out["proj"] = r.proj_descriptions;
  if (r.toric) {
    const auto& t = *r.toric;
    json star = json::array(), plus = json::array(), minus = json::array();
    for (const auto& c : t.star.max_cones) star.push_back(cone_json(c));
    for (const auto& c : t.e_plus.max_cones) plus.push_back(cone_json(c));
    for (const auto& c : t.e_minus.max_cones) minus.push_back(cone_json(c));
    out["toric"] = {{"sigma", cone_json(t.sigma)},
                    {"star_fan", star},
                    {"star_fan_smooth", t.star_smooth},
                    {"E_plus_fan", plus},
                    {"E_minus_fan", minus},
                    {"wall_plus", cone_json(t.wall_plus)},
                    {"wall_minus", cone_json(t.wall_minus)},
                    {"wall_multiplicity_plus", t.mult_plus},
                    {"wall_multiplicity_minus", t.mult_minus},
                    {"K_degree_plus", rational_json(t.raw_plus)},
                    {"K_degree_minus", rational_json(t.raw_minus)},
                    {"normalized_plus", rational_json(t.normalized_plus)},
                    {"normalized_minus", rational_json(t.normalized_minus)}};
  }
  return out;
}

json cones_section(const core::SL2Params& P) {
  const auto d = core::colored_cones(P);
  json cones = json::array();
  for (const auto& c : d.cones) cones.push_back({{"variety", c.variety}, {"cone", c.generators}, {"colors", c.colors}});
  return json{{"lattice", "{(i,j) : " + std::to_string(d.lattice_modulus) + " | i - j}"},
              {"rho_plus", d.rho_plus},
              {"rho_minus", d.rho_minus},
              {"rho", d.rho},
              {"rho_prime", d.rho_prime},
              {"valuation_cone", "x + y <= 0"},
              {"cones", cones},
              {"checks",
               {{"rho_in_valuation_cone", d.rho_in_valuation_cone},
                {"colors_contained", d.colors_contained},
                {"strictly_convex", d.strictly_convex},
                {"rho_plus_interior", d.rho_plus_interior},
                {"prime_colorless", d.prime_colorless},
                {"growth_law", d.growth_law}}}};
}

json fibers_json(const std::vector<core::FiberCheck>& v) {
  json out = json::array();
  for (const auto& f : v) out.push_back({{"base", f.base}, {"count", f.count}, {"expected", f.expected}});
  return out;
}

json degeneration_section(const core::SL2Params& P) {
  const auto d = core::toric_degeneration(P);
  return json{{"sigma0", cone_json(d.sigma0)},
              {"relation", std::to_string(P.p) + "v1 + " + std::to_string(P.p) + "v2 = " +
                               std::to_string(P.p + P.q) + "v3 + v4"},
              {"relation_holds", d.relation_holds},
              {"quasihomogeneous_sigma0", d.gaifullin_sigma0},
              {"quasihomogeneous_sigma", d.gaifullin_sigma},
              {"fibers", fibers_json(d.fibers)},
              {"fibers_transposed_convention", fibers_json(d.fibers_verbatim)},
              {"fibers_ok", d.fibers_ok()}};
}

json embedding_section(const core::SL2Params& P) {
  json out = json::array();
  for (const auto& e : core::embedding_data(P))
    out.push_back({{"exponents", e.exponents}, {"module", "V_" + std::to_string(e.degree)}, {"dimension", e.degree + 1}});
  return out;
}

}  // namespace

ReportDocument info_document(const core::SL2Params& P, const git::SearchBudget& budget) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  doc.sections["cox"] = cox_section(P);
  doc.sections["orbits"] = orbits_section(P);
  doc.sections["class_group"] = class_group_section(P);
  doc.sections["canonical"] = canonical_section(P);
  doc.sections["embedding"] = embedding_section(P);
  if (P.height_one()) {
    doc.sections["flip"] = "no flip (height 1)";
    doc.sections["colored_cones"] = "no flip (height 1)";
    doc.sections["degeneration"] = "no flip (height 1)";
  } else {
    doc.sections["flip"] = flip_section(core::flip_report(P, budget), doc);
    doc.sections["colored_cones"] = cones_section(P);
    doc.sections["degeneration"] = degeneration_section(P);
  }
  return doc;
}

ReportDocument hilbert_document(const core::SL2Params& P, SemigroupKind kind, bool basis_requested) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  json out;
  switch (kind) {
    case SemigroupKind::kPlus:
      out = slice_json(core::make_slice(semigroup::make_Mplus(P.p, P.q, P.m), P.a * P.p));
      break;
    case SemigroupKind::kMinus:
      out = slice_json(core::make_slice(semigroup::make_Mminus(P.p, P.q, P.m), P.a * P.q));
      break;
    case SemigroupKind::kPrime:
      if (P.height_one()) throw std::domain_error("M' is a half-plane for height 1: no Hilbert basis");
      out = slice_json(core::make_slice(semigroup::make_Mprime(P.p, P.q, P.m), P.b));
      break;
    case SemigroupKind::kTilde: {
      if (basis_requested) throw Unsupported("Hilbert basis of the rank-3 semigroup M~ is not supported; use fibers");
      const auto mtilde = semigroup::make_Mtilde(P.p, P.q, P.m);
      std::vector<core::FiberCheck> fibers;
      for (const auto& g : semigroup::hilbert_basis(semigroup::make_Mplus(P.p, P.q, P.m)).generators)
        fibers.push_back({g, semigroup::fiber_count(mtilde, g), static_cast<std::size_t>(g[0] + g[1] + 1)});
      out = {{"semigroup", mtilde.name}, {"fibers", fibers_json(fibers)}};
      break;
    }
  }
  doc.sections["hilbert"] = out;
  return doc;
}

ReportDocument git_document(const core::SL2Params& P, const std::string& character, const git::SearchBudget& budget) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  const auto cox = core::cox_presentation(P);
  const auto chi = parse_character(character, P);
  const auto r = git::semistable_locus(cox.action, chi, P.b, budget);
  doc.sections["git"] = semistable_json(chi, r);
  note_undecided(doc, character, r);
  return doc;
}

ReportDocument flip_document(const core::SL2Params& P, const git::SearchBudget& budget) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  doc.sections["flip"] = flip_section(core::flip_report(P, budget), doc);
  return doc;
}

ReportDocument cones_document(const core::SL2Params& P) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  doc.sections["colored_cones"] = cones_section(P);
  return doc;
}

ReportDocument degeneration_document(const core::SL2Params& P) {
  ReportDocument doc = base_document(P);
  doc.sections["params"] = params_section(P);
  doc.sections["degeneration"] = degeneration_section(P);
  return doc;
}

namespace {

bool is_rational(const json& j) { return j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den"); }

std::string inline_value(const json& j) {
  if (is_rational(j)) {
    const auto den = j["den"].get<long>();
    return std::to_string(j["num"].get<long>()) + (den == 1 ? "" : "/" + std::to_string(den));
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + inline_value(j[i]);
    return out + "]";
  }
  if (j.is_object()) {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      out += (first ? "" : ", ") + k + ": " + inline_value(v);
      first = false;
    }
    return out + "}";
  }
  return j.dump();
}

bool is_block(const json& j) {
  if (is_rational(j)) return false;
  if (j.is_object()) return true;
  return j.is_array() && std::any_of(j.begin(), j.end(), [](const json& e) { return e.is_object() && !is_rational(e); });
}

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_array()) {
    for (const auto& e : j) os << pad << "- " << inline_value(e) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (is_block(v)) {
      os << pad << k << ":\n";
      render(os, v, indent + 2);
    } else {
      os << pad << k << std::string(width - k.size(), ' ') << "  " << inline_value(v) << '\n';
    }
  }
}

}  // namespace

std::string render_text(const ReportDocument& doc) {
  std::ostringstream os;
  const auto& P = doc.params;
  os << "E_{" << P.p << "/" << P.q << "," << P.m << "}  (k=" << P.k << ", a=" << P.a << ", b=" << P.b << ")\n";
  for (const auto& [name, body] : doc.sections.items()) {
    os << "\n[" << name << "]\n";
    if (is_block(body))
      render(os, body, 2);
    else
      os << "  " << inline_value(body) << '\n';
  }
  if (!doc.warnings.empty()) {
    os << "\n[warnings]\n";
    for (const auto& w : doc.warnings) os << "  - " << w << '\n';
  }
  return os.str();
}

}  // namespace sl2flip::report
