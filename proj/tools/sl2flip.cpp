// sl2flip: reports and verification sweeps for the SL(2)-varieties E_{h,m}.
//
//   sl2flip info 1/3 1 --json
//   sl2flip hilbert 1/3 2 plus
//   sl2flip git 2/3 4 minus --nmax 20
//   sl2flip verify --qmax 4 --mmax 3
//
// Exit codes: 0 ok, 2 usage, 3 domain error, 4 verification failure.

#include "sl2flip/report.hpp"
#include "sl2flip/sl2core.hpp"
#include "sl2flip/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitVerify = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string height;
  std::int64_t m = 0;
  bool json = false;
  bool strict = false;
  std::optional<std::int64_t> nmax, box;
  std::string which;
  bool basis = false;
  std::string character;
  std::int64_t qmax = 4, mmax = 3, sweep_box = 20;
};

std::int64_t parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("malformed " + what + " '" + text + "'");
  }
  if (used != text.size()) throw UsageError("malformed " + what + " '" + text + "'");
  return v;
}

std::optional<std::int64_t> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return std::nullopt;
  return parse_int(v, name);
}

sl2flip::core::SL2Params params_from(const Options& o) {
  const auto slash = o.height.find('/');
  if (slash == std::string::npos) throw UsageError("height must be a fraction p/q, got '" + o.height + "'");
  const auto p = parse_int(o.height.substr(0, slash), "numerator");
  const auto q = parse_int(o.height.substr(slash + 1), "denominator");
  auto P = sl2flip::core::derive_params(p, q, o.m);
  if (o.strict && P.unreduced_input) throw std::invalid_argument("height " + o.height + " is not in lowest terms");
  return P;
}

sl2flip::git::SearchBudget budget_from(const Options& o, const sl2flip::core::SL2Params& P) {
  auto budget = sl2flip::git::default_budget(P.p, P.q, P.m);
  if (auto v = env_int("SL2FLIP_NMAX")) budget.n_max = *v;
  if (auto v = env_int("SL2FLIP_BOX")) budget.box = *v;
  if (o.nmax) budget.n_max = *o.nmax;
  if (o.box) budget.box = *o.box;
  if (budget.n_max < 1 || budget.box < 1) throw UsageError("search bounds must be >= 1");
  return budget;
}

void emit(const sl2flip::report::ReportDocument& doc, bool json) {
  if (json)
    std::cout << sl2flip::report::to_json(doc).dump(2) << '\n';
  else
    std::cout << sl2flip::report::render_text(doc);
  for (const auto& w : doc.warnings)
    if (w.rfind("undecided", 0) == 0) std::cerr << "warning: " << w << '\n';
}

void add_instance_args(CLI::App* cmd, Options& o) {
  cmd->add_option("height", o.height, "height as a fraction p/q with 0 < p/q <= 1")->required();
  cmd->add_option("m", o.m, "degree m >= 1")->required();
  cmd->add_flag("--json", o.json, "emit the JSON document");
  cmd->add_flag("--strict", o.strict, "reject heights not in lowest terms");
}

void add_budget_args(CLI::App* cmd, Options& o) {
  cmd->add_option("--nmax", o.nmax, "largest power of the linearization searched (env SL2FLIP_NMAX)");
  cmd->add_option("--box", o.box, "per-coordinate exponent bound (env SL2FLIP_BOX)");
}

int run_verify(const Options& o) {
  sl2flip::verify::SweepOptions opts{o.qmax, o.mmax, o.sweep_box};
  const auto result = sl2flip::verify::run_sweep(opts);
  std::cout << sl2flip::verify::render_matrix(result);
  const auto failed = sl2flip::verify::failures(result);
  for (const auto& f : failed) std::cout << "FAIL " << f << '\n';
  std::cout << result.instances.size() << " instances, " << failed.size() << " failures\n";
  return failed.empty() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SL(2)-equivariant flips of the varieties E_{h,m}"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "full report");
  add_instance_args(info, o);
  add_budget_args(info, o);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of M+, M-, M' or fibers of M~");
  add_instance_args(hilbert, o);
  hilbert->add_option("which", o.which, "plus|minus|prime|tilde")
      ->required()
      ->check(CLI::IsMember({"plus", "minus", "prime", "tilde"}));
  hilbert->add_flag("--basis", o.basis, "request a Hilbert basis (not available for tilde)");

  auto* git = app.add_subcommand("git", "semistable locus for a character");
  add_instance_args(git, o);
  git->add_option("character", o.character, "plus|minus|trivial|w,c")
      ->required()
      ->check(CLI::Validator(
          [](std::string& c) -> std::string {
            if (c == "plus" || c == "minus" || c == "trivial") return "";
            const auto comma = c.find(',');
            if (comma == std::string::npos) return "expected plus|minus|trivial|w,c";
            try {
              parse_int(c.substr(0, comma), "weight");
              parse_int(c.substr(comma + 1), "residue");
            } catch (const UsageError& e) {
              return e.what();
            }
            return "";
          },
          "CHARACTER"));
  add_budget_args(git, o);

  auto* flip = app.add_subcommand("flip", "the flip E- <- E -> E+");
  add_instance_args(flip, o);
  add_budget_args(flip, o);

  auto* cones = app.add_subcommand("cones", "colored cones");
  add_instance_args(cones, o);

  auto* degen = app.add_subcommand("degeneration", "toric degeneration");
  add_instance_args(degen, o);

  auto* verify = app.add_subcommand("verify", "oracle and property sweep");
  verify->add_option("--qmax", o.qmax, "largest denominator q")->check(CLI::PositiveNumber);
  verify->add_option("--mmax", o.mmax, "largest degree m")->check(CLI::PositiveNumber);
  verify->add_option("--box", o.sweep_box, "exponent box for the U-invariant oracle")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  using namespace sl2flip;
  try {
    if (verify->parsed()) return run_verify(o);
    const auto P = params_from(o);
    if (info->parsed()) emit(report::info_document(P, budget_from(o, P)), o.json);
    if (hilbert->parsed())
      emit(report::hilbert_document(P, report::parse_semigroup_kind(o.which), o.basis), o.json);
    if (git->parsed()) emit(report::git_document(P, o.character, budget_from(o, P)), o.json);
    if (flip->parsed()) emit(report::flip_document(P, budget_from(o, P)), o.json);
    if (cones->parsed()) emit(report::cones_document(P), o.json);
    if (degen->parsed()) emit(report::degeneration_document(P), o.json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const report::Unsupported& e) {
    std::cerr << "unsupported: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
