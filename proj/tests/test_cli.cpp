#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef SL2FLIP_CLI_PATH
#error "SL2FLIP_CLI_PATH must point at the sl2flip binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the binary with stderr discarded; returns exit status and stdout.
Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " SL2FLIP_CLI_PATH " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args) {
  const Run r = run(args + " --json");
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("info 1/3 1") {
  const auto j = run_json("info 1/3 1");
  CHECK(j["params"]["b"] == 2);
  CHECK(j["sections"]["class_group"]["group"] == "Z");
  CHECK(j["sections"]["canonical"]["coefficient"] == -3);
  CHECK(j["sections"]["flip"]["intersection_numbers"]["K_dot_C_plus"]["num"] == 3);
}

TEST_CASE("info for height one") {
  const auto j = run_json("info 1/1 5");
  CHECK(j["sections"]["flip"] == "no flip (height 1)");
  CHECK(j["params"]["b"] == 0);
}

TEST_CASE("unreduced heights: auto-reduce by default, reject with --strict") {
  const auto j = run_json("info 2/4 1");
  CHECK(j["params"]["p"] == 1);
  CHECK(j["params"]["q"] == 2);
  CHECK(run("info 2/4 1 --strict").code == 3);
}

TEST_CASE("hilbert subcommand") {
  CHECK(run_json("hilbert 1/3 2 plus")["sections"]["hilbert"]["hilbert_basis"] ==
        nlohmann::json::parse("[[2,0],[3,1]]"));
  CHECK(run_json("hilbert 1/2 1 minus")["sections"]["hilbert"]["hilbert_basis"] ==
        nlohmann::json::parse("[[0,-1],[1,0],[2,1]]"));
  CHECK(run("hilbert 1/3 2 tilde").code == 0);
  CHECK(run("hilbert 1/3 2 tilde --basis").code == 2);
}

TEST_CASE("git subcommand") {
  using nlohmann::json;
  CHECK(run_json("git 1/3 1 plus")["sections"]["git"]["unstable_vanishing"] == json::parse(R"([["X1","X2"]])"));
  CHECK(run_json("git 1/3 1 trivial")["sections"]["git"]["unstable_vanishing"] == json::array());
  CHECK(run_json("git 2/3 4 minus")["sections"]["git"]["unstable_vanishing"] == json::parse(R"([["X3","X4"]])"));
  CHECK(run("git 1/3 1 bogus").code == 2);
}

TEST_CASE("budget flags and environment") {
  const auto j = run_json("git 1/3 1 plus --nmax 7 --box 9");
  CHECK(j["sections"]["git"]["budget"]["n_max"] == 7);
  CHECK(j["sections"]["git"]["budget"]["box"] == 9);
  const Run env = run("git 1/3 1 plus --json", "SL2FLIP_NMAX=5");
  REQUIRE(env.code == 0);
  CHECK(nlohmann::json::parse(env.out)["sections"]["git"]["budget"]["n_max"] == 5);
  const Run both = run("git 1/3 1 plus --json --nmax 6", "SL2FLIP_NMAX=5");
  CHECK(nlohmann::json::parse(both.out)["sections"]["git"]["budget"]["n_max"] == 6);
  CHECK(run("git 1/3 1 plus", "SL2FLIP_NMAX=abc").code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("info").code == 2);
  CHECK(run("info 0.5 1").code == 2);
  CHECK(run("info 3/2 1").code == 3);
  CHECK(run("info 1/2 0").code == 3);
  CHECK(run("flip 1/1 3").code == 3);
  CHECK(run("cones 1/3 1").code == 0);
  CHECK(run("degeneration 1/3 2").code == 0);
}

TEST_CASE("JSON output is byte-identical across runs") {
  CHECK(run("info 2/5 3 --json").out == run("info 2/5 3 --json").out);
  CHECK(run("verify --qmax 3 --mmax 2").out == run("verify --qmax 3 --mmax 2").out);
}

TEST_CASE("verify sweeps") {
  const Run full = run("verify --qmax 4 --mmax 3");
  CHECK(full.code == 0);
  CHECK(full.out.find("0 failures") != std::string::npos);
  const Run degenerate = run("verify --qmax 1");
  CHECK(degenerate.code == 0);
  CHECK(degenerate.out.find("toric_bridge") == std::string::npos);
  CHECK(degenerate.out.find("smoothness") != std::string::npos);
}
