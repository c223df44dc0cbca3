#include <catch2/catch_amalgamated.hpp>

#include <cstdio>

#include "fixtures.hpp"

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  std::string cmd = std::string(GFGMIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult res;
  char buf[4096];
  while (size_t n = fread(buf, 1, sizeof buf, pipe))
    res.out.append(buf, n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string fx(const std::string& name) { return fixtures::fixture_path(name); }

}  // namespace

TEST_CASE("cli minimize prints sizes and the automaton") {
  CmdResult r = run_cli("minimize " + fx("fm.hoa"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2 -> 1 states\n") == 0);
  CHECK(r.out.find("HOA: v1") != std::string::npos);

  CmdResult tok = run_cli("minimize " + fx("tok.hoa"));
  CHECK(tok.exit_code == 0);
  CHECK(tok.out.find("6 -> 3 states\n") == 0);
}

TEST_CASE("cli output is byte-stable across invocations") {
  CmdResult a = run_cli("minimize " + fx("tri.hoa"));
  CmdResult b = run_cli("minimize " + fx("tri.hoa"));
  CHECK(a.out == b.out);
  CmdResult c = run_cli("canonize " + fx("tri.hoa") + " --mode max");
  CmdResult d = run_cli("canonize " + fx("tri.hoa") + " --mode max");
  CHECK(c.out == d.out);
}

TEST_CASE("cli canonize agrees across equivalent inputs") {
  CmdResult via_tri = run_cli("canonize " + fx("tri.hoa") + " --mode hom");
  CmdResult via_bs = run_cli("canonize " + fx("bs.hoa") + " --mode hom");
  CHECK(via_tri.exit_code == 0);
  CHECK(via_tri.out == via_bs.out);
  CmdResult max_tri = run_cli("canonize " + fx("tri.hoa") + " --mode max");
  CmdResult max_bs = run_cli("canonize " + fx("bs.hoa") + " --mode max");
  CHECK(max_tri.out == max_bs.out);
}

TEST_CASE("cli minimize output passes validate with all flags true") {
  std::string tmp = "/tmp/gfgmin_cli_min.hoa";
  REQUIRE(run_cli("minimize " + fx("tok.hoa") + " -o " + tmp).exit_code == 0);
  CmdResult v = run_cli("validate " + tmp);
  CHECK(v.exit_code == 0);
  for (const char* key : {"total", "all_reachable", "safe_deterministic", "alpha_homogeneous", "normal",
                          "semantically_deterministic", "all_states_gfg", "nice"})
    CHECK(v.out.find(std::string(key) + "=true\n") != std::string::npos);
  CHECK(v.out.find("deterministic=false\n") != std::string::npos);
}

TEST_CASE("cli equiv prints a distinguishing lasso on failure") {
  CmdResult r = run_cli("equiv " + fx("fm.hoa") + " " + fx("dp1.hoa"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("not equivalent") != std::string::npos);

  CmdResult eq = run_cli("equiv " + fx("tri.hoa") + " " + fx("bs.hoa") + " --lassos 200 --seed 5");
  CHECK(eq.exit_code == 0);
  CHECK(eq.out == "equivalent\n");
}

TEST_CASE("cli iso prints the bijection") {
  CmdResult r = run_cli("iso " + fx("bs.hoa") + " " + fx("bs.hoa"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0->0\n1->1\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli("minimize").exit_code == 2);                     // missing argument
  CHECK(run_cli("nonsense").exit_code == 2);                     // unknown subcommand
  CHECK(run_cli("minimize /tmp/gfgmin_does_not_exist.hoa").exit_code == 2);
  std::string bad = "/tmp/gfgmin_cli_bad.hoa";
  {
    std::ofstream out(bad);
    out << "HOA: v1\nStates: 1\nStart: 0\nAcceptance: 1 Inf(0)\n";
  }
  CHECK(run_cli("info " + bad).exit_code == 3);                  // parse error
}

TEST_CASE("cli gen is seed-deterministic and respects GFGMIN_SEED") {
  CmdResult a = run_cli("gen --states 5 --symbols 2 --seed 9");
  CmdResult b = run_cli("gen --states 5 --symbols 2 --seed 9");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == 0);
  CHECK(gfgmin::is_total(gfgmin::parse_hoa(a.out)));
  CmdResult c = run_cli("gen --states 5 --symbols 2 --seed 10");
  CHECK(c.out != a.out);
  // env var supplies the default seed
  CmdResult d = run_cli("gen --states 5 --symbols 2");  // default seed 0
  setenv("GFGMIN_SEED", "9", 1);
  CmdResult e = run_cli("gen --states 5 --symbols 2");
  unsetenv("GFGMIN_SEED");
  CHECK(e.out == a.out);
  CHECK(d.out != e.out);
}

TEST_CASE("cli deterministic gen emits a tDCW") {
  CmdResult r = run_cli("gen --states 4 --symbols 3 --seed 3 --deterministic");
  CHECK(gfgmin::is_deterministic(gfgmin::parse_hoa(r.out)));
}

TEST_CASE("cli sink flag completes non-total input") {
  std::string partial = "/tmp/gfgmin_cli_partial.hoa";
  {
    std::ofstream out(partial);
    out << "HOA: v1\nStates: 1\nStart: 0\nAcceptance: 1 Fin(0)\nsymbols: a b\n--BODY--\nState: 0\n[0] 0\n--END--\n";
  }
  CHECK(run_cli("info " + partial).exit_code == 3);
  CmdResult r = run_cli("info " + partial + " --sink");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("states=2\n") != std::string::npos);
}
