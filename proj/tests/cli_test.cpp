#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct Invocation {
  std::string output;  // stdout and stderr
  int exit_code = -1;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

Invocation kernel(const std::vector<std::string>& args, const std::string& env = "") {
  std::string cmd = "cd " + quote(DESIRE_SOURCE_DIR) + " && " + env + " " + quote(DESIRE_KERNEL);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " 2>&1";
  Invocation r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(DESIRE_SOURCE_DIR) + "/tests/golden/" + name + ".txt", std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Case {
  const char* golden;
  std::vector<std::string> args;
  int exit_code;
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all{
      {"closure_u1", {"closure", "data/U1.univ", "--set", "a,b"}, 0},
      {"closure_lines", {"--format", "lines", "closure", "data/U1.univ", "--set", "a,b"}, 0},
      {"closure_inconsistent", {"closure", "data/U2.univ", "--set", "b"}, 1},
      {"coherent_missing", {"coherent", "data/U1.univ", "--set", "a,b"}, 1},
      {"coherent_ok", {"coherent", "data/U1.univ", "--set", "a,b,c"}, 0},
      {"enumerate_u2", {"enumerate", "data/U2.univ"}, 0},
      {"malformed", {"closure", "data/malformed.univ", "--set", "a"}, 2},
      {"sds_close_u1", {"sds-close", "data/U1.univ", "data/U1_ab.sds"}, 0},
      {"sds_close_u1", {"sds-close", "data/U1.univ", "data/U1_ab.sds", "--method", "conjunctive"}, 0},
      {"sds_close_lines", {"--format", "lines", "sds-close", "data/U1.univ", "data/U1_pair.sds"}, 0},
      {"sds_close_inconsistent", {"sds-close", "data/U2.univ", "data/U2_b.sds"}, 1},
      {"sds_close_inconsistent", {"sds-close", "data/U2.univ", "data/U2_b.sds", "--method", "conjunctive"}, 1},
      {"conjrep_u1_pair", {"conjrep", "data/U1.univ", "data/U1_pair.sds"}, 0},
      {"sds_check_u1_pair", {"sds-check", "data/U1.univ", "data/U1_pair.sds"}, 1},
      {"lawcheck_filters_tiny", {"lawcheck", "filters", "--budget", "tiny"}, 0},
      {"choose_interval", {"gambles", "choose", "--credal", "data/interval.cred", "--options", "data/interval.opt"}, 0},
      {"natex", {"gambles", "natex", "data/natex.gam"}, 0},
      {"natex_inconsistent", {"gambles", "natex", "data/opposed.gam"}, 1},
      {"consistent_opposed", {"gambles", "consistent", "data/opposed.gam"}, 1},
      {"logic_closure_p", {"logic", "closure", "--atoms", "p", "--depth", "1", "--premise", "p"}, 0},
      {"logic_closure_file", {"logic", "closure", "--atoms", "p,q", "--depth", "1", "--file", "data/premises.wff"}, 0},
      {"logic_sdfs_close", {"logic", "sdfs-close", "--atoms", "p,q", "--depth", "2", "--set", "p; q"}, 0},
      {"logic_lindenbaum", {"logic", "lindenbaum", "--atoms", "p", "--depth", "2"}, 0},
  };
  return all;
}

}  // namespace

TEST(Cli, GoldenOutputsAndExitCodes) {
  for (const auto& c : cases()) {
    Invocation r = kernel(c.args);
    EXPECT_EQ(r.exit_code, c.exit_code) << c.golden;
    EXPECT_EQ(r.output, golden(c.golden)) << c.golden;
  }
}

TEST(Cli, Deterministic) {
  for (const auto& c : cases()) EXPECT_EQ(kernel(c.args).output, kernel(c.args).output) << c.golden;
  Invocation a = kernel({"lawcheck", "all", "--seed", "11", "--budget", "tiny", "--format", "lines"});
  Invocation b = kernel({"lawcheck", "all", "--seed", "11", "--budget", "tiny", "--format", "lines"});
  EXPECT_EQ(a.output, b.output);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(kernel({}).exit_code, 2);
  EXPECT_EQ(kernel({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(kernel({"gambles", "frobnicate"}).exit_code, 2);
  EXPECT_EQ(kernel({"logic", "closure"}).exit_code, 2);
  EXPECT_EQ(kernel({"closure", "data/missing.univ"}).exit_code, 2);
  EXPECT_EQ(kernel({"closure", "data/U1.univ", "--set", "zz"}).exit_code, 2);
  EXPECT_EQ(kernel({"lawcheck", "nonsense"}).exit_code, 2);
  EXPECT_EQ(kernel({"lawcheck", "core", "--disable-axiom", "K9"}).exit_code, 2);
  EXPECT_EQ(kernel({"--format", "xml", "enumerate", "data/U1.univ"}).exit_code, 2);
  EXPECT_EQ(kernel({"--help"}).exit_code, 0);
}

TEST(Cli, CapacityOverridesNeedForce) {
  EXPECT_EQ(kernel({"--max-things", "14", "enumerate", "data/U2.univ"}).exit_code, 2);
  EXPECT_EQ(kernel({"--max-things", "14", "--force", "enumerate", "data/U2.univ"}).exit_code, 0);
  EXPECT_EQ(kernel({"enumerate", "data/U2.univ"}, "DESIRE_KERNEL_CAPACITY=20").exit_code, 2);
  EXPECT_EQ(kernel({"enumerate", "data/U2.univ", "--force"}, "DESIRE_KERNEL_CAPACITY=things=20").exit_code, 0);
  EXPECT_EQ(kernel({"enumerate", "data/U2.univ"}, "DESIRE_KERNEL_CAPACITY=bogus").exit_code, 2);
  // Lower bounds need no --force and are enforced.
  Invocation r = kernel({"--max-things", "2", "enumerate", "data/U2.univ"});
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.output.find("limit 2"), std::string::npos);
}

TEST(Cli, Lawcheck) {
  Invocation all = kernel({"lawcheck", "all", "--seed", "7"});
  // The logic representation law has a genuine counterexample.
  EXPECT_EQ(all.exit_code, 1);
  EXPECT_NE(all.output.find("FAIL logic: disjunction representation"), std::string::npos);
  EXPECT_NE(all.output.find("FAIL 56 laws, 55 passed, 1 failed"), std::string::npos);
  for (const char* suite : {"core", "sds", "filters", "gambles"})
    EXPECT_EQ(kernel({"lawcheck", suite, "--budget", "tiny"}).exit_code, 0) << suite;

  for (const char* axiom : {"K1", "K2", "K3", "K4", "K5"}) {
    Invocation r = kernel({"lawcheck", "sds", "--budget", "tiny", "--disable-axiom", axiom, "--format", "lines"});
    EXPECT_EQ(r.exit_code, 1) << axiom;
    EXPECT_NE(r.output.find("counterexample\tsds\t"), std::string::npos) << axiom;
  }
}
