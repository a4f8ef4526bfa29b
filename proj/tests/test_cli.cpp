#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(GOG_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) {
  return std::string(GOG_TEST_DATA_DIR) + "/" + name;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GOG_TEST_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("validate: exit-code contract") {
  CHECK(run_cli("validate " + data("fix_a.gog.json")).exit_code == 0);
  CHECK(run_cli("validate " + data("bad_bar.gog.json")).exit_code == 1);
  CHECK(run_cli("validate " + data("malformed.json")).exit_code == 2);
  CHECK(run_cli("validate /nonexistent.json").exit_code == 2);
}

TEST_CASE("hzero on the fixture D plan: accepted word") {
  RunResult r = run_cli("hzero " + data("fix_d.plan.json") + " --word x^2 --inverse");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("hzero_x2.out"));
}

TEST_CASE("hzero on the fixture D plan: rejected word") {
  RunResult r = run_cli("hzero " + data("fix_d.plan.json") + " --word 'x y' --inverse");
  CHECK(r.exit_code == 1);
  CHECK(r.out == golden("hzero_xy.out"));
}

TEST_CASE("partial blow-up of the fixture D plans") {
  RunResult ok = run_cli("partial-blowup " + data("fix_d.plan.json"));
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == golden("partial_blowup_d.out"));

  RunResult bad = run_cli("partial-blowup " + data("fix_d_xy.plan.json"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.out == golden("partial_blowup_d_xy.out"));
}

TEST_CASE("roundtrip fixture C") {
  RunResult r = run_cli("roundtrip " + data("fix_c.gog.json") + " " + data("fix_c.iso.json") +
                        " --subgraph v,f");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("roundtrip_c.out"));
}

TEST_CASE("reduce reads words from stdin") {
  RunResult r = run_cli("reduce " + data("fix_b.gog.json") + " - < " + data("word_b.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("reduce_b.out"));
}

TEST_CASE("text format summarizes verdicts") {
  RunResult r = run_cli("--format text validate " + data("fix_a.gog.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == "valid\n");
  RunResult z = run_cli("--format text hzero " + data("fix_d.plan.json") +
                        " --word 'x y' --inverse");
  CHECK(z.exit_code == 1);
  CHECK(z.out == "not zero\n");
}

TEST_CASE("output is byte-stable across runs") {
  std::string args = "partial-blowup " + data("fix_d.plan.json");
  CHECK(run_cli(args).out == run_cli(args).out);
}
