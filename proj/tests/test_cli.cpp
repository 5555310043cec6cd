// End-to-end exercises of the command-line surface: exit codes, output
// formats, determinism. Driven through the binary named by MORDELL_CLI.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <regex>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  const char* cli = std::getenv("MORDELL_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "MORDELL_CLI must point at the binary");
  std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
    r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string strip_wall(std::string s) {
  return std::regex_replace(s, std::regex("\"wall_ms\":[0-9.e+-]+"),
                            "\"wall_ms\":0");
}

}  // namespace

TEST_CASE("verify passes and exits 0") {
  auto r = run_cli("verify --identity erf1 --alpha 1 --z 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("PASSED") != std::string::npos);
  CHECK(r.output.find("alpha-side") != std::string::npos);
  CHECK(r.output.find("xi-integral") != std::string::npos);
}

TEST_CASE("verify exact-full") {
  auto r = run_cli("verify --identity exact-full --k 1");
  CHECK(r.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  auto r = run_cli("verify --identity erf1 --alpha -1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("alpha must be positive") != std::string::npos);

  r = run_cli("verify --identity nope --alpha 1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("unknown identity") != std::string::npos);

  r = run_cli("verify --identity erf1 --alpha 1 --z '1 + 2i'");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("a+bi") != std::string::npos);

  r = run_cli("verify --identity erf1 --alpha 1 --z 9");
  CHECK(r.exit_code == 2);

  r = run_cli("bogus-subcommand");
  CHECK(r.exit_code == 2);
}

TEST_CASE("mathematical failure exits 1") {
  // crippled quadrature leaves the k = 10 cell outside print tolerance
  auto r = run_cli("table --k 10 --alpha 2.378 --compare-paper --quad-rel-tol 0.9");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find(",false") != std::string::npos);
}

TEST_CASE("json output is deterministic modulo wall time") {
  std::string args = "verify --identity erf1 --alpha 1,2 --z 0.5 --format json";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(strip_wall(a.output) == strip_wall(b.output));
  CHECK(a.output.find("\"identity\":\"erf1\"") != std::string::npos);
  CHECK(a.output.find("\"sides\":[{\"label\":\"alpha-side\"") != std::string::npos);
}

TEST_CASE("grid sweep runs every combination in order") {
  auto r = run_cli("verify --identity erf2 --alpha 0.5,2 --z 0.5,1 --format csv --parallelism 2");
  CHECK(r.exit_code == 0);
  // header + 4 rows
  int lines = 0;
  for (char c : r.output)
    if (c == '\n') ++lines;
  CHECK(lines == 5);
  CHECK(r.output.find("identity,alpha") == 0);
  CHECK(r.output.find("erf2,0.5,0.5") != std::string::npos);
}

TEST_CASE("table single cell and formats") {
  auto r = run_cli("table --alpha 1 --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("k,alpha,lhs,rhs") == 0);

  r = run_cli("table --alpha 1.5 --k 1 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[{\"k\":1,\"alpha\":1.5") == 0);

  r = run_cli("table --table unknown");
  CHECK(r.exit_code == 2);
}

TEST_CASE("asympt command") {
  auto r = run_cli("asympt --series oloa-z0 --alpha 10 --terms 4");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("quadrature reference") != std::string::npos);

  // regime gate: oloa below alpha = 10 demands --force
  r = run_cli("asympt --series oloa --alpha 5 --z 0.5");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("--force") != std::string::npos);
  r = run_cli("asympt --series oloa --alpha 12 --z 0.5 --terms 3");
  CHECK(r.exit_code == 0);

  // theta at z = 0: all terms vanish
  r = run_cli("asympt --series theta --alpha 0.05 --z 0 --terms 3 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"partial_sum\":{\"re\":0,\"im\":0}") != std::string::npos);

  r = run_cli("asympt --series i --alpha 0.05 --z 1 --optimal");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("truncation index") != std::string::npos);
}
