// End-to-end checks of the installed command-line interface. The path to the
// built binary arrives as the positional argument after doctest's own flags:
//   test_cli -- /path/to/kodaira

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

std::string g_cli_path;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string command = g_cli_path + " " + args + " 2>&1";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("verify json output and exit code") {
  const RunResult r = run_cli("verify --n 3 --p 2 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["h_table"]["5"] == 1);
  CHECK(j["h_table"]["6"] == 6);
  CHECK(j["witness"]["in_image"] == false);
}

TEST_CASE("identical invocations produce identical bytes") {
  const RunResult a = run_cli("verify --n 3 --p 3 --format json");
  const RunResult b = run_cli("verify --n 3 --p 3 --format json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("validation failure: exit 1 with the exact message") {
  const RunResult r = run_cli("verify --n 4 --p 2");
  CHECK(r.exit_code == 1);
  CHECK(r.output == "p must be >= n-1 (= 3)\n");
}

TEST_CASE("budget failure: exit 3") {
  const RunResult r = run_cli("verify --n 3 --p 5 --budget 10");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("exceeds the build budget") != std::string::npos);
}

TEST_CASE("usage failure: exit 1") {
  CHECK(run_cli("verify --n 3").exit_code == 1);
  CHECK(run_cli("frobnicate").exit_code == 1);
  CHECK(run_cli("verify --n 3 --p 2 --format yaml").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("cohomology subcommand") {
  const RunResult zero = run_cli("cohomology --n 3 --a -2 --b 8 --format json");
  CHECK(zero.exit_code == 0);
  const auto j = nlohmann::json::parse(zero.output);
  CHECK(j["space"] == "Y(n=3)");
  CHECK(j["dims"].empty());

  const RunResult text = run_cli("cohomology --n 3 --a 0 --b 2");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("h^0 = 10") != std::string::npos);

  const RunResult pn = run_cli("cohomology --n 3 --a -5 --space pn --format csv");
  CHECK(pn.exit_code == 0);
  CHECK(pn.output.find("3,4") != std::string::npos);
}

TEST_CASE("sweep subcommand") {
  const RunResult csv = run_cli("sweep --n-min 3 --n-max 4 --p-max 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.rfind("n,p,rows,cols,rank,corank,kernel,witness_in_image,checks_passed\n",
                         0) == 0);
  CHECK(std::count(csv.output.begin(), csv.output.end(), '\n') == 4);
}

TEST_CASE("dump subcommand and --out files") {
  const std::string path = "cli_dump_test.mtx";
  const RunResult dump = run_cli("dump --n 3 --p 2 --out " + path);
  CHECK(dump.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "35 40 2");
  std::ifstream rows(path + ".rows");
  CHECK(rows.good());
  std::remove(path.c_str());
  std::remove((path + ".rows").c_str());
  std::remove((path + ".cols").c_str());

  const std::string out_path = "cli_report_test.json";
  const RunResult verify = run_cli("verify --n 3 --p 2 --format json --out " + out_path);
  CHECK(verify.exit_code == 0);
  std::ifstream report_in(out_path);
  REQUIRE(report_in.good());
  const auto j = nlohmann::json::parse(report_in);
  CHECK(j["rank"] == 34);
  std::remove(out_path.c_str());
}

TEST_CASE("verify --dump-matrix writes the sidecars too") {
  const std::string path = "cli_verify_dump.mtx";
  const RunResult r = run_cli("verify --n 3 --p 2 --format csv --dump-matrix " + path);
  CHECK(r.exit_code == 0);
  std::ifstream cols(path + ".cols");
  CHECK(cols.good());
  std::remove(path.c_str());
  std::remove((path + ".rows").c_str());
  std::remove((path + ".cols").c_str());
}

int main(int argc, char** argv) {
  doctest::Context context;
  context.applyCommandLine(argc, argv);
  if (argc > 1) {
    g_cli_path = argv[argc - 1];
  }
  if (g_cli_path.empty() || g_cli_path[0] == '-') {
    std::fprintf(stderr, "usage: test_cli [doctest options] -- /path/to/kodaira\n");
    return 1;
  }
  return context.run();
}
