// Command-line front end. Talks to the core exclusively through the C API in
// kodaira/kodaira.h, so it doubles as a smoke test of the shared library.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "kodaira/kodaira.h"

namespace {

int status_to_exit(kodaira_status status) {
  switch (status) {
    case KODAIRA_OK:
      return 0;
    case KODAIRA_ERR_INVALID_INPUT:
    case KODAIRA_ERR_IO:
      return 1;
    case KODAIRA_ERR_CHECK_FAILED:
    case KODAIRA_ERR_INTERNAL:
      return 2;
    case KODAIRA_ERR_BUDGET:
      return 3;
  }
  return 2;
}

int report_failure(kodaira_status status) {
  std::cerr << kodaira_last_error() << '\n';
  return status_to_exit(status);
}

int emit(const std::string& payload, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return 0;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 1;
  }
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << '\n';
  if (!out.good()) {
    std::cerr << "failed writing " << out_path << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "kodaira: exact verifier for characteristic-p failures of Kodaira vanishing.\n"
      "For a pair (n, p) it assembles the Frobenius multiplication matrix on the\n"
      "incidence variety Y in P^n x P^n and computes every h^i(X, L^-1), L = O(1,n,1),\n"
      "by exact linear algebra over F_p."};
  app.require_subcommand(1);

  int n = 3;
  long long p = 2;
  long long budget = 0;  // 0 = library default (4e11 projected entries)
  bool allow_small_p = false;
  std::string format = "text";
  std::string out_path;
  std::string dump_path;

  auto* verify = app.add_subcommand(
      "verify", "verify one pair (n, p): matrix, rank, h-table, witness, cross-checks");
  verify->add_option("--n", n, "projective dimension parameter, n >= 3")->required();
  verify->add_option("--p", p, "prime characteristic, p >= n-1")->required();
  verify->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  verify->add_option("--dump-matrix", dump_path,
                     "also write the assembled matrix and basis sidecars to this path");
  verify->add_flag("--allow-small-p", allow_small_p,
                   "admit exploratory runs with p < n-1 (no geometric claim)");
  verify->add_option("--budget", budget,
                     "max projected rows*cols of the assembled matrix (default 4e11)");
  verify->add_option("--out", out_path, "write output to this file instead of stdout");

  int n_min = 3, n_max = 3;
  long long p_max = 2;
  auto* sweep = app.add_subcommand("sweep", "verify every valid pair in a range");
  sweep->add_option("--n-min", n_min, "smallest n")->required();
  sweep->add_option("--n-max", n_max, "largest n")->required();
  sweep->add_option("--p-max", p_max, "largest prime to try (p runs from 2)")->required();
  sweep->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  sweep->add_option("--budget", budget, "max projected rows*cols per matrix");
  sweep->add_option("--out", out_path, "write output to this file instead of stdout");

  long long coh_a = 0, coh_b = 0;
  std::string space = "y";
  auto* cohomology = app.add_subcommand(
      "cohomology", "dimension table of one line bundle: O(a,0,b) on Y, O(a,b) on the "
                    "product, or O(a) on P^n");
  cohomology->add_option("--n", n, "projective dimension parameter")->required();
  cohomology->add_option("--a", coh_a, "first twist (the only one for --space pn)")
      ->required();
  cohomology->add_option("--b", coh_b, "second twist (ignored for --space pn)");
  cohomology->add_option("--space", space, "which space to compute on")
      ->check(CLI::IsMember({"y", "product", "pn"}))
      ->capture_default_str();
  cohomology->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cohomology->add_option("--out", out_path, "write output to this file instead of stdout");

  auto* dump = app.add_subcommand(
      "dump", "write the matrix of A in triple format plus .rows/.cols sidecars");
  dump->add_option("--n", n, "projective dimension parameter")->required();
  dump->add_option("--p", p, "prime characteristic")->required();
  dump->add_option("--out", out_path, "output path for the matrix file")->required();
  dump->add_flag("--allow-small-p", allow_small_p, "admit p < n-1");
  dump->add_option("--budget", budget, "max projected rows*cols of the matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help
    }
    std::cerr << e.what() << '\n';
    return 1;
  }

  if (verify->parsed()) {
    kodaira_report* report = nullptr;
    const kodaira_status status =
        kodaira_verify(n, p, budget, allow_small_p ? 1 : 0, &report);
    if (status != KODAIRA_OK) return report_failure(status);
    std::string payload;
    if (format == "json") {
      payload = kodaira_report_json(report);
    } else if (format == "csv") {
      payload = kodaira_report_csv(report);
    } else {
      payload = kodaira_report_text(report);
    }
    kodaira_report_free(report);
    int rc = emit(payload, out_path);
    if (rc != 0) return rc;
    if (!dump_path.empty()) {
      const kodaira_status dump_status =
          kodaira_dump_matrix(n, p, dump_path.c_str(), budget, allow_small_p ? 1 : 0);
      if (dump_status != KODAIRA_OK) return report_failure(dump_status);
    }
    return 0;
  }

  if (sweep->parsed()) {
    kodaira_sweep* result = nullptr;
    const kodaira_status status = kodaira_sweep_run(n_min, n_max, 2, p_max, budget, &result);
    if (status != KODAIRA_OK) return report_failure(status);
    std::string payload;
    if (format == "json") {
      payload = kodaira_sweep_json(result);
    } else if (format == "csv") {
      payload = kodaira_sweep_csv(result);
    } else {
      payload = kodaira_sweep_text(result);
    }
    kodaira_sweep_free(result);
    return emit(payload, out_path);
  }

  if (cohomology->parsed()) {
    kodaira_table* table = nullptr;
    kodaira_status status = KODAIRA_OK;
    if (space == "y") {
      status = kodaira_cohomology_y(n, coh_a, coh_b, &table);
    } else if (space == "product") {
      status = kodaira_cohomology_product(n, coh_a, coh_b, &table);
    } else {
      status = kodaira_cohomology_pn(n, coh_a, &table);
    }
    if (status != KODAIRA_OK) return report_failure(status);
    std::string payload;
    if (format == "json") {
      payload = kodaira_table_json(table);
    } else if (format == "csv") {
      payload = kodaira_table_csv(table);
    } else {
      payload = kodaira_table_text(table);
    }
    kodaira_table_free(table);
    return emit(payload, out_path);
  }

  // dump
  const kodaira_status status =
      kodaira_dump_matrix(n, p, out_path.c_str(), budget, allow_small_p ? 1 : 0);
  if (status != KODAIRA_OK) return report_failure(status);
  return 0;
}
