#include "kodaira/kodaira.h"

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "cohomology.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "pipeline.hpp"

struct kodaira_report {
  kodaira::VerificationReport report;
  std::string json;
  std::string text;
  std::string csv;
};

struct kodaira_sweep {
  std::vector<kodaira_report> reports;
  size_t skipped = 0;
  std::string json;
  std::string text;
  std::string csv;
};

struct kodaira_table {
  kodaira::CohomologyTable table;
  std::string json;
  std::string text;
  std::string csv;
};

namespace {

thread_local std::string g_last_error = "no error";

kodaira_status map_code(kodaira::ErrorCode code) {
  switch (code) {
    case kodaira::ErrorCode::budget_exceeded:
      return KODAIRA_ERR_BUDGET;
    case kodaira::ErrorCode::check_failed:
      return KODAIRA_ERR_CHECK_FAILED;
    case kodaira::ErrorCode::io_error:
      return KODAIRA_ERR_IO;
    default:
      return KODAIRA_ERR_INVALID_INPUT;
  }
}

template <typename Fn>
kodaira_status guarded(Fn&& fn) {
  try {
    fn();
    return KODAIRA_OK;
  } catch (const kodaira::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KODAIRA_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return KODAIRA_ERR_INTERNAL;
  }
}

kodaira_report make_report(kodaira::VerificationReport&& r) {
  kodaira_report out;
  out.json = r.to_json();
  out.text = r.to_text();
  out.csv = r.to_csv();
  out.report = std::move(r);
  return out;
}

kodaira_table* make_table(kodaira::CohomologyTable&& t) {
  auto* out = new kodaira_table;
  out->json = t.to_json();
  out->text = t.to_text();
  out->csv = t.to_csv();
  out->table = std::move(t);
  return out;
}

kodaira::VerifyOptions make_options(long long budget_entries, int allow_small_p) {
  kodaira::VerifyOptions opts;
  if (budget_entries < 0) {
    kodaira::fail(kodaira::ErrorCode::invalid_input, "budget must be nonnegative");
  }
  if (budget_entries > 0) {
    opts.build_budget = static_cast<std::uint64_t>(budget_entries);
  }
  opts.allow_small_p = allow_small_p != 0;
  return opts;
}

}  // namespace

extern "C" {

const char* kodaira_version(void) { return "1.0.0"; }

const char* kodaira_last_error(void) { return g_last_error.c_str(); }

kodaira_status kodaira_verify(int n, long long p, long long budget_entries,
                              int allow_small_p, kodaira_report** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    const kodaira::VerifyOptions opts = make_options(budget_entries, allow_small_p);
    auto report = kodaira::verify(n, p, opts);
    *out = new kodaira_report(make_report(std::move(report)));
  });
}

void kodaira_report_free(kodaira_report* report) { delete report; }

int kodaira_report_n(const kodaira_report* r) { return r->report.n; }
long long kodaira_report_p(const kodaira_report* r) { return r->report.p; }
int kodaira_report_dim_x(const kodaira_report* r) { return r->report.dim_x; }
long long kodaira_report_rows(const kodaira_report* r) {
  return static_cast<long long>(r->report.rows);
}
long long kodaira_report_cols(const kodaira_report* r) {
  return static_cast<long long>(r->report.cols);
}
long long kodaira_report_rank(const kodaira_report* r) {
  return static_cast<long long>(r->report.rank);
}
long long kodaira_report_corank(const kodaira_report* r) {
  return static_cast<long long>(r->report.corank());
}
long long kodaira_report_kernel(const kodaira_report* r) {
  return static_cast<long long>(r->report.kernel());
}

long long kodaira_report_h(const kodaira_report* r, int i) {
  return static_cast<long long>(r->report.h(i));
}

int kodaira_report_witness_in_image(const kodaira_report* r) {
  if (!r->report.witness_checked) return -1;
  return r->report.witness_in_image ? 1 : 0;
}

const char* kodaira_report_witness_monomial(const kodaira_report* r) {
  return r->report.witness.c_str();
}

int kodaira_report_check_count(const kodaira_report* r) {
  return static_cast<int>(r->report.checks.size());
}

const char* kodaira_report_check_name(const kodaira_report* r, int idx) {
  if (idx < 0 || idx >= kodaira_report_check_count(r)) return "";
  return r->report.checks[static_cast<size_t>(idx)].name.c_str();
}

int kodaira_report_check_passed(const kodaira_report* r, int idx) {
  if (idx < 0 || idx >= kodaira_report_check_count(r)) return 0;
  return r->report.checks[static_cast<size_t>(idx)].passed ? 1 : 0;
}

int kodaira_report_warning_count(const kodaira_report* r) {
  return static_cast<int>(r->report.warnings.size());
}

const char* kodaira_report_warning(const kodaira_report* r, int idx) {
  if (idx < 0 || idx >= kodaira_report_warning_count(r)) return "";
  return r->report.warnings[static_cast<size_t>(idx)].c_str();
}

const char* kodaira_report_json(const kodaira_report* r) { return r->json.c_str(); }
const char* kodaira_report_text(const kodaira_report* r) { return r->text.c_str(); }
const char* kodaira_report_csv(const kodaira_report* r) { return r->csv.c_str(); }

kodaira_status kodaira_sweep_run(int n_min, int n_max, long long p_min, long long p_max,
                                 long long budget_entries, kodaira_sweep** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    const kodaira::VerifyOptions opts = make_options(budget_entries, 0);
    kodaira::SweepResult result = kodaira::sweep(n_min, n_max, p_min, p_max, opts);
    auto* sweep = new kodaira_sweep;
    sweep->json = result.to_json();
    sweep->text = result.to_text();
    sweep->csv = result.to_csv();
    for (kodaira::SweepEntry& e : result.entries) {
      if (e.kind == kodaira::SweepEntry::Kind::report) {
        sweep->reports.push_back(make_report(std::move(*e.report)));
      } else if (e.kind == kodaira::SweepEntry::Kind::skipped) {
        ++sweep->skipped;
      }
    }
    *out = sweep;
  });
}

void kodaira_sweep_free(kodaira_sweep* sweep) { delete sweep; }

size_t kodaira_sweep_report_count(const kodaira_sweep* sweep) {
  return sweep->reports.size();
}

const kodaira_report* kodaira_sweep_report(const kodaira_sweep* sweep, size_t idx) {
  if (idx >= sweep->reports.size()) return nullptr;
  return &sweep->reports[idx];
}

size_t kodaira_sweep_skipped_count(const kodaira_sweep* sweep) { return sweep->skipped; }

const char* kodaira_sweep_json(const kodaira_sweep* sweep) { return sweep->json.c_str(); }
const char* kodaira_sweep_text(const kodaira_sweep* sweep) { return sweep->text.c_str(); }
const char* kodaira_sweep_csv(const kodaira_sweep* sweep) { return sweep->csv.c_str(); }

kodaira_status kodaira_cohomology_y(int n, long long a, long long b, kodaira_table** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    *out = make_table(kodaira::y_cohomology(n, kodaira::Bidegree{a, b}));
  });
}

kodaira_status kodaira_cohomology_product(int n, long long a, long long b,
                                          kodaira_table** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] {
    *out = make_table(kodaira::product_cohomology(n, kodaira::Bidegree{a, b}));
  });
}

kodaira_status kodaira_cohomology_pn(int n, long long d, kodaira_table** out) {
  if (out == nullptr) {
    g_last_error = "output pointer is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded([&] { *out = make_table(kodaira::pn_cohomology(n, d)); });
}

void kodaira_table_free(kodaira_table* table) { delete table; }

int kodaira_table_top_degree(const kodaira_table* table) { return table->table.top_degree; }

long long kodaira_table_dim(const kodaira_table* table, int j) {
  const auto v = table->table.dim(j);
  if (!v.has_value()) return -1;
  return static_cast<long long>(*v);
}

const char* kodaira_table_json(const kodaira_table* t) { return t->json.c_str(); }
const char* kodaira_table_text(const kodaira_table* t) { return t->text.c_str(); }
const char* kodaira_table_csv(const kodaira_table* t) { return t->csv.c_str(); }

kodaira_status kodaira_dump_matrix(int n, long long p, const char* path,
                                   long long budget_entries, int allow_small_p) {
  if (path == nullptr) {
    g_last_error = "path is NULL";
    return KODAIRA_ERR_INVALID_INPUT;
  }
  return guarded([&] {
    const kodaira::VerifyOptions opts = make_options(budget_entries, allow_small_p);
    const kodaira::FrobeniusProblem prob =
        kodaira::FrobeniusProblem::create(n, p, opts.allow_small_p);
    kodaira::dump_matrix(prob, path, opts.build_budget);
  });
}

}  // extern "C"
