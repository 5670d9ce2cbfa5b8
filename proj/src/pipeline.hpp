#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobenius.hpp"

namespace kodaira {

/// Symbolic degree bookkeeping for one (n, p): the very ample bundle L, the
/// canonical bundles of Y and X, and the twist M driving the computation.
struct BundleLabels {
  std::string L;        // O(1,n,1)
  std::string omega_Y;  // O(-n,0,-n)
  std::string omega_X;  // O(p-n,0,p(n-2)-n) (x) O_pi(-(n-1))
  std::string M;        // O(p-n+1,0,(p-1)(n-1))
  std::string M_twist;  // M (x) O(0,0,p)
  int dim_x = 0;        // 3n-3
  Bidegree m_degree;
  Bidegree target_degree;
};

BundleLabels line_bundle_bookkeeping(int n, std::int64_t p);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  int n = 0;
  std::uint32_t p = 0;
  int dim_x = 0;
  BundleLabels bundles;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  std::map<int, std::uint64_t> h_table;  // nonzero entries of i -> h^i(X, L^-1)
  bool witness_checked = false;
  bool witness_in_image = false;
  std::string witness;
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;

  std::size_t corank() const noexcept { return rows - rank; }
  std::size_t kernel() const noexcept { return cols - rank; }
  std::uint64_t h(int i) const;
  std::size_t checks_passed() const noexcept;
  bool all_checks_passed() const noexcept;

  std::string to_json() const;
  std::string to_text() const;
  std::string to_csv() const;  // header line + one data row
  static std::string csv_header();
  std::string csv_row() const;
};

struct VerifyOptions {
  std::uint64_t build_budget = kDefaultBuildBudget;
  std::uint64_t dense_budget = RankOptions{}.dense_budget;
  bool allow_small_p = false;
};

/// Runs the whole chain for one pair: assembles A, computes rank, corank and
/// the witness membership, fills the h-table, and evaluates every named
/// cross-check. A failed cross-check raises ErrorCode::check_failed — it
/// signals an implementation bug, not a mathematical discovery.
VerificationReport verify(int n, std::int64_t p, const VerifyOptions& opts = {});

struct SweepEntry {
  enum class Kind { report, skipped, error };
  Kind kind = Kind::report;
  int n = 0;
  std::uint64_t p = 0;
  std::optional<VerificationReport> report;
  std::string reason;  // skip reason or error message
};

struct SweepResult {
  std::vector<SweepEntry> entries;

  std::string to_csv() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// One report per valid pair with n in [n_min, n_max] and prime p in
/// [p_min, p_max], n ascending then p ascending. Pairs with p < n-1 are
/// skipped with a reason; per-pair failures are recorded in-line.
SweepResult sweep(int n_min, int n_max, std::int64_t p_min, std::int64_t p_max,
                  const VerifyOptions& opts = {});

}  // namespace kodaira
