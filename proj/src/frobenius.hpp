#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fp_linalg.hpp"
#include "incidence_ring.hpp"

namespace kodaira {

/// Default refusal threshold for assembling A: projected rows * cols above
/// this bound raise ErrorCode::budget_exceeded instead of thrashing.
inline constexpr std::uint64_t kDefaultBuildBudget = 400'000'000'000ull;

/// One instance of the multiplication map
///   A : V* (x) H^0(Y, M) -> H^0(Y, M (x) O(0,0,p)),
/// M = O(p-n+1, 0, (p-1)(n-1)), given on monomial bases by [Y_0^p ... Y_n^p].
struct FrobeniusProblem {
  int n = 3;
  std::uint32_t p = 2;
  bool exploratory = false;  // p < n-1 admitted by explicit override

  /// Validates n >= 3 and p prime; p >= n-1 unless allow_small_p.
  static FrobeniusProblem create(int n, std::int64_t p, bool allow_small_p = false);

  bool small_p() const noexcept { return static_cast<std::int64_t>(p) < n - 1; }
  Bidegree source_degree() const noexcept;
  Bidegree target_degree() const noexcept;
};

/// The witness t = X_n^{p+1-n} Y_0 Y_1^{p-1} ... Y_n^{p-1}, already in normal
/// form and of the target bidegree. Undefined for p < n-1.
Monomial witness_monomial(const FrobeniusProblem& prob);

struct FrobeniusMatrix {
  SparseMatrixFp matrix;
  std::vector<Monomial> source_basis;  // canonical order = inner column order
  std::vector<Monomial> target_basis;  // canonical order = row order

  /// Row index of a normal-form target monomial, if present.
  std::optional<std::size_t> target_index(const Monomial& m) const;
};

/// Assembles A with columns indexed by (i, source monomial), i major. Column
/// (i, m) holds the coordinates of the normal form of Y_i^p * m.
FrobeniusMatrix build_matrix(const FrobeniusProblem& prob,
                             std::uint64_t build_budget = kDefaultBuildBudget);

/// rows - rank(A) = dim H^{3n-4}(X, L^{-1}).
std::size_t corank(const FrobeniusProblem& prob,
                   std::uint64_t build_budget = kDefaultBuildBudget,
                   const RankOptions& rank_opts = {});

/// Whether the witness class lies in the column span of A.
bool witness_in_image(const FrobeniusProblem& prob,
                      std::uint64_t build_budget = kDefaultBuildBudget,
                      const RankOptions& rank_opts = {});

/// Coordinate vector of the witness in the target basis.
std::vector<Fp> witness_vector(const FrobeniusProblem& prob, const FrobeniusMatrix& fm);

/// Writes the triple-format dump to `path` plus `path.rows` / `path.cols`
/// sidecars mapping indices to monomial strings.
void dump_matrix(const FrobeniusProblem& prob, const std::string& path,
                 std::uint64_t build_budget = kDefaultBuildBudget);

}  // namespace kodaira
