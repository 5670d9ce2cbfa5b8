#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "incidence_ring.hpp"

namespace kodaira {

/// Exact dimension table for the cohomology of one line bundle. Absent keys
/// are zero; a disengaged optional marks a degree the long exact sequence
/// leaves unresolved.
struct CohomologyTable {
  std::string space;
  std::string bundle;
  int top_degree = 0;
  std::map<int, std::optional<std::uint64_t>> dims;

  /// Dimension at degree j: 0 when absent, nullopt when indeterminate.
  std::optional<std::uint64_t> dim(int j) const;
  bool fully_determinate() const;
  bool identically_zero() const;
  bool only_h0() const;

  std::string to_json() const;
  std::string to_text() const;
  std::string to_csv() const;
};

/// Dimension of H^j(P^n, O(d)): C(d+n,n) at j = 0 for d >= 0, C(-d-1,n) at
/// j = n for d <= -n-1, zero otherwise.
std::uint64_t bott_h(int n, std::int64_t d, int j);

/// Kunneth dimension of H^j(P^n x P^n, O(a,b)).
std::uint64_t product_h(int n, Bidegree d, int j);

CohomologyTable pn_cohomology(int n, std::int64_t d);
CohomologyTable product_cohomology(int n, Bidegree d);

/// Dimensions of H^j(Y, O(a,0,b)) resolved through the long exact sequence
/// of 0 -> O(a-1,b-1) -> O(a,b) -> O_Y(a,b) -> 0 on P^n x P^n. Each product
/// bundle has at most one nonvanishing degree; when the two coincide at an
/// interior degree the connecting rank is unknown and the affected entries
/// are marked indeterminate rather than guessed.
CohomologyTable y_cohomology(int n, Bidegree d);

}  // namespace kodaira
