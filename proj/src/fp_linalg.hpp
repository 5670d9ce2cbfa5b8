#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "errors.hpp"

namespace kodaira {

/// Exclusive upper bound for supported moduli. Keeping p below 2^20 lets
/// elimination accumulate millions of 40-bit products in one 64-bit word
/// before a reduction is due.
inline constexpr std::uint32_t kMaxModulus = 1u << 20;

/// Deterministic primality test by trial division (fast for p < 2^20).
bool is_prime(std::uint64_t m) noexcept;

/// Inverse of x in F_p. Throws ErrorCode::zero_inverse when x ≡ 0 (mod p).
std::uint32_t mod_inverse(std::uint64_t x, std::uint32_t p);

/// Element of the prime field F_p, stored as the canonical residue in [0, p).
/// The modulus is validated on construction: prime and below kMaxModulus.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint32_t modulus);
  static Fp from_signed(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const noexcept { return v_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  Fp operator+(Fp o) const;
  Fp operator-(Fp o) const;
  Fp operator*(Fp o) const;
  Fp operator-() const;
  Fp inverse() const;

  friend bool operator==(Fp a, Fp b) noexcept {
    return a.v_ == b.v_ && a.p_ == b.p_;
  }
  friend bool operator!=(Fp a, Fp b) noexcept { return !(a == b); }

 private:
  struct raw_tag {};
  Fp(std::uint32_t v, std::uint32_t p, raw_tag) noexcept : v_(v), p_(p) {}
  void require_same_field(Fp o) const;

  std::uint32_t v_;
  std::uint32_t p_;
};

/// Column-major sparse matrix over F_p. Each column holds (row, value)
/// entries sorted by row, without duplicates or stored zeros.
class SparseMatrixFp {
 public:
  struct Entry {
    std::uint32_t row;
    std::uint32_t value;  // in [1, p)
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseMatrixFp(std::size_t rows, std::size_t cols, std::uint32_t modulus);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint32_t modulus() const noexcept { return p_; }
  std::size_t entry_count() const noexcept { return entries_; }

  /// Replaces one column. Entries must be sorted by row, in range, nonzero.
  void set_column(std::size_t col, std::vector<Entry> entries);
  const std::vector<Entry>& column(std::size_t col) const;

  Fp at(std::size_t row, std::size_t col) const;
  std::vector<Fp> apply(const std::vector<Fp>& x) const;  // m * x
  SparseMatrixFp transposed() const;
  SparseMatrixFp with_extra_column(const std::vector<Fp>& v) const;

  /// Text dump: header "rows cols p", then one "row col value" triple per
  /// line, sorted column-major.
  void write_triples(std::ostream& out) const;
  static SparseMatrixFp read_triples(std::istream& in);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::vector<Entry>> columns_;
  std::size_t entries_ = 0;
};

struct RankOptions {
  /// Matrices with rows*cols at or below this bound are eliminated densely;
  /// larger ones go through the sparse fill-minimizing engine.
  std::uint64_t dense_budget = 200'000'000;

  enum class Engine { automatic, dense, sparse };
  Engine engine = Engine::automatic;
};

/// Exact rank over F_p. Deterministic: the dense engine processes columns
/// left to right and pivots on the smallest-index eligible row; the sparse
/// engine picks the (support, column-index)-minimal live column and the
/// lowest-degree row inside it. Either way the result is the rank.
std::size_t rank(const SparseMatrixFp& m, const RankOptions& opts = {});

struct Membership {
  bool in_span = false;
  /// Elimination-canonical solution (free variables zero) when in_span and
  /// the matrix fits the dense budget; empty otherwise.
  std::vector<Fp> solution;
};

struct SolveReport {
  Membership membership;
  std::size_t rank = 0;            // rank of m
  std::size_t augmented_rank = 0;  // rank of [m | v]
};

/// Decides whether v lies in the column span of m. Within the dense budget
/// the canonical coefficient vector is produced; beyond it the decision is
/// made by comparing rank(m) with rank([m | v]) and a positive answer
/// raises ErrorCode::budget_exceeded since no canonical solution can be
/// extracted cheaply.
SolveReport solve_with_rank(const SparseMatrixFp& m, const std::vector<Fp>& rhs,
                            const RankOptions& opts = {});

Membership solve_membership(const SparseMatrixFp& m, const std::vector<Fp>& rhs,
                            const RankOptions& opts = {});

}  // namespace kodaira
