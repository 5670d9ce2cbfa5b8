#include "fp_linalg.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>

namespace kodaira {

bool is_prime(std::uint64_t m) noexcept {
  if (m < 2) return false;
  if (m % 2 == 0) return m == 2;
  for (std::uint64_t d = 3; d * d <= m; d += 2) {
    if (m % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint64_t x, std::uint32_t p) {
  const std::uint64_t r = x % p;
  if (r == 0) {
    fail(ErrorCode::zero_inverse, "zero has no inverse in F_" + std::to_string(p));
  }
  std::int64_t a = static_cast<std::int64_t>(r), b = p;
  std::int64_t u = 1, v = 0;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = u - q * v;
    u = v;
    v = t;
  }
  // a == gcd(r, p) == 1 because p is prime and r != 0
  u %= static_cast<std::int64_t>(p);
  if (u < 0) u += p;
  return static_cast<std::uint32_t>(u);
}

namespace {

void check_modulus(std::uint32_t p) {
  // One-entry cache: matrices and ring elements construct millions of
  // scalars over the same modulus.
  thread_local std::uint32_t validated = 0;
  if (p == validated) return;
  if (p >= kMaxModulus) {
    fail(ErrorCode::invalid_input,
         "modulus " + std::to_string(p) + " exceeds the supported bound 2^20");
  }
  if (!is_prime(p)) {
    fail(ErrorCode::invalid_input, "modulus " + std::to_string(p) + " is not prime");
  }
  validated = p;
}

}  // namespace

Fp::Fp(std::uint64_t value, std::uint32_t modulus)
    : v_(0), p_(modulus) {
  check_modulus(modulus);
  v_ = static_cast<std::uint32_t>(value % modulus);
}

Fp Fp::from_signed(std::int64_t value, std::uint32_t modulus) {
  check_modulus(modulus);
  std::int64_t r = value % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  return Fp(static_cast<std::uint32_t>(r), modulus, raw_tag{});
}

void Fp::require_same_field(Fp o) const {
  if (p_ != o.p_) {
    fail(ErrorCode::invalid_input,
         "mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
  }
}

Fp Fp::operator+(Fp o) const {
  require_same_field(o);
  std::uint32_t s = v_ + o.v_;
  if (s >= p_) s -= p_;
  return Fp(s, p_, raw_tag{});
}

Fp Fp::operator-(Fp o) const {
  require_same_field(o);
  std::uint32_t s = v_ + p_ - o.v_;
  if (s >= p_) s -= p_;
  return Fp(s, p_, raw_tag{});
}

Fp Fp::operator*(Fp o) const {
  require_same_field(o);
  const std::uint64_t prod = static_cast<std::uint64_t>(v_) * o.v_;
  return Fp(static_cast<std::uint32_t>(prod % p_), p_, raw_tag{});
}

Fp Fp::operator-() const {
  return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{});
}

Fp Fp::inverse() const { return Fp(mod_inverse(v_, p_), p_, raw_tag{}); }

SparseMatrixFp::SparseMatrixFp(std::size_t rows, std::size_t cols, std::uint32_t modulus)
    : rows_(rows), cols_(cols), p_(modulus), columns_(cols) {
  check_modulus(modulus);
}

void SparseMatrixFp::set_column(std::size_t col, std::vector<Entry> entries) {
  if (col >= cols_) {
    fail(ErrorCode::dimension_mismatch, "column index out of range");
  }
  std::uint64_t prev_row = std::numeric_limits<std::uint64_t>::max();
  for (const Entry& e : entries) {
    if (e.row >= rows_) {
      fail(ErrorCode::dimension_mismatch, "row index out of range");
    }
    if (prev_row != std::numeric_limits<std::uint64_t>::max() && e.row <= prev_row) {
      fail(ErrorCode::invalid_input, "column entries must be sorted by row without duplicates");
    }
    if (e.value == 0 || e.value >= p_) {
      fail(ErrorCode::invalid_input, "column entries must hold reduced nonzero values");
    }
    prev_row = e.row;
  }
  entries_ -= columns_[col].size();
  entries_ += entries.size();
  columns_[col] = std::move(entries);
}

const std::vector<SparseMatrixFp::Entry>& SparseMatrixFp::column(std::size_t col) const {
  if (col >= cols_) {
    fail(ErrorCode::dimension_mismatch, "column index out of range");
  }
  return columns_[col];
}

Fp SparseMatrixFp::at(std::size_t row, std::size_t col) const {
  const auto& c = column(col);
  const auto it = std::lower_bound(
      c.begin(), c.end(), row,
      [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != c.end() && it->row == row) return Fp(it->value, p_);
  return Fp(0, p_);
}

std::vector<Fp> SparseMatrixFp::apply(const std::vector<Fp>& x) const {
  if (x.size() != cols_) {
    fail(ErrorCode::dimension_mismatch, "vector length does not match column count");
  }
  std::vector<std::uint64_t> acc(rows_, 0);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (x[c].modulus() != p_) {
      fail(ErrorCode::invalid_input, "vector entries use a different modulus");
    }
    const std::uint64_t xc = x[c].value();
    if (xc == 0) continue;
    for (const Entry& e : columns_[c]) {
      acc[e.row] = (acc[e.row] + e.value * xc) % p_;
    }
  }
  std::vector<Fp> y;
  y.reserve(rows_);
  for (std::uint64_t v : acc) y.push_back(Fp(v, p_));
  return y;
}

SparseMatrixFp SparseMatrixFp::transposed() const {
  std::vector<std::vector<Entry>> t(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const Entry& e : columns_[c]) {
      t[e.row].push_back(Entry{static_cast<std::uint32_t>(c), e.value});
    }
  }
  SparseMatrixFp out(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.set_column(r, std::move(t[r]));  // already sorted: c was ascending
  }
  return out;
}

SparseMatrixFp SparseMatrixFp::with_extra_column(const std::vector<Fp>& v) const {
  if (v.size() != rows_) {
    fail(ErrorCode::dimension_mismatch, "vector length does not match row count");
  }
  SparseMatrixFp out(rows_, cols_ + 1, p_);
  for (std::size_t c = 0; c < cols_; ++c) {
    out.set_column(c, columns_[c]);
  }
  std::vector<Entry> extra;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r].modulus() != p_) {
      fail(ErrorCode::invalid_input, "vector entries use a different modulus");
    }
    if (!v[r].is_zero()) {
      extra.push_back(Entry{static_cast<std::uint32_t>(r), v[r].value()});
    }
  }
  out.set_column(cols_, std::move(extra));
  return out;
}

void SparseMatrixFp::write_triples(std::ostream& out) const {
  out << rows_ << ' ' << cols_ << ' ' << p_ << '\n';
  for (std::size_t c = 0; c < cols_; ++c) {
    for (const Entry& e : columns_[c]) {
      out << e.row << ' ' << c << ' ' << e.value << '\n';
    }
  }
}

SparseMatrixFp SparseMatrixFp::read_triples(std::istream& in) {
  std::size_t rows = 0, cols = 0;
  std::uint32_t p = 0;
  if (!(in >> rows >> cols >> p)) {
    fail(ErrorCode::io_error, "malformed matrix header, expected 'rows cols p'");
  }
  SparseMatrixFp m(rows, cols, p);
  std::vector<std::vector<Entry>> pending(cols);
  std::uint64_t row = 0, col = 0, value = 0;
  while (in >> row >> col >> value) {
    if (col >= cols) {
      fail(ErrorCode::io_error, "triple column index out of range");
    }
    if (row >= rows || value == 0 || value >= p) {
      fail(ErrorCode::io_error, "malformed matrix triple");
    }
    pending[col].push_back(Entry{static_cast<std::uint32_t>(row),
                                 static_cast<std::uint32_t>(value)});
  }
  if (!in.eof()) {
    fail(ErrorCode::io_error, "malformed matrix triple");
  }
  for (std::size_t c = 0; c < cols; ++c) {
    auto& entries = pending[c];
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
    m.set_column(c, std::move(entries));
  }
  return m;
}

namespace {

// ---------------------------------------------------------------------------
// Dense forward elimination.
//
// Rows live in one contiguous uint64 buffer and are reduced lazily: a row
// accumulates sums of factor*pivot products (each below 2^40) and is only
// reduced when it becomes a pivot row or when its leading entry is tested.
// With at most 2^22 pivots the accumulators stay below 2^62.
// ---------------------------------------------------------------------------
class DenseElimination {
 public:
  DenseElimination(const SparseMatrixFp& m, const std::vector<Fp>* rhs)
      : rows_(m.rows()),
        cols_(m.cols()),
        p_(m.modulus()),
        a_(rows_ * cols_, 0),
        has_rhs_(rhs != nullptr),
        pivot_row_(rows_, 0),
        pivot_row_of_col_(cols_, -1) {
    if (std::min(rows_, cols_) > (std::size_t{1} << 22)) {
      fail(ErrorCode::invalid_input,
           "dense elimination supports at most 2^22 pivots; use the sparse engine");
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      for (const auto& e : m.column(c)) {
        a_[static_cast<std::size_t>(e.row) * cols_ + c] = e.value;
      }
    }
    if (has_rhs_) {
      rhs_.reserve(rows_);
      for (const Fp& v : *rhs) rhs_.push_back(v.value());
    }
  }

  void run() {
    for (std::size_t c = 0; c < cols_; ++c) {
      // Pivot: smallest-index eligible row with a nonzero entry in column c.
      std::size_t pr = rows_;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (pivot_row_[r]) continue;
        std::uint64_t& head = a_[r * cols_ + c];
        head %= p_;
        if (head != 0) {
          pr = r;
          break;
        }
      }
      if (pr == rows_) continue;

      reduce_row(pr, c);
      const std::uint64_t inv = mod_inverse(a_[pr * cols_ + c], p_);
      const std::uint64_t* prow = &a_[pr * cols_];
      const std::uint64_t prhs = has_rhs_ ? rhs_[pr] : 0;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (pivot_row_[r] || r == pr) continue;
        std::uint64_t& head = a_[r * cols_ + c];
        head %= p_;
        if (head == 0) continue;
        const std::uint64_t f = p_ - (head * inv) % p_;
        head = 0;
        std::uint64_t* row = &a_[r * cols_];
        for (std::size_t j = c + 1; j < cols_; ++j) {
          row[j] += f * prow[j];
        }
        if (has_rhs_) rhs_[r] += f * prhs;
      }
      pivot_row_[pr] = 1;
      pivot_row_of_col_[c] = static_cast<std::int64_t>(pr);
      pivot_cols_.push_back(c);
    }
    if (has_rhs_) {
      for (std::uint64_t& v : rhs_) v %= p_;
    }
  }

  std::size_t rank() const noexcept { return pivot_cols_.size(); }

  bool rhs_in_span() const {
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!pivot_row_[r] && rhs_[r] != 0) return false;
    }
    return true;
  }

  // Back substitution on the pivot rows; free variables stay zero.
  std::vector<Fp> canonical_solution() const {
    std::vector<std::uint32_t> x(cols_, 0);
    for (auto it = pivot_cols_.rbegin(); it != pivot_cols_.rend(); ++it) {
      const std::size_t c = *it;
      const std::size_t r = static_cast<std::size_t>(pivot_row_of_col_[c]);
      const std::uint64_t* row = &a_[r * cols_];
      std::uint64_t acc = 0;
      std::uint32_t pending = 0;
      for (std::size_t j = c + 1; j < cols_; ++j) {
        acc += row[j] % p_ * x[j];  // both factors < p < 2^20
        if (++pending == (1u << 22)) {
          acc %= p_;
          pending = 0;
        }
      }
      acc %= p_;
      const std::uint64_t lead = row[c] % p_;
      const std::uint64_t num = (rhs_[r] + p_ - acc) % p_;
      x[c] = static_cast<std::uint32_t>(num * mod_inverse(lead, p_) % p_);
    }
    std::vector<Fp> out;
    out.reserve(cols_);
    for (std::uint32_t v : x) out.push_back(Fp(v, p_));
    return out;
  }

 private:
  void reduce_row(std::size_t r, std::size_t from_col) {
    std::uint64_t* row = &a_[r * cols_];
    for (std::size_t j = from_col; j < cols_; ++j) row[j] %= p_;
    if (has_rhs_) rhs_[r] %= p_;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> rhs_;
  bool has_rhs_;
  std::vector<char> pivot_row_;
  std::vector<std::int64_t> pivot_row_of_col_;
  std::vector<std::size_t> pivot_cols_;
};

// ---------------------------------------------------------------------------
// Sparse elimination with smallest-column-fill pivot preference.
//
// Live columns sit in a min-priority queue keyed by (support, column index);
// stale queue entries are skipped on pop. Picking support-1 columns first
// peels the permutation-like bulk of the matrices produced here without any
// fill-in, leaving a small residual for genuine combination steps.
// ---------------------------------------------------------------------------
class SparseElimination {
 public:
  explicit SparseElimination(const SparseMatrixFp& m)
      : p_(m.modulus()), cols_(m.cols()), row_cols_(m.rows()), col_done_(m.cols(), 0) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cols_[c].assign(m.column(c).begin(), m.column(c).end());
      for (const auto& e : cols_[c]) {
        row_cols_[e.row].push_back(static_cast<std::uint32_t>(c));
      }
      if (cols_[c].empty()) {
        col_done_[c] = 1;
      } else {
        queue_.push({cols_[c].size(), static_cast<std::uint32_t>(c)});
      }
    }
  }

  std::size_t run() {
    std::size_t rank = 0;
    while (!queue_.empty()) {
      const auto [support, c] = queue_.top();
      queue_.pop();
      if (col_done_[c] || cols_[c].size() != support) continue;  // stale

      // Pivot row: smallest (approximate degree, row index) inside column c.
      const SparseMatrixFp::Entry* best = nullptr;
      std::size_t best_degree = 0;
      for (const auto& e : cols_[c]) {
        const std::size_t degree = row_cols_[e.row].size();
        if (best == nullptr || degree < best_degree ||
            (degree == best_degree && e.row < best->row)) {
          best = &e;
          best_degree = degree;
        }
      }
      const std::uint32_t r = best->row;
      const std::uint64_t inv = mod_inverse(best->value, p_);

      ++rank;
      col_done_[c] = 1;
      const Column pivot = std::move(cols_[c]);
      cols_[c].clear();
      const std::vector<std::uint32_t> hit = std::move(row_cols_[r]);
      row_cols_[r].clear();

      for (const std::uint32_t c2 : hit) {
        if (c2 == c || col_done_[c2]) continue;
        eliminate(c2, pivot, r, inv);
      }
    }
    return rank;
  }

 private:
  using Column = std::vector<SparseMatrixFp::Entry>;

  // col2 <- col2 - (col2[r]/pivot[r]) * pivot, cancelling row r.
  void eliminate(std::uint32_t c2, const Column& pivot, std::uint32_t r,
                 std::uint64_t pivot_inv) {
    Column& target = cols_[c2];
    const auto it = std::lower_bound(
        target.begin(), target.end(), r,
        [](const SparseMatrixFp::Entry& e, std::uint32_t row) { return e.row < row; });
    if (it == target.end() || it->row != r) return;  // stale row_cols entry
    const std::uint64_t factor = (it->value * pivot_inv) % p_;

    Column merged;
    merged.reserve(target.size() + pivot.size());
    auto ti = target.cbegin();
    auto pi = pivot.cbegin();
    while (ti != target.cend() || pi != pivot.cend()) {
      if (pi == pivot.cend() || (ti != target.cend() && ti->row < pi->row)) {
        if (ti->row != r) merged.push_back(*ti);
        ++ti;
      } else if (ti == target.cend() || pi->row < ti->row) {
        if (pi->row != r) {
          const std::uint64_t nv = (p_ - factor * pi->value % p_) % p_;
          if (nv != 0) {
            merged.push_back({pi->row, static_cast<std::uint32_t>(nv)});
            row_cols_[pi->row].push_back(c2);
          }
        }
        ++pi;
      } else {  // same row in both columns
        if (ti->row != r) {
          const std::uint64_t nv = (ti->value + p_ - factor * pi->value % p_) % p_;
          if (nv != 0) {
            merged.push_back({ti->row, static_cast<std::uint32_t>(nv)});
          }
        }
        ++ti;
        ++pi;
      }
    }
    target = std::move(merged);
    if (target.empty()) {
      col_done_[c2] = 1;
    } else {
      queue_.push({target.size(), c2});
    }
  }

  std::uint64_t p_;
  std::vector<Column> cols_;
  std::vector<std::vector<std::uint32_t>> row_cols_;
  std::vector<char> col_done_;
  using Key = std::pair<std::size_t, std::uint32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> queue_;
};

}  // namespace

namespace {

bool use_dense(const SparseMatrixFp& m, const RankOptions& opts, std::size_t extra_cols) {
  if (opts.engine == RankOptions::Engine::dense) return true;
  if (opts.engine == RankOptions::Engine::sparse) return false;
  const unsigned __int128 cells =
      static_cast<unsigned __int128>(m.rows()) * (m.cols() + extra_cols);
  if (cells > opts.dense_budget) return false;
  // Keeps lazy-reduction accumulators clear of 64-bit overflow.
  return std::min(m.rows(), m.cols() + extra_cols) <= (std::size_t{1} << 22);
}

std::size_t sparse_rank(const SparseMatrixFp& m) {
  SparseElimination e(m);
  return e.run();
}

std::size_t dense_rank(const SparseMatrixFp& m) {
  DenseElimination e(m, nullptr);
  e.run();
  return e.rank();
}

}  // namespace

std::size_t rank(const SparseMatrixFp& m, const RankOptions& opts) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return use_dense(m, opts, 0) ? dense_rank(m) : sparse_rank(m);
}

SolveReport solve_with_rank(const SparseMatrixFp& m, const std::vector<Fp>& rhs,
                            const RankOptions& opts) {
  if (rhs.size() != m.rows()) {
    fail(ErrorCode::dimension_mismatch, "right-hand side length does not match row count");
  }
  bool rhs_zero = true;
  for (const Fp& v : rhs) {
    if (v.modulus() != m.modulus()) {
      fail(ErrorCode::invalid_input, "right-hand side uses a different modulus");
    }
    if (!v.is_zero()) rhs_zero = false;
  }
  if (rhs_zero) {
    const std::size_t r = rank(m, opts);
    Membership mem{true, std::vector<Fp>(m.cols(), Fp(0, m.modulus()))};
    return SolveReport{std::move(mem), r, r};
  }

  if (use_dense(m, opts, 1)) {
    DenseElimination e(m, &rhs);
    e.run();
    SolveReport report;
    report.rank = e.rank();
    report.membership.in_span = e.rhs_in_span();
    report.augmented_rank = report.rank + (report.membership.in_span ? 0 : 1);
    if (report.membership.in_span) {
      report.membership.solution = e.canonical_solution();
      if (m.apply(report.membership.solution) != rhs) {
        fail(ErrorCode::check_failed, "canonical solution does not reproduce the right-hand side");
      }
    }
    return report;
  }

  const RankOptions sparse_opts{opts.dense_budget, RankOptions::Engine::sparse};
  SolveReport report;
  report.rank = rank(m, sparse_opts);
  report.augmented_rank = rank(m.with_extra_column(rhs), sparse_opts);
  report.membership.in_span = (report.augmented_rank == report.rank);
  if (report.membership.in_span) {
    fail(ErrorCode::budget_exceeded,
         "a solution exists but canonical extraction needs dense elimination; "
         "matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
         " exceeds the dense budget");
  }
  return report;
}

Membership solve_membership(const SparseMatrixFp& m, const std::vector<Fp>& rhs,
                            const RankOptions& opts) {
  return solve_with_rank(m, rhs, opts).membership;
}

}  // namespace kodaira
