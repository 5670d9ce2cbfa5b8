#include "frobenius.hpp"

#include <algorithm>
#include <fstream>

namespace kodaira {

FrobeniusProblem FrobeniusProblem::create(int n, std::int64_t p, bool allow_small_p) {
  if (n < 3) {
    fail(ErrorCode::invalid_input, "n must be >= 3, got " + std::to_string(n));
  }
  if (n > 64) {
    fail(ErrorCode::invalid_input, "n must be <= 64, got " + std::to_string(n));
  }
  if (p < 2 || p >= kMaxModulus || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorCode::invalid_input,
         "p must be a prime below 2^20, got " + std::to_string(p));
  }
  FrobeniusProblem prob;
  prob.n = n;
  prob.p = static_cast<std::uint32_t>(p);
  if (prob.small_p()) {
    if (!allow_small_p) {
      fail(ErrorCode::invalid_input, "p must be >= n-1 (= " + std::to_string(n - 1) + ")");
    }
    prob.exploratory = true;
  }
  return prob;
}

Bidegree FrobeniusProblem::source_degree() const noexcept {
  const std::int64_t pp = p;
  return Bidegree{pp - n + 1, (pp - 1) * (n - 1)};
}

Bidegree FrobeniusProblem::target_degree() const noexcept {
  const Bidegree src = source_degree();
  return Bidegree{src.a, src.b + static_cast<std::int64_t>(p)};
}

Monomial witness_monomial(const FrobeniusProblem& prob) {
  if (prob.small_p()) {
    fail(ErrorCode::invalid_input,
         "the witness monomial needs p >= n-1 (X_n would carry a negative exponent)");
  }
  const int n = prob.n;
  std::vector<std::uint32_t> x(n + 1, 0), y(n + 1, 0);
  x[n] = prob.p + 1 - static_cast<std::uint32_t>(n);
  y[0] = 1;
  for (int i = 1; i <= n; ++i) y[i] = prob.p - 1;
  return Monomial(std::move(x), std::move(y));
}

std::optional<std::size_t> FrobeniusMatrix::target_index(const Monomial& m) const {
  const auto it = std::lower_bound(target_basis.begin(), target_basis.end(), m,
                                   CanonicalBefore{});
  if (it == target_basis.end() || !(*it == m)) return std::nullopt;
  return static_cast<std::size_t>(it - target_basis.begin());
}

FrobeniusMatrix build_matrix(const FrobeniusProblem& prob, std::uint64_t build_budget) {
  const int n = prob.n;
  const Bidegree src = prob.source_degree();
  const Bidegree tgt = prob.target_degree();
  const std::uint64_t dim_src = src.a < 0 ? 0 : component_dimension(n, src);
  const std::uint64_t dim_tgt = tgt.a < 0 ? 0 : component_dimension(n, tgt);
  const std::uint64_t rows = dim_tgt;
  const std::uint64_t cols = static_cast<std::uint64_t>(n + 1) * dim_src;
  if (static_cast<unsigned __int128>(rows) * cols > build_budget) {
    fail(ErrorCode::budget_exceeded,
         "projected matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
             " exceeds the build budget of " + std::to_string(build_budget) + " entries");
  }

  FrobeniusMatrix fm{SparseMatrixFp(rows, cols, prob.p), {}, {}};
  if (dim_src == 0) return fm;
  fm.source_basis = monomial_basis(n, src);
  fm.target_basis = monomial_basis(n, tgt);

  for (int i = 0; i <= n; ++i) {
    const Monomial multiplier = Monomial::y_power(n, i, prob.p);
    for (std::size_t k = 0; k < fm.source_basis.size(); ++k) {
      const RingElement product =
          RingElement::from_monomial(fm.source_basis[k], prob.p).multiplied_by(multiplier);
      std::vector<SparseMatrixFp::Entry> entries;
      entries.reserve(product.terms().size());
      for (const auto& [mono, coeff] : product.terms()) {
        const auto row = fm.target_index(mono);
        if (!row) {
          fail(ErrorCode::check_failed,
               "product " + mono.str() + " is missing from the target basis");
        }
        entries.push_back({static_cast<std::uint32_t>(*row), coeff});
      }
      // terms() iterates in canonical (basis) order, so rows arrive sorted
      fm.matrix.set_column(static_cast<std::size_t>(i) * dim_src + k, std::move(entries));
    }
  }
  return fm;
}

std::size_t corank(const FrobeniusProblem& prob, std::uint64_t build_budget,
                   const RankOptions& rank_opts) {
  const FrobeniusMatrix fm = build_matrix(prob, build_budget);
  return fm.matrix.rows() - rank(fm.matrix, rank_opts);
}

std::vector<Fp> witness_vector(const FrobeniusProblem& prob, const FrobeniusMatrix& fm) {
  const Monomial t = witness_monomial(prob);
  const auto row = fm.target_index(t);
  if (!row) {
    fail(ErrorCode::check_failed, "witness " + t.str() + " is missing from the target basis");
  }
  std::vector<Fp> v(fm.matrix.rows(), Fp(0, prob.p));
  v[*row] = Fp(1, prob.p);
  return v;
}

bool witness_in_image(const FrobeniusProblem& prob, std::uint64_t build_budget,
                      const RankOptions& rank_opts) {
  const FrobeniusMatrix fm = build_matrix(prob, build_budget);
  return solve_membership(fm.matrix, witness_vector(prob, fm), rank_opts).in_span;
}

void dump_matrix(const FrobeniusProblem& prob, const std::string& path,
                 std::uint64_t build_budget) {
  const FrobeniusMatrix fm = build_matrix(prob, build_budget);

  std::ofstream matrix_out(path);
  if (!matrix_out) {
    fail(ErrorCode::io_error, "cannot open " + path + " for writing");
  }
  fm.matrix.write_triples(matrix_out);
  if (!matrix_out.good()) {
    fail(ErrorCode::io_error, "failed writing " + path);
  }

  std::ofstream rows_out(path + ".rows");
  if (!rows_out) {
    fail(ErrorCode::io_error, "cannot open " + path + ".rows for writing");
  }
  for (std::size_t r = 0; r < fm.target_basis.size(); ++r) {
    rows_out << r << ' ' << fm.target_basis[r].str() << '\n';
  }

  std::ofstream cols_out(path + ".cols");
  if (!cols_out) {
    fail(ErrorCode::io_error, "cannot open " + path + ".cols for writing");
  }
  const std::size_t dim_src = fm.source_basis.size();
  for (std::size_t c = 0; c < fm.matrix.cols(); ++c) {
    const std::size_t i = c / dim_src;
    const std::size_t k = c % dim_src;
    cols_out << c << ' ' << Monomial::y_power(prob.n, static_cast<int>(i), prob.p).str()
             << ' ' << fm.source_basis[k].str() << '\n';
  }
}

}  // namespace kodaira
