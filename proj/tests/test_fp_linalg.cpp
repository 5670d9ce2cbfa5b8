#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "fp_linalg.hpp"
#include "oracles.hpp"

using namespace kodaira;

namespace {

SparseMatrixFp from_dense(const std::vector<std::vector<int>>& rows, std::uint32_t p) {
  const std::size_t r = rows.size();
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  SparseMatrixFp m(r, c, p);
  for (std::size_t col = 0; col < c; ++col) {
    std::vector<SparseMatrixFp::Entry> entries;
    for (std::size_t row = 0; row < r; ++row) {
      const std::uint32_t v = static_cast<std::uint32_t>(((rows[row][col] % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p));
      if (v != 0) entries.push_back({static_cast<std::uint32_t>(row), v});
    }
    m.set_column(col, std::move(entries));
  }
  return m;
}

SparseMatrixFp random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols,
                             std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
  std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
  for (auto& row : dense) {
    for (auto& v : row) v = static_cast<int>(value(rng));
  }
  return from_dense(dense, p);
}

std::vector<Fp> column_vector(const SparseMatrixFp& m, std::size_t col) {
  std::vector<Fp> v(m.rows(), Fp(0, m.modulus()));
  for (const auto& e : m.column(col)) v[e.row] = Fp(e.value, m.modulus());
  return v;
}

}  // namespace

TEST_CASE("modulus validation") {
  CHECK_THROWS_AS(Fp(1, 4), Error);
  CHECK_THROWS_AS(Fp(1, 1), Error);
  CHECK_THROWS_AS(Fp(1, 1u << 20), Error);
  CHECK(Fp(5, 3).value() == 2);
  CHECK(is_prime(2));
  CHECK(is_prime(1048573));  // largest prime below 2^20
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(1048575));
}

TEST_CASE("scalar arithmetic") {
  CHECK(Fp(3, 7).inverse().value() == 5);
  CHECK(Fp(1, 2).inverse().value() == 1);
  CHECK(Fp(4, 5).inverse().value() == 4);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), Error);
  CHECK(Fp::from_signed(-1, 7).value() == 6);
  CHECK((Fp(4, 5) + Fp(3, 5)).value() == 2);
  CHECK((Fp(1, 5) - Fp(3, 5)).value() == 3);
  CHECK((-Fp(2, 5)).value() == 3);
  CHECK_THROWS_AS(Fp(1, 3) + Fp(1, 5), Error);
}

TEST_CASE("scalar arithmetic properties") {
  std::mt19937 rng(7);
  for (const std::uint32_t p : {2u, 3u, 5u, 65521u}) {
    std::uniform_int_distribution<std::uint32_t> value(0, p - 1);
    for (int i = 0; i < 200; ++i) {
      const Fp a(value(rng), p), b(value(rng), p), c(value(rng), p);
      CHECK(a + b == b + a);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Fp(0, p));
      if (!b.is_zero()) {
        CHECK(b * b.inverse() == Fp(1, p));
      }
    }
  }
}

TEST_CASE("matrix validation") {
  SparseMatrixFp m(3, 2, 5);
  CHECK_THROWS_AS(m.set_column(2, {}), Error);
  CHECK_THROWS_AS(m.set_column(0, {{3, 1}}), Error);
  CHECK_THROWS_AS(m.set_column(0, {{1, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(m.set_column(0, {{1, 2}, {0, 1}}), Error);
  CHECK_THROWS_AS(m.set_column(0, {{0, 0}}), Error);
  CHECK_THROWS_AS(m.set_column(0, {{0, 5}}), Error);
  m.set_column(0, {{0, 1}, {2, 4}});
  CHECK(m.entry_count() == 2);
  CHECK(m.at(0, 0).value() == 1);
  CHECK(m.at(1, 0).value() == 0);
}

TEST_CASE("rank examples") {
  const SparseMatrixFp identity = from_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5);
  CHECK(rank(identity) == 3);
  // second column is twice the first
  const SparseMatrixFp dependent = from_dense({{1, 2}, {2, 4}}, 5);
  CHECK(rank(dependent) == 1);
  const SparseMatrixFp zero(4, 3, 3);
  CHECK(rank(zero) == 0);
  const SparseMatrixFp empty(0, 0, 2);
  CHECK(rank(empty) == 0);
}

TEST_CASE("rank agrees with the span-enumeration oracle on both engines") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    for (int i = 0; i < 25; ++i) {
      const SparseMatrixFp m = random_matrix(rng, dim(rng), dim(rng), p);
      const std::size_t expected = oracle::spanning_rank(m);
      CHECK(rank(m, {.engine = RankOptions::Engine::dense}) == expected);
      CHECK(rank(m, {.engine = RankOptions::Engine::sparse}) == expected);
    }
  }
}

TEST_CASE("rank is invariant under row permutation") {
  std::mt19937 rng(13);
  for (int i = 0; i < 20; ++i) {
    const SparseMatrixFp m = random_matrix(rng, 6, 5, 5);
    std::vector<std::uint32_t> perm(m.rows());
    for (std::size_t r = 0; r < perm.size(); ++r) perm[r] = static_cast<std::uint32_t>(r);
    std::shuffle(perm.begin(), perm.end(), rng);
    SparseMatrixFp permuted(m.rows(), m.cols(), m.modulus());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::vector<SparseMatrixFp::Entry> entries;
      for (const auto& e : m.column(c)) entries.push_back({perm[e.row], e.value});
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.row < b.row; });
      permuted.set_column(c, std::move(entries));
    }
    CHECK(rank(m) == rank(permuted));
    CHECK(rank(m) == rank(m));  // deterministic repeat
    CHECK(rank(m) <= std::min(m.rows(), m.cols()));
  }
}

TEST_CASE("transpose preserves rank and entries") {
  std::mt19937 rng(17);
  const SparseMatrixFp m = random_matrix(rng, 5, 7, 3);
  const SparseMatrixFp t = m.transposed();
  CHECK(t.rows() == m.cols());
  CHECK(t.cols() == m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      CHECK(m.at(r, c) == t.at(c, r));
    }
  }
  CHECK(rank(m) == rank(t));
}

TEST_CASE("membership examples") {
  const SparseMatrixFp id2 = from_dense({{1, 0}, {0, 1}}, 3);
  const Membership direct = solve_membership(id2, {Fp(1, 3), Fp(2, 3)});
  REQUIRE(direct.in_span);
  CHECK(direct.solution == std::vector<Fp>{Fp(1, 3), Fp(2, 3)});

  const SparseMatrixFp tall = from_dense({{1}, {0}}, 5);
  const Membership miss = solve_membership(tall, {Fp(0, 5), Fp(1, 5)});
  CHECK_FALSE(miss.in_span);

  // the zero vector is always reachable with the zero coefficients
  const Membership zero = solve_membership(tall, {Fp(0, 5), Fp(0, 5)});
  REQUIRE(zero.in_span);
  CHECK(zero.solution == std::vector<Fp>{Fp(0, 5)});
}

TEST_CASE("membership of a column uses canonical coefficients") {
  std::mt19937 rng(19);
  for (int i = 0; i < 20; ++i) {
    const SparseMatrixFp m = random_matrix(rng, 5, 4, 5);
    const std::vector<Fp> v = column_vector(m, 0);
    const Membership mem = solve_membership(m, v);
    REQUIRE(mem.in_span);
    CHECK(m.apply(mem.solution) == v);
  }
  // duplicated column: the canonical solution puts the weight on the first
  const SparseMatrixFp dup = from_dense({{2, 2}, {1, 1}}, 5);
  const Membership mem = solve_membership(dup, {Fp(2, 5), Fp(1, 5)});
  REQUIRE(mem.in_span);
  CHECK(mem.solution == std::vector<Fp>{Fp(1, 5), Fp(0, 5)});
}

TEST_CASE("not-in-span vectors extend the rank by one") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<std::uint32_t> value(0, 4);
  for (int i = 0; i < 30; ++i) {
    const SparseMatrixFp m = random_matrix(rng, 5, 3, 5);
    std::vector<Fp> v;
    for (std::size_t r = 0; r < 5; ++r) v.push_back(Fp(value(rng), 5));
    const SolveReport report = solve_with_rank(m, v);
    CHECK(report.rank == rank(m));
    if (report.membership.in_span) {
      CHECK(report.augmented_rank == report.rank);
      CHECK(m.apply(report.membership.solution) == v);
    } else {
      CHECK(report.augmented_rank == report.rank + 1);
      CHECK(rank(m.with_extra_column(v)) == report.rank + 1);
    }
  }
}

TEST_CASE("solve routing beyond the dense budget") {
  const SparseMatrixFp m = from_dense({{1, 2}, {0, 1}}, 5);
  const RankOptions tiny_budget{.dense_budget = 1};
  // the zero vector short-circuits; other in-span vectors raise budget_exceeded
  CHECK(solve_membership(m, {Fp(0, 5), Fp(0, 5)}, tiny_budget).in_span);
  CHECK_THROWS_AS(solve_membership(m, column_vector(m, 0), tiny_budget), Error);
  const SparseMatrixFp tall = from_dense({{1}, {0}}, 5);
  CHECK_FALSE(solve_membership(tall, {Fp(0, 5), Fp(1, 5)}, tiny_budget).in_span);
}

TEST_CASE("dimension mismatches are rejected") {
  const SparseMatrixFp m = from_dense({{1, 2}, {0, 1}}, 5);
  CHECK_THROWS_AS(solve_membership(m, {Fp(1, 5)}), Error);
  CHECK_THROWS_AS(m.apply({Fp(1, 5)}), Error);
  CHECK_THROWS_AS(m.with_extra_column({Fp(1, 5)}), Error);
}

TEST_CASE("triple format round trip") {
  std::mt19937 rng(29);
  const SparseMatrixFp m = random_matrix(rng, 4, 6, 7);
  std::stringstream io;
  m.write_triples(io);
  const std::string dump = io.str();
  CHECK(dump.rfind("4 6 7\n", 0) == 0);
  const SparseMatrixFp back = SparseMatrixFp::read_triples(io);
  CHECK(back.rows() == m.rows());
  CHECK(back.cols() == m.cols());
  CHECK(back.modulus() == m.modulus());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    CHECK(back.column(c) == m.column(c));
  }
  std::stringstream bad("2 2 5\n0 0 0\n");
  CHECK_THROWS_AS(SparseMatrixFp::read_triples(bad), Error);
}
