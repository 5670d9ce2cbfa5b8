#pragma once

// Brute-force reference implementations, kept deliberately independent of the
// production code paths they validate.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fp_linalg.hpp"
#include "incidence_ring.hpp"

namespace oracle {

// Rank via span enumeration: walk every coefficient vector in F_p^cols,
// collect the distinct products m*c, and read the rank off |span| = p^rank.
// Only usable for tiny matrices (p^cols vectors).
inline std::size_t spanning_rank(const kodaira::SparseMatrixFp& m) {
  const std::uint64_t p = m.modulus();
  std::vector<std::uint32_t> coeff(m.cols(), 0);
  std::set<std::vector<std::uint32_t>> span;
  while (true) {
    std::vector<std::uint64_t> image(m.rows(), 0);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (coeff[c] == 0) continue;
      for (const auto& e : m.column(c)) {
        image[e.row] = (image[e.row] + static_cast<std::uint64_t>(e.value) * coeff[c]) % p;
      }
    }
    span.insert(std::vector<std::uint32_t>(image.begin(), image.end()));
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] + 1 == p) {
      coeff[k] = 0;
      ++k;
    }
    if (k == coeff.size()) break;
    ++coeff[k];
  }
  std::size_t rank = 0;
  std::uint64_t size = 1;
  while (size < span.size()) {
    size *= p;
    ++rank;
  }
  return rank;
}

// Dense bigraded polynomial arithmetic over F_p on exponent-vector pairs.
using Exponents = std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
using Poly = std::map<Exponents, std::uint32_t>;

inline void poly_add_term(Poly& f, Exponents e, std::uint64_t c, std::uint32_t p) {
  c %= p;
  if (c == 0) return;
  auto [it, inserted] = f.emplace(std::move(e), static_cast<std::uint32_t>(c));
  if (!inserted) {
    const std::uint32_t v = static_cast<std::uint32_t>((it->second + c) % p);
    if (v == 0) {
      f.erase(it);
    } else {
      it->second = v;
    }
  }
}

inline Poly poly_from_monomial(const kodaira::Monomial& m, std::uint32_t p) {
  Poly f;
  poly_add_term(f, {m.xexp(), m.yexp()}, 1, p);
  return f;
}

inline Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
  Poly out;
  for (const auto& [ef, cf] : f) {
    for (const auto& [eg, cg] : g) {
      Exponents e = ef;
      for (std::size_t i = 0; i < e.first.size(); ++i) {
        e.first[i] += eg.first[i];
        e.second[i] += eg.second[i];
      }
      poly_add_term(out, std::move(e), static_cast<std::uint64_t>(cf) * cg, p);
    }
  }
  return out;
}

// Textbook multivariate division by q = sum X_i Y_i whose leading term under
// the X0-heavy order is X0*Y0: repeatedly cancel a divisible term with the
// full relation until the remainder has no X0*Y0-divisible monomial.
inline Poly reduce_by_incidence_relation(Poly f, int n, std::uint32_t p) {
  while (true) {
    auto it = f.begin();
    for (; it != f.end(); ++it) {
      if (it->first.first[0] >= 1 && it->first.second[0] >= 1) break;
    }
    if (it == f.end()) return f;
    const Exponents lead = it->first;
    const std::uint32_t c = it->second;
    Exponents quotient = lead;
    --quotient.first[0];
    --quotient.second[0];
    // f -= c * quotient * (X0 Y0 + X1 Y1 + ... + Xn Yn)
    for (int i = 0; i <= n; ++i) {
      Exponents term = quotient;
      ++term.first[i];
      ++term.second[i];
      poly_add_term(f, std::move(term), static_cast<std::uint64_t>(p - c), p);
    }
  }
}

inline Poly ring_element_to_poly(const kodaira::RingElement& e) {
  Poly f;
  for (const auto& [mono, coeff] : e.terms()) {
    poly_add_term(f, {mono.xexp(), mono.yexp()}, coeff, e.modulus());
  }
  return f;
}

// Number of solutions of e_0 + ... + e_{parts-1} = total with every e_i <= cap.
inline std::uint64_t capped_compositions(std::uint64_t total, int parts, std::uint64_t cap) {
  if (parts == 0) return total == 0 ? 1 : 0;
  std::uint64_t count = 0;
  for (std::uint64_t head = 0; head <= cap && head <= total; ++head) {
    count += capped_compositions(total - head, parts - 1, cap);
  }
  return count;
}

// Monomial count behind component_dimension, by direct enumeration.
inline std::uint64_t count_normal_monomials(int n, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) return 0;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> x(n + 1, 0);
  // enumerate X compositions via odometer, then count Y compositions split on y0
  const auto compositions = [](int parts, std::uint64_t total) {
    // C(total + parts - 1, parts - 1) by direct recursion-free formula
    unsigned __int128 r = 1;
    for (int i = 1; i < parts; ++i) {
      r = r * (total + i) / i;
    }
    return static_cast<std::uint64_t>(r);
  };
  // walk X exponent vectors explicitly
  std::function<void(int, std::uint64_t)> walk = [&](int idx, std::uint64_t remaining) {
    if (idx == n) {
      x[idx] = static_cast<std::uint32_t>(remaining);
      if (x[0] == 0) {
        count += compositions(n + 1, static_cast<std::uint64_t>(b));
      } else {
        // y0 must be zero
        count += compositions(n, static_cast<std::uint64_t>(b));
      }
      return;
    }
    for (std::uint64_t e = 0; e <= remaining; ++e) {
      x[idx] = static_cast<std::uint32_t>(e);
      walk(idx + 1, remaining - e);
    }
  };
  walk(0, static_cast<std::uint64_t>(a));
  return count;
}

}  // namespace oracle
