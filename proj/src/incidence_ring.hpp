#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace kodaira {

/// Pair of gradings (total X-degree, total Y-degree). Negative values are
/// meaningful for cohomology queries.
struct Bidegree {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

/// Exact binomial coefficient with the convention C(m, k) = 0 for m < k or
/// m < 0. Throws ErrorCode::overflow past 2^62.
std::uint64_t binomial(std::int64_t m, std::int64_t k);

/// Bihomogeneous monomial in X_0..X_n, Y_0..Y_n as two exponent vectors.
class Monomial {
 public:
  Monomial(std::vector<std::uint32_t> xexp, std::vector<std::uint32_t> yexp);

  static Monomial one(int n);
  static Monomial x_power(int n, int i, std::uint32_t e);
  static Monomial y_power(int n, int i, std::uint32_t e);

  int n() const noexcept { return static_cast<int>(x_.size()) - 1; }
  const std::vector<std::uint32_t>& xexp() const noexcept { return x_; }
  const std::vector<std::uint32_t>& yexp() const noexcept { return y_; }

  Bidegree bidegree() const noexcept;

  /// Normal form representatives are exactly the monomials not divisible by
  /// X_0*Y_0.
  bool is_normal() const noexcept { return x_[0] == 0 || y_[0] == 0; }

  Monomial times(const Monomial& o) const;
  Monomial divided_by_x0y0() const;  // pre: x_0 >= 1 and y_0 >= 1

  /// Lexicographic comparison of the concatenated exponent vector, X block
  /// first, X_0 heaviest: returns <0, 0, >0 like memcmp.
  static int compare(const Monomial& a, const Monomial& b);

  /// Text form `X0^2*X3*Y1^4`: exponent 1 omitted, the empty monomial is "1".
  std::string str() const;
  static Monomial parse(std::string_view text, int n);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> x_;
  std::vector<std::uint32_t> y_;
};

/// Canonical basis order: lexicographically larger monomials come first, so
/// X_0*Y_0 leads the incidence relation and reduction strictly descends.
struct CanonicalBefore {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::compare(a, b) > 0;
  }
};

/// Bihomogeneous element of k[X; Y]/(sum X_i Y_i) in normal form: no term is
/// divisible by X_0*Y_0 and no zero coefficient is stored.
class RingElement {
 public:
  using Terms = std::map<Monomial, std::uint32_t, CanonicalBefore>;

  static RingElement zero(std::uint32_t p);
  static RingElement from_monomial(const Monomial& m, std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::optional<Bidegree> bidegree() const;

  RingElement multiplied_by(const Monomial& m) const;
  RingElement plus(const RingElement& o) const;
  RingElement scaled(std::uint32_t c) const;

  std::string str() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  RingElement(Terms terms, std::uint32_t p) : terms_(std::move(terms)), p_(p) {}
  friend RingElement normal_form(const std::vector<std::pair<Monomial, std::int64_t>>&,
                                 std::uint32_t);

  Terms terms_;
  std::uint32_t p_ = 2;
};

/// Reduces a raw coefficient map modulo the relation sum X_i Y_i by the
/// rewrite X_0*Y_0 -> -(X_1*Y_1 + ... + X_n*Y_n). Idempotent and linear.
/// Throws ErrorCode::mixed_degrees unless all monomials share one bidegree.
RingElement normal_form(const std::vector<std::pair<Monomial, std::int64_t>>& raw_terms,
                        std::uint32_t p);

/// Dimension of the bidegree-(a, b) component of the incidence ring:
/// C(a+n,n)C(b+n,n) - C(a-1+n,n)C(b-1+n,n). Zero whenever a < 0 or b < 0.
std::uint64_t component_dimension(int n, Bidegree d);

/// All normal-form monomials of the given bidegree in canonical order.
/// Requires a >= 0 and b >= 0.
std::vector<Monomial> monomial_basis(int n, Bidegree d);

}  // namespace kodaira
