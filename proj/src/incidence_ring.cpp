#include "incidence_ring.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <sstream>

#include "fp_linalg.hpp"

namespace kodaira {

namespace {

constexpr std::uint64_t kCountCap = std::uint64_t{1} << 62;
constexpr std::uint32_t kMaxExponent = std::uint32_t{1} << 31;

void check_var_count(int n) {
  if (n < 1 || n > 64) {
    fail(ErrorCode::invalid_input, "variable count n must lie in [1, 64], got " + std::to_string(n));
  }
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > kCountCap) {
    fail(ErrorCode::overflow, "count exceeds the 2^62 cap");
  }
  return static_cast<std::uint64_t>(p);
}

}  // namespace

std::uint64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0 || m < k) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    const unsigned __int128 f = static_cast<unsigned __int128>(m - k + i);
    if (r > (~static_cast<unsigned __int128>(0)) / f) {
      fail(ErrorCode::overflow, "binomial intermediate exceeds 128 bits");
    }
    r = r * f / static_cast<unsigned __int128>(i);
  }
  if (r > kCountCap) {
    fail(ErrorCode::overflow, "binomial exceeds the 2^62 cap");
  }
  return static_cast<std::uint64_t>(r);
}

Monomial::Monomial(std::vector<std::uint32_t> xexp, std::vector<std::uint32_t> yexp)
    : x_(std::move(xexp)), y_(std::move(yexp)) {
  if (x_.empty() || x_.size() != y_.size()) {
    fail(ErrorCode::invalid_input, "exponent vectors must be nonempty and of equal length");
  }
  check_var_count(static_cast<int>(x_.size()) - 1);
  for (std::uint32_t e : x_) {
    if (e >= kMaxExponent) fail(ErrorCode::overflow, "exponent exceeds 2^31");
  }
  for (std::uint32_t e : y_) {
    if (e >= kMaxExponent) fail(ErrorCode::overflow, "exponent exceeds 2^31");
  }
}

Monomial Monomial::one(int n) {
  check_var_count(n);
  return Monomial(std::vector<std::uint32_t>(n + 1, 0), std::vector<std::uint32_t>(n + 1, 0));
}

Monomial Monomial::x_power(int n, int i, std::uint32_t e) {
  Monomial m = one(n);
  if (i < 0 || i > n) fail(ErrorCode::invalid_input, "variable index out of range");
  m.x_[i] = e;
  return m;
}

Monomial Monomial::y_power(int n, int i, std::uint32_t e) {
  Monomial m = one(n);
  if (i < 0 || i > n) fail(ErrorCode::invalid_input, "variable index out of range");
  m.y_[i] = e;
  return m;
}

Bidegree Monomial::bidegree() const noexcept {
  std::int64_t a = 0, b = 0;
  for (std::uint32_t e : x_) a += e;
  for (std::uint32_t e : y_) b += e;
  return Bidegree{a, b};
}

Monomial Monomial::times(const Monomial& o) const {
  if (o.x_.size() != x_.size()) {
    fail(ErrorCode::invalid_input, "multiplying monomials in different variable counts");
  }
  Monomial m = *this;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    const std::uint64_t xs = static_cast<std::uint64_t>(m.x_[i]) + o.x_[i];
    const std::uint64_t ys = static_cast<std::uint64_t>(m.y_[i]) + o.y_[i];
    if (xs >= kMaxExponent || ys >= kMaxExponent) {
      fail(ErrorCode::overflow, "exponent exceeds 2^31");
    }
    m.x_[i] = static_cast<std::uint32_t>(xs);
    m.y_[i] = static_cast<std::uint32_t>(ys);
  }
  return m;
}

Monomial Monomial::divided_by_x0y0() const {
  if (x_[0] == 0 || y_[0] == 0) {
    fail(ErrorCode::invalid_input, "monomial is not divisible by X0*Y0");
  }
  Monomial m = *this;
  --m.x_[0];
  --m.y_[0];
  return m;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  if (a.x_.size() != b.x_.size()) {
    fail(ErrorCode::invalid_input, "comparing monomials in different variable counts");
  }
  for (std::size_t i = 0; i < a.x_.size(); ++i) {
    if (a.x_[i] != b.x_[i]) return a.x_[i] < b.x_[i] ? -1 : 1;
  }
  for (std::size_t i = 0; i < a.y_.size(); ++i) {
    if (a.y_[i] != b.y_[i]) return a.y_[i] < b.y_[i] ? -1 : 1;
  }
  return 0;
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  const auto emit = [&](char var, std::size_t i, std::uint32_t e) {
    if (e == 0) return;
    if (!first) out << '*';
    first = false;
    out << var << i;
    if (e > 1) out << '^' << e;
  };
  for (std::size_t i = 0; i < x_.size(); ++i) emit('X', i, x_[i]);
  for (std::size_t i = 0; i < y_.size(); ++i) emit('Y', i, y_[i]);
  if (first) return "1";
  return out.str();
}

Monomial Monomial::parse(std::string_view text, int n) {
  check_var_count(n);
  if (text == "1") return one(n);
  std::vector<std::uint32_t> x(n + 1, 0), y(n + 1, 0);
  std::size_t pos = 0;
  const auto parse_number = [&](std::uint64_t cap) -> std::uint64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail(ErrorCode::invalid_input, "expected a number in monomial '" + std::string(text) + "'");
    }
    std::uint64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > cap) fail(ErrorCode::invalid_input, "number out of range in monomial");
      ++pos;
    }
    return v;
  };
  while (true) {
    if (pos >= text.size()) {
      fail(ErrorCode::invalid_input, "empty factor in monomial '" + std::string(text) + "'");
    }
    const char var = text[pos];
    if (var != 'X' && var != 'Y') {
      fail(ErrorCode::invalid_input, "expected X or Y in monomial '" + std::string(text) + "'");
    }
    ++pos;
    const std::uint64_t idx = parse_number(static_cast<std::uint64_t>(n));
    std::uint64_t e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = parse_number(kMaxExponent - 1);
    }
    auto& slot = (var == 'X') ? x[idx] : y[idx];
    const std::uint64_t total = slot + e;
    if (total >= kMaxExponent) fail(ErrorCode::overflow, "exponent exceeds 2^31");
    slot = static_cast<std::uint32_t>(total);
    if (pos == text.size()) break;
    if (text[pos] != '*') {
      fail(ErrorCode::invalid_input, "expected '*' in monomial '" + std::string(text) + "'");
    }
    ++pos;
  }
  return Monomial(std::move(x), std::move(y));
}

RingElement RingElement::zero(std::uint32_t p) { return RingElement(Terms{}, p); }

RingElement RingElement::from_monomial(const Monomial& m, std::uint32_t p) {
  return normal_form({{m, 1}}, p);
}

std::optional<Bidegree> RingElement::bidegree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.bidegree();
}

RingElement RingElement::multiplied_by(const Monomial& m) const {
  std::vector<std::pair<Monomial, std::int64_t>> raw;
  raw.reserve(terms_.size());
  for (const auto& [mono, coeff] : terms_) {
    raw.emplace_back(mono.times(m), coeff);
  }
  if (raw.empty()) return zero(p_);
  return normal_form(raw, p_);
}

RingElement RingElement::plus(const RingElement& o) const {
  if (p_ != o.p_) {
    fail(ErrorCode::invalid_input, "adding elements over different moduli");
  }
  if (!is_zero() && !o.is_zero() && !(*bidegree() == *o.bidegree())) {
    fail(ErrorCode::mixed_degrees, "adding elements of different bidegrees");
  }
  Terms sum = terms_;
  for (const auto& [mono, coeff] : o.terms_) {
    auto [it, inserted] = sum.emplace(mono, coeff);
    if (!inserted) {
      const std::uint32_t v = (it->second + coeff) % p_;
      if (v == 0) {
        sum.erase(it);
      } else {
        it->second = v;
      }
    }
  }
  return RingElement(std::move(sum), p_);
}

RingElement RingElement::scaled(std::uint32_t c) const {
  const std::uint64_t f = c % p_;
  if (f == 0) return zero(p_);
  Terms scaled;
  for (const auto& [mono, coeff] : terms_) {
    const std::uint32_t v = static_cast<std::uint32_t>(coeff * f % p_);
    if (v != 0) scaled.emplace(mono, v);
  }
  return RingElement(std::move(scaled), p_);
}

std::string RingElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (coeff != 1) out << coeff << '*';
    out << mono.str();
  }
  return out.str();
}

RingElement normal_form(const std::vector<std::pair<Monomial, std::int64_t>>& raw_terms,
                        std::uint32_t p) {
  (void)Fp(0, p);  // modulus validation lives in one place
  if (raw_terms.empty()) return RingElement::zero(p);

  const int n = raw_terms.front().first.n();
  const Bidegree degree = raw_terms.front().first.bidegree();
  RingElement::Terms work;
  for (const auto& [mono, coeff] : raw_terms) {
    if (mono.n() != n) {
      fail(ErrorCode::invalid_input, "terms use different variable counts");
    }
    if (!(mono.bidegree() == degree)) {
      fail(ErrorCode::mixed_degrees,
           "input is not bihomogeneous: " + mono.str() + " has a different bidegree");
    }
    std::int64_t r = coeff % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) continue;
    auto [it, inserted] = work.emplace(mono, static_cast<std::uint32_t>(r));
    if (!inserted) {
      const std::uint32_t v = static_cast<std::uint32_t>((it->second + r) % p);
      if (v == 0) {
        work.erase(it);
      } else {
        it->second = v;
      }
    }
  }

  // Rewrite X0*Y0 -> -(X1*Y1 + ... + Xn*Yn). Processing the lexicographically
  // largest term first is monotone: every replacement is strictly smaller.
  RingElement::Terms result;
  while (!work.empty()) {
    const auto it = work.begin();
    const Monomial mono = it->first;
    const std::uint32_t coeff = it->second;
    work.erase(it);
    if (mono.is_normal()) {
      result.emplace(mono, coeff);
      continue;
    }
    const Monomial quotient = mono.divided_by_x0y0();
    const std::uint64_t negated = static_cast<std::uint64_t>(p - coeff);
    for (int i = 1; i <= n; ++i) {
      Monomial replacement =
          quotient.times(Monomial::x_power(n, i, 1)).times(Monomial::y_power(n, i, 1));
      auto [slot, inserted] = work.emplace(std::move(replacement),
                                           static_cast<std::uint32_t>(negated % p));
      if (!inserted) {
        const std::uint32_t v = static_cast<std::uint32_t>((slot->second + negated) % p);
        if (v == 0) {
          work.erase(slot);
        } else {
          slot->second = v;
        }
      }
    }
  }
  return RingElement(std::move(result), p);
}

std::uint64_t component_dimension(int n, Bidegree d) {
  check_var_count(n);
  const std::uint64_t full = checked_mul(binomial(d.a + n, n), binomial(d.b + n, n));
  const std::uint64_t shifted = checked_mul(binomial(d.a - 1 + n, n), binomial(d.b - 1 + n, n));
  // shifted < full whenever shifted is nonzero (both degrees then >= 1)
  return full - shifted;
}

namespace {

// Exponent vectors of the given length summing to total, emitted in
// lexicographically descending order.
void for_each_composition(int length, std::int64_t total,
                          std::vector<std::uint32_t>& scratch,
                          const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  if (length == 1) {
    scratch.push_back(static_cast<std::uint32_t>(total));
    fn(scratch);
    scratch.pop_back();
    return;
  }
  for (std::int64_t head = total; head >= 0; --head) {
    scratch.push_back(static_cast<std::uint32_t>(head));
    for_each_composition(length - 1, total - head, scratch, fn);
    scratch.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomial_basis(int n, Bidegree d) {
  check_var_count(n);
  if (d.a < 0 || d.b < 0) {
    fail(ErrorCode::invalid_input, "monomial_basis requires nonnegative bidegree");
  }
  if (d.a >= kMaxExponent || d.b >= kMaxExponent) {
    fail(ErrorCode::overflow, "bidegree exceeds 2^31");
  }
  std::vector<Monomial> basis;
  basis.reserve(component_dimension(n, d));
  std::vector<std::uint32_t> xs, ys;
  for_each_composition(n + 1, d.a, xs, [&](const std::vector<std::uint32_t>& x) {
    for_each_composition(n + 1, d.b, ys, [&](const std::vector<std::uint32_t>& y) {
      if (x[0] > 0 && y[0] > 0) return;  // divisible by X0*Y0
      basis.emplace_back(x, y);
    });
  });
  return basis;
}

}  // namespace kodaira
