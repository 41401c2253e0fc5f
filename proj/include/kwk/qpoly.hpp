#pragma once

// Univariate polynomials over Q and rational root extraction.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "kwk/qmatrix.hpp"
#include "kwk/rational.hpp"

namespace kwk {

class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }
  QPoly(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (Rational(-1) * b); }
  friend QPoly operator*(const Rational& s, const QPoly& p) {
    std::vector<Rational> r(p.c_);
    for (auto& x : r) x *= s;
    return QPoly(std::move(r));
  }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
  }
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  /// Divides by (v - root); returns the quotient and writes the remainder.
  QPoly divide_linear(const Rational& root, Rational& remainder) const {
    if (is_zero()) {
      remainder = 0;
      return {};
    }
    std::vector<Rational> q(c_.size() - 1);
    Rational carry;
    for (std::size_t k = c_.size(); k-- > 0;) {
      Rational cur = c_[k] + carry * root;
      if (k == 0) {
        remainder = cur;
      } else {
        q[k - 1] = cur;
        carry = cur;
      }
    }
    return QPoly(std::move(q));
  }

  std::string to_string(const std::string& var = "v") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      const Rational& a = c_[k];
      if (a.is_zero()) continue;
      bool neg = a.sign() < 0;
      Rational mag = neg ? -a : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? "-" : "+";
      }
      bool unit = mag.is_one();
      if (k == 0 || !unit) out += mag.to_string();
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

/// Lagrange interpolation through the points (xs[i], ys[i]), xs pairwise distinct.
inline QPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  QPoly result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly basis{1};
    Rational denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * QPoly{-xs[j], 1};
      denom *= xs[i] - xs[j];
    }
    result = result + (ys[i] / denom) * basis;
  }
  return result;
}

/// det(t I - M) by evaluation at dim+1 integer points and interpolation.
inline QPoly characteristic_polynomial(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    Rational t(static_cast<long long>(k));
    QMatrix shifted = Rational(-1) * m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) += t;
    xs.push_back(t);
    ys.push_back(determinant(shifted));
  }
  return interpolate(xs, ys);
}

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

struct LinearFactors {
  std::vector<RootMultiplicity> roots;  // ascending by root
  bool complete = false;                // true iff p splits into these linear factors
};

namespace detail {

// Positive divisors of n, or nullopt when n exceeds the limit.
inline std::optional<std::vector<mpz_class>> divisors(mpz_class n, const mpz_class& limit) {
  if (n < 0) n = -n;
  if (n > limit) return std::nullopt;
  std::uint64_t v = n.get_ui();
  std::vector<mpz_class> small, large;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.emplace_back(static_cast<unsigned long>(d));
    if (d * d != v) large.emplace_back(static_cast<unsigned long>(v / d));
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// All rational roots of p with multiplicities, via the rational root theorem on
/// the primitive integer multiple of p. Divisor enumeration is skipped (and the
/// result flagged incomplete) when a relevant coefficient exceeds `divisor_limit`.
inline LinearFactors rational_linear_factors(const QPoly& p, const mpz_class& divisor_limit = mpz_class("1000000000000")) {
  if (p.is_zero()) throw std::invalid_argument("rational_linear_factors: zero polynomial");
  LinearFactors out;
  QPoly rest = p;

  // Zero is handled separately so that the constant term below is nonzero.
  std::size_t zero_mult = 0;
  while (rest.degree() > 0 && rest.coefficient(0).is_zero()) {
    Rational rem;
    rest = rest.divide_linear(0, rem);
    ++zero_mult;
  }
  if (zero_mult) out.roots.push_back({0, zero_mult});

  bool enumerated = true;
  if (rest.degree() > 0) {
    mpz_class lcm_den = 1;
    for (const auto& c : rest.coefficients()) lcm_den = lcm(lcm_den, c.denominator());
    auto integral = [&](std::size_t k) { return mpz_class(rest.coefficient(k).numerator() * (lcm_den / rest.coefficient(k).denominator())); };
    auto ps = detail::divisors(integral(0), divisor_limit);
    auto qs = detail::divisors(integral(static_cast<std::size_t>(rest.degree())), divisor_limit);
    if (!ps || !qs) {
      enumerated = false;
    } else {
      std::vector<Rational> candidates;
      for (const auto& a : *ps)
        for (const auto& b : *qs) {
          candidates.emplace_back(a, b);
          candidates.emplace_back(mpz_class(-a), b);
        }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (const auto& r : candidates) {
        std::size_t mult = 0;
        while (rest.degree() > 0) {
          Rational rem;
          QPoly q = rest.divide_linear(r, rem);
          if (!rem.is_zero()) break;
          rest = std::move(q);
          ++mult;
        }
        if (mult) out.roots.push_back({r, mult});
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) { return a.root < b.root; });
  out.complete = enumerated && rest.degree() == 0;
  return out;
}

}  // namespace kwk
