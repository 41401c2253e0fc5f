#pragma once

// Exact rational numbers.
//
// Values whose numerator and denominator fit in 63 bits are kept inline and
// combined with 128-bit intermediates; anything larger is promoted to a GMP
// rational. The two representations are interchangeable and every result is
// normalised (lowest terms, positive denominator, small form when it fits).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

namespace kwk {

namespace detail {

using i128 = __int128;
using u128 = unsigned __int128;

inline u128 gcd_u128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline u128 abs_i128(i128 v) { return v < 0 ? u128(-(v + 1)) + 1 : u128(v); }

constexpr std::int64_t kSmallMax = INT64_MAX;
constexpr std::int64_t kSmallMin = -INT64_MAX;  // keep negation closed

inline bool fits_small(i128 v) { return v <= kSmallMax && v >= kSmallMin; }

inline mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 u = abs_i128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

inline std::optional<std::int64_t> mpz_to_small(const mpz_class& z) {
  if (!z.fits_slong_p()) return std::nullopt;
  long v = z.get_si();
  if (v < kSmallMin) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

class Rational {
  struct Small {
    std::int64_t num;
    std::int64_t den;
  };

 public:
  Rational() : rep_(Small{0, 1}) {}
  Rational(int v) : rep_(Small{v, 1}) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) { set_from_i128(v, 1); }  // NOLINT(google-explicit-constructor)
  Rational(long long v) { set_from_i128(v, 1); }  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    set_from_i128(num, den);
  }
  explicit Rational(const mpz_class& z) { set_from_mpq(mpq_class(z)); }
  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    set_from_mpq(std::move(q));
  }
  explicit Rational(mpq_class q) {
    q.canonicalize();
    set_from_mpq(std::move(q));
  }

  /// Parses "p", "-p" or "p/q" (decimal integers). Returns nullopt on malformed
  /// input or a zero denominator.
  static std::optional<Rational> parse(std::string_view text) {
    auto valid_int = [](std::string_view s) {
      if (s.empty()) return false;
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto strip_plus = [](std::string_view s) {
      return std::string(!s.empty() && s[0] == '+' ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    std::string_view ns = text.substr(0, slash);
    if (!valid_int(ns)) return std::nullopt;
    mpz_class num(strip_plus(ns), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
      std::string_view ds = text.substr(slash + 1);
      if (!valid_int(ds)) return std::nullopt;
      den = mpz_class(strip_plus(ds), 10);
      if (den == 0) return std::nullopt;
    }
    return Rational(num, den);
  }

  bool is_small() const { return std::holds_alternative<Small>(rep_); }
  bool is_zero() const { return is_small() ? small().num == 0 : big() == 0; }
  bool is_one() const { return is_small() && small().num == 1 && small().den == 1; }
  bool is_integer() const {
    return is_small() ? small().den == 1 : big().get_den() == 1;
  }
  int sign() const {
    if (is_small()) return (small().num > 0) - (small().num < 0);
    return sgn(big());
  }

  mpz_class numerator() const {
    return is_small() ? mpz_class(static_cast<long>(small().num)) : mpz_class(big().get_num());
  }
  mpz_class denominator() const {
    return is_small() ? mpz_class(static_cast<long>(small().den)) : mpz_class(big().get_den());
  }
  mpq_class to_mpq() const {
    if (!is_small()) return big();
    mpq_class q(mpz_class(static_cast<long>(small().num)), mpz_class(static_cast<long>(small().den)));
    return q;
  }

  std::string to_string() const {
    if (is_small()) {
      const auto& s = small();
      return s.den == 1 ? std::to_string(s.num) : std::to_string(s.num) + "/" + std::to_string(s.den);
    }
    return big().get_den() == 1 ? big().get_num().get_str() : big().get_str();
  }

  Rational operator-() const {
    if (is_small()) return from_small_unchecked(-small().num, small().den);
    return Rational(mpq_class(-big()));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const auto& x = a.small();
      const auto& y = b.small();
      if (x.den == 1 && y.den == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(x.num, y.num, &r) && r >= detail::kSmallMin)
          return from_small_unchecked(r, 1);
      }
      detail::i128 num = detail::i128(x.num) * y.den + detail::i128(y.num) * x.den;
      detail::i128 den = detail::i128(x.den) * y.den;
      Rational out;
      out.set_from_i128(num, den);
      return out;
    }
    return Rational(mpq_class(a.to_mpq() + b.to_mpq()));
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      const auto& x = a.small();
      const auto& y = b.small();
      if (x.num == 0 || y.num == 0) return Rational();
      if (x.den == 1 && y.den == 1) {
        std::int64_t r;
        if (!__builtin_mul_overflow(x.num, y.num, &r) && r >= detail::kSmallMin)
          return from_small_unchecked(r, 1);
      }
      Rational out;
      out.set_from_i128(detail::i128(x.num) * y.num, detail::i128(x.den) * y.den);
      return out;
    }
    return Rational(mpq_class(a.to_mpq() * b.to_mpq()));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return a * b.inverse();
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    if (is_small()) {
      const auto& s = small();
      return s.num < 0 ? from_small_unchecked(-s.den, -s.num) : from_small_unchecked(s.den, s.num);
    }
    mpq_class q = 1 / big();
    return Rational(std::move(q));
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    // Normalisation makes both representations canonical.
    if (a.is_small() && b.is_small())
      return a.small().num == b.small().num && a.small().den == b.small().den;
    if (a.is_small() != b.is_small()) return false;
    return a.big() == b.big();
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.is_small() && b.is_small()) {
      detail::i128 l = detail::i128(a.small().num) * b.small().den;
      detail::i128 r = detail::i128(b.small().num) * a.small().den;
      return l <=> r;
    }
    int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

  std::size_t hash() const {
    if (is_small()) return std::hash<std::int64_t>{}(small().num) * 31 + std::hash<std::int64_t>{}(small().den);
    return std::hash<std::string>{}(big().get_str());
  }

 private:
  std::variant<Small, mpq_class> rep_;

  const Small& small() const { return std::get<Small>(rep_); }
  const mpq_class& big() const { return std::get<mpq_class>(rep_); }

  static Rational from_small_unchecked(std::int64_t num, std::int64_t den) {
    Rational r;
    r.rep_ = Small{num, den};
    return r;
  }

  void set_from_i128(detail::i128 num, detail::i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      rep_ = Small{0, 1};
      return;
    }
    detail::u128 g = detail::gcd_u128(detail::abs_i128(num), detail::u128(den));
    if (g > 1) {
      num /= detail::i128(g);
      den /= detail::i128(g);
    }
    if (detail::fits_small(num) && detail::fits_small(den)) {
      rep_ = Small{static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
      return;
    }
    mpq_class q(detail::mpz_from_i128(num), detail::mpz_from_i128(den));
    rep_ = std::move(q);
  }

  void set_from_mpq(mpq_class q) {
    auto n = detail::mpz_to_small(q.get_num());
    auto d = detail::mpz_to_small(q.get_den());
    if (n && d) {
      rep_ = Small{*n, *d};
      return;
    }
    rep_ = std::move(q);
  }
};

}  // namespace kwk

template <>
struct std::hash<kwk::Rational> {
  std::size_t operator()(const kwk::Rational& r) const { return r.hash(); }
};
