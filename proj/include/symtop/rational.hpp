#pragma once

#include <cstdint>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symtop {

namespace detail {

using i128 = __int128;

inline i128 i128_abs(i128 x) { return x < 0 ? -x : x; }

inline i128 i128_gcd(i128 a, i128 b) {
  a = i128_abs(a);
  b = i128_abs(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool fits_i64(i128 x) {
  return x >= i128(INT64_MIN) && x <= i128(INT64_MAX);
}

}  // namespace detail

/// Exact rational number. Invariants: lowest terms, denominator > 0.
/// Arithmetic runs through 128-bit intermediates; a result whose reduced
/// numerator or denominator leaves the 64-bit range throws overflow_error.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t n) : num_(n) {}
  Rational(int64_t n, int64_t d) { *this = make(n, d); }

  static Rational make(detail::i128 n, detail::i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    detail::i128 g = detail::i128_gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (!detail::fits_i64(n) || !detail::fits_i64(d))
      throw std::overflow_error("Rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<int64_t>(n);
    r.den_ = static_cast<int64_t>(d);
    return r;
  }

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

  int64_t floor() const {
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  int64_t ceil() const {
    int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.den_ + detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.den_ - detail::i128(b.num_) * a.den_,
                detail::i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(detail::i128(a.num_) * b.num_, detail::i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make(detail::i128(a.num_) * b.den_, detail::i128(a.den_) * b.num_);
  }
  Rational operator-() const { return make(-detail::i128(num_), den_); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return detail::i128(a.num_) * b.den_ < detail::i128(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Renders as "p/q", or just "p" when integral.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) {
      s += '/';
      s += std::to_string(den_);
    }
    return s;
  }

  /// Parses "p", "-p", "p/q". Returns nullopt on malformed input.
  static std::optional<Rational> try_parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    int64_t n = 0, d = 1;
    size_t slash = s.find('/');
    std::string_view ns = s.substr(0, slash == std::string_view::npos ? s.size() : slash);
    if (ns.empty()) return std::nullopt;
    auto [p1, e1] = std::from_chars(ns.data(), ns.data() + ns.size(), n);
    if (e1 != std::errc{} || p1 != ns.data() + ns.size()) return std::nullopt;
    if (slash != std::string_view::npos) {
      std::string_view ds = s.substr(slash + 1);
      if (ds.empty()) return std::nullopt;
      auto [p2, e2] = std::from_chars(ds.data(), ds.data() + ds.size(), d);
      if (e2 != std::errc{} || p2 != ds.data() + ds.size() || d == 0) return std::nullopt;
    }
    return make(n, d);
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace symtop
