#ifndef TAXICAB_SCALAR_HPP
#define TAXICAB_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "taxicab/errors.hpp"

namespace taxicab {

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * The value is always held in lowest terms with a positive denominator, so
 * structural equality is numeric equality. There is deliberately no
 * conversion to or from floating point.
 *
 * Literal grammar accepted by parse(): `INT`, `INT/INT`, or a finite decimal
 * such as `-1.25`. str() produces `p/q`, or a bare integer when q == 1.
 */
class Scalar {
 public:
  using Integer = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  Scalar() = default;

  template <std::integral T>
  Scalar(T v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  Scalar(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    // boost wants the sign on the numerator
    value_ = den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
  }

  explicit Scalar(Rational r) : value_(std::move(r)) {}

  static Scalar parse(std::string_view text);

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }
  const Rational& rational() const { return value_; }

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }

  /// Largest integer not greater than the value.
  Integer floor() const {
    Integer n = numerator();
    const Integer d = denominator();
    Integer q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
  }

  /// Canonical literal: `p/q` in lowest terms, or `p` when q == 1.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  /// Decimal rendering rounded half away from zero to `digits` places.
  /// Used only for final pixel output; trailing zeros are trimmed.
  std::string to_fixed(int digits) const;

  Scalar operator-() const { return Scalar(Rational(-value_)); }

  Scalar& operator+=(const Scalar& o) { value_ += o.value_; return *this; }
  Scalar& operator-=(const Scalar& o) { value_ -= o.value_; return *this; }
  Scalar& operator*=(const Scalar& o) { value_ *= o.value_; return *this; }
  Scalar& operator/=(const Scalar& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

 private:
  Rational value_{0};
};

inline Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

/// Representative of `s` modulo `m` in [0, m). `m` must be positive.
inline Scalar mod(const Scalar& s, const Scalar& m) {
  if (m.sign() <= 0) throw DomainError("modulus must be positive");
  const Scalar k((s / m).floor(), 1);
  return s - k * m;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// cpp_int's string constructor reads a leading 0 as octal, so digits are
// accumulated by hand.
inline Scalar::Integer decimal_digits(std::string_view s) {
  Scalar::Integer v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

// Optional sign followed by one or more decimal digits.
inline Scalar::Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  const Scalar::Integer v = decimal_digits(s);
  return negative ? Scalar::Integer(-v) : v;
}

}  // namespace detail

inline Scalar Scalar::parse(std::string_view text) {
  const std::string_view whole = text;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = detail::parse_integer(text.substr(0, slash), whole);
    const Integer den = detail::parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    return Scalar(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (!detail::all_digits(int_part) || !detail::all_digits(frac_part)) {
      throw ParseError("malformed rational literal '" + std::string(whole) + "'");
    }
    Integer num = detail::decimal_digits(std::string(int_part) + std::string(frac_part));
    Integer den = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac_part.size()));
    if (negative) num = -num;
    return Scalar(num, den);
  }
  return Scalar(detail::parse_integer(text, whole), Integer(1));
}

inline std::string Scalar::to_fixed(int digits) const {
  const Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(digits));
  const Integer n = boost::multiprecision::abs(numerator()) * scale;
  const Integer d = denominator();
  Integer q = n / d;
  if ((n % d) * 2 >= d) ++q;
  std::string magnitude = q.str();
  if (digits > 0) {
    if (magnitude.size() <= static_cast<std::size_t>(digits)) {
      magnitude.insert(0, static_cast<std::size_t>(digits) + 1 - magnitude.size(), '0');
    }
    magnitude.insert(magnitude.size() - static_cast<std::size_t>(digits), ".");
    while (magnitude.back() == '0') magnitude.pop_back();
    if (magnitude.back() == '.') magnitude.pop_back();
  }
  if (magnitude == "0") return magnitude;
  return sign() < 0 ? "-" + magnitude : magnitude;
}

}  // namespace taxicab

#endif  // TAXICAB_SCALAR_HPP
