#ifndef TAXICAB_GEOMETRY_HPP
#define TAXICAB_GEOMETRY_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "taxicab/errors.hpp"
#include "taxicab/scalar.hpp"

namespace taxicab {

/// A point of the plane, also used as a displacement vector.
struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;

  Point operator-() const { return {-x, -y}; }
  friend Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(const Scalar& k, const Point& p) { return {k * p.x, k * p.y}; }

  bool is_origin() const { return x.is_zero() && y.is_zero(); }

  /// `x,y` with canonical rational components.
  std::string str() const { return x.str() + "," + y.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Point& p) { return os << '(' << p.str() << ')'; }

  /// Parses `x,y` where both components are rational literals.
  static Point parse(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
      throw ParseError("malformed point literal '" + std::string(text) + "', expected x,y");
    }
    return {Scalar::parse(text.substr(0, comma)), Scalar::parse(text.substr(comma + 1))};
  }
};

inline Scalar dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Scalar cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

/// |dx| + |dy|.
inline Scalar taxicab_norm(const Point& v) { return abs(v.x) + abs(v.y); }

inline Scalar taxicab_distance(const Point& p, const Point& q) { return taxicab_norm(p - q); }

/// Squared Euclidean distance; the root is never needed and would leave the rationals.
inline Scalar euclidean_distance_squared(const Point& p, const Point& q) {
  const Point d = p - q;
  return dot(d, d);
}

inline Point midpoint(const Point& a, const Point& b) {
  const Scalar half(1, 2);
  return half * (a + b);
}

/**
 * Line `a*x + b*y = c`.
 *
 * Coefficients are scaled to coprime integers with the first nonzero of
 * (a, b) positive, so two Line values compare equal exactly when they
 * describe the same point set.
 */
class Line {
 public:
  static Line from_coefficients(Scalar a, Scalar b, Scalar c) {
    if (a.is_zero() && b.is_zero()) throw DegenerateInput("line with a = b = 0");
    Line l;
    l.a_ = std::move(a);
    l.b_ = std::move(b);
    l.c_ = std::move(c);
    l.normalize();
    return l;
  }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

  /// Euclidean direction vector (b, -a).
  Point direction() const { return {b_, -a_}; }
  /// Euclidean normal vector (a, b).
  Point normal() const { return {a_, b_}; }

  bool contains(const Point& p) const { return a_ * p.x + b_ * p.y == c_; }

  std::string str() const { return a_.str() + "," + b_.str() + "," + c_.str(); }

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line() = default;

  void normalize() {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Scalar::Integer den = lcm(lcm(a_.denominator(), b_.denominator()), c_.denominator());
    const Scalar::Integer na = a_.numerator() * (den / a_.denominator());
    const Scalar::Integer nb = b_.numerator() * (den / b_.denominator());
    const Scalar::Integer nc = c_.numerator() * (den / c_.denominator());
    Scalar::Integer g = gcd(gcd(abs(na), abs(nb)), abs(nc));
    const int lead = na != 0 ? na.sign() : nb.sign();
    if (lead < 0) g = -g;
    a_ = Scalar(na / g, 1);
    b_ = Scalar(nb / g, 1);
    c_ = Scalar(nc / g, 1);
  }

  Scalar a_;
  Scalar b_;
  Scalar c_;
};

inline Line line_through(const Point& a, const Point& b) {
  if (a == b) throw DegenerateInput("line through coincident points " + a.str());
  const Scalar ca = b.y - a.y;
  const Scalar cb = a.x - b.x;
  return Line::from_coefficients(ca, cb, ca * a.x + cb * a.y);
}

inline bool is_perpendicular(const Line& l1, const Line& l2) {
  return dot(l1.direction(), l2.direction()).is_zero();
}

}  // namespace taxicab

#endif  // TAXICAB_GEOMETRY_HPP
