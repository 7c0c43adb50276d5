#ifndef TAXICAB_CIRCLE_HPP
#define TAXICAB_CIRCLE_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "taxicab/errors.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/scalar.hpp"

namespace taxicab {

/// Sides of a taxicab circle, counterclockwise from the east corner:
/// S1 runs east -> north, S2 north -> west, S3 west -> south, S4 south -> east.
enum class Side { S1, S2, S3, S4 };

inline std::string_view side_name(Side s) {
  static constexpr std::array<std::string_view, 4> names{"S1", "S2", "S3", "S4"};
  return names[static_cast<int>(s)];
}

/// Where a point sits on a circle. A corner reports the side that leaves it
/// counterclockwise (east -> S1, north -> S2, west -> S3, south -> S4) and
/// sets `corner`.
struct CirclePosition {
  Side side;
  bool corner = false;

  /// For a corner, the side that arrives at it counterclockwise.
  Side incoming() const { return corner ? static_cast<Side>((static_cast<int>(side) + 3) % 4) : side; }

  friend bool operator==(const CirclePosition&, const CirclePosition&) = default;
};

class TaxicabCircle {
 public:
  TaxicabCircle(Point center, Scalar radius) : center_(std::move(center)), radius_(std::move(radius)) {
    if (radius_.sign() <= 0) throw DomainError("taxicab circle radius must be positive, got " + radius_.str());
  }

  static TaxicabCircle unit(const Point& center = {}) { return {center, Scalar(1)}; }

  const Point& center() const { return center_; }
  const Scalar& radius() const { return radius_; }
  Scalar perimeter() const { return Scalar(8) * radius_; }

  /// Start corner of each side, counterclockwise from east.
  Point corner(Side s) const {
    switch (s) {
      case Side::S1: return center_ + Point{radius_, 0};
      case Side::S2: return center_ + Point{0, radius_};
      case Side::S3: return center_ + Point{-radius_, 0};
      case Side::S4: return center_ + Point{0, -radius_};
    }
    return center_;
  }

  friend bool operator==(const TaxicabCircle&, const TaxicabCircle&) = default;

 private:
  Point center_;
  Scalar radius_;
};

inline std::optional<CirclePosition> point_on_circle(const TaxicabCircle& c, const Point& p) {
  const Point d = p - c.center();
  if (taxicab_norm(d) != c.radius()) return std::nullopt;
  const bool corner = d.x.is_zero() || d.y.is_zero();
  const int sx = d.x.sign();
  const int sy = d.y.sign();
  if (sx > 0 && sy >= 0) return CirclePosition{Side::S1, corner};
  if (sx <= 0 && sy > 0) return CirclePosition{Side::S2, corner};
  if (sx < 0 && sy <= 0) return CirclePosition{Side::S3, corner};
  return CirclePosition{Side::S4, corner};
}

namespace detail {

// Counterclockwise arc length from the east corner to an on-circle point.
// Along one side |dx| == |dy|, so the arc from the side's start corner is 2|dx|.
inline Scalar arc_offset(const TaxicabCircle& c, const Point& p, CirclePosition pos) {
  const Point d = p - c.center();
  const Scalar& r = c.radius();
  const Scalar two(2);
  switch (pos.side) {
    case Side::S1: return two * (r - d.x);
    case Side::S2: return two * r - two * d.x;
    case Side::S3: return Scalar(4) * r + two * (r + d.x);
    case Side::S4: return Scalar(6) * r + two * d.x;
  }
  return {};
}

inline CirclePosition require_on_circle(const TaxicabCircle& c, const Point& p) {
  const auto pos = point_on_circle(c, p);
  if (!pos) {
    throw DomainError("point " + p.str() + " is not on the taxicab circle about " + c.center().str() +
                      " with radius " + c.radius().str());
  }
  return *pos;
}

}  // namespace detail

/// Point reached after travelling arc length `s` counterclockwise from the
/// east corner. `s` is taken modulo the perimeter.
inline Point circle_point_at_arc(const TaxicabCircle& c, const Scalar& s) {
  const Scalar& r = c.radius();
  const Scalar t = mod(s, c.perimeter());
  const Scalar side_len = Scalar(2) * r;
  const auto k = static_cast<int>((t / side_len).floor());
  const Scalar h = (t - Scalar(k) * side_len) / Scalar(2);
  Point d;
  switch (k) {
    case 0: d = {r - h, h}; break;
    case 1: d = {-h, r - h}; break;
    case 2: d = {-r + h, -h}; break;
    default: d = {h, -r + h}; break;
  }
  return c.center() + d;
}

/// Counterclockwise arc length from `a` to `b`, in [0, 8r).
inline Scalar arc_length_ccw(const TaxicabCircle& c, const Point& a, const Point& b) {
  const Scalar from = detail::arc_offset(c, a, detail::require_on_circle(c, a));
  const Scalar to = detail::arc_offset(c, b, detail::require_on_circle(c, b));
  return mod(to - from, c.perimeter());
}

/// Intersection of the ray from the center along `direction` with the circle.
inline Point ray_circle_intersection(const TaxicabCircle& c, const Point& direction) {
  if (direction.is_origin()) throw DegenerateInput("ray with zero direction");
  return c.center() + (c.radius() / taxicab_norm(direction)) * direction;
}

}  // namespace taxicab

#endif  // TAXICAB_CIRCLE_HPP
