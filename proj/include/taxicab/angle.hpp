#ifndef TAXICAB_ANGLE_HPP
#define TAXICAB_ANGLE_HPP

#include <compare>
#include <ostream>

#include "taxicab/circle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/scalar.hpp"

namespace taxicab {

/// Angle measure in t-radians. A full turn is 8 and a right angle is 2.
/// Undirected measures lie in [0, 4]; directed arcs lie in [0, 8).
struct TAngle {
  Scalar value;

  friend bool operator==(const TAngle&, const TAngle&) = default;
  friend auto operator<=>(const TAngle& a, const TAngle& b) { return a.value <=> b.value; }
  friend std::ostream& operator<<(std::ostream& os, const TAngle& a) { return os << a.value; }
};

inline const Scalar kFullTurn{8};
inline const Scalar kStraightAngle{4};
inline const Scalar kRightAngle{2};

/// Measure of the acute angle between the positive x-axis and a ray of
/// positive slope through the origin: 2 - 2/(1 + slope).
inline TAngle angle_standard_position(const Scalar& slope) {
  if (slope.sign() <= 0) {
    throw DomainError("standard-position formula needs a positive slope, got " + slope.str());
  }
  return {Scalar(2) - Scalar(2) / (Scalar(1) + slope)};
}

/// Counterclockwise arc on the unit circle about `vertex` from ray vertex->p
/// to ray vertex->q.
inline TAngle directed_arc(const Point& vertex, const Point& p, const Point& q) {
  if (p == vertex || q == vertex) {
    throw DegenerateInput("angle ray through its own vertex " + vertex.str());
  }
  const auto unit = TaxicabCircle::unit(vertex);
  return {arc_length_ccw(unit, ray_circle_intersection(unit, p - vertex), ray_circle_intersection(unit, q - vertex))};
}

/// Undirected measure of angle p-vertex-q: min(L, 8 - L) for the
/// counterclockwise arc L.
inline TAngle angle_measure(const Point& vertex, const Point& p, const Point& q) {
  const Scalar arc = directed_arc(vertex, p, q).value;
  const Scalar other = kFullTurn - arc;
  return {arc <= other ? arc : other};
}

inline bool is_right_angle(const Point& vertex, const Point& p, const Point& q) {
  return angle_measure(vertex, p, q).value == kRightAngle;
}

}  // namespace taxicab

#endif  // TAXICAB_ANGLE_HPP
