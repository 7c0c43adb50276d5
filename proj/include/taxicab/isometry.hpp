#ifndef TAXICAB_ISOMETRY_HPP
#define TAXICAB_ISOMETRY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/circle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/scalar.hpp"

namespace taxicab {

/// The eight signed-permutation linear maps (symmetries of the square).
/// Rotations are counted in t-radians: rot2 is a quarter turn.
enum class LinearPart : std::uint8_t {
  identity,
  rot2,
  rot4,
  rot6,
  reflect_x_axis,      // (x, y) -> (x, -y)
  reflect_y_axis,      // (x, y) -> (-x, y)
  reflect_y_eq_x,      // (x, y) -> (y, x)
  reflect_y_eq_neg_x,  // (x, y) -> (-y, -x)
};

inline constexpr std::array<LinearPart, 8> kLinearParts{
    LinearPart::identity,       LinearPart::rot2,           LinearPart::rot4,           LinearPart::rot6,
    LinearPart::reflect_x_axis, LinearPart::reflect_y_axis, LinearPart::reflect_y_eq_x, LinearPart::reflect_y_eq_neg_x};

/// Integer 2x2 matrix {{xx, xy}, {yx, yy}} of a linear part.
struct SignedPermutation {
  int xx, xy, yx, yy;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

inline constexpr SignedPermutation matrix_of(LinearPart l) {
  switch (l) {
    case LinearPart::identity: return {1, 0, 0, 1};
    case LinearPart::rot2: return {0, -1, 1, 0};
    case LinearPart::rot4: return {-1, 0, 0, -1};
    case LinearPart::rot6: return {0, 1, -1, 0};
    case LinearPart::reflect_x_axis: return {1, 0, 0, -1};
    case LinearPart::reflect_y_axis: return {-1, 0, 0, 1};
    case LinearPart::reflect_y_eq_x: return {0, 1, 1, 0};
    case LinearPart::reflect_y_eq_neg_x: return {0, -1, -1, 0};
  }
  return {1, 0, 0, 1};
}

inline std::optional<LinearPart> linear_part_of(const SignedPermutation& m) {
  for (LinearPart l : kLinearParts) {
    if (matrix_of(l) == m) return l;
  }
  return std::nullopt;
}

inline std::string_view linear_part_name(LinearPart l) {
  static constexpr std::array<std::string_view, 8> names{
      "identity", "rot2", "rot4", "rot6", "reflect_x_axis", "reflect_y_axis", "reflect_y_eq_x", "reflect_y_eq_neg_x"};
  return names[static_cast<std::size_t>(l)];
}

inline LinearPart parse_linear_part(std::string_view name) {
  for (LinearPart l : kLinearParts) {
    if (linear_part_name(l) == name) return l;
  }
  throw ParseError("unknown linear part '" + std::string(name) + "'");
}

inline Point apply(LinearPart l, const Point& p) {
  const SignedPermutation m = matrix_of(l);
  return {Scalar(m.xx) * p.x + Scalar(m.xy) * p.y, Scalar(m.yx) * p.x + Scalar(m.yy) * p.y};
}

/// Product l1 * l2 (apply l2 first).
inline LinearPart compose(LinearPart l1, LinearPart l2) {
  const SignedPermutation a = matrix_of(l1);
  const SignedPermutation b = matrix_of(l2);
  const SignedPermutation m{a.xx * b.xx + a.xy * b.yx, a.xx * b.xy + a.xy * b.yy,
                            a.yx * b.xx + a.yy * b.yx, a.yx * b.xy + a.yy * b.yy};
  return linear_part_of(m).value();
}

inline LinearPart invert(LinearPart l) {
  switch (l) {
    case LinearPart::rot2: return LinearPart::rot6;
    case LinearPart::rot6: return LinearPart::rot2;
    default: return l;  // everything else is an involution
  }
}

/**
 * Taxicab isometry in canonical form: p -> linear(p) + translation.
 *
 * This is the closure under composition of translations, rotations by
 * multiples of 2 t-radians and reflections across y = x, y = -x, y = 0 and
 * x = 0. Text form: `linear=<name> t=<x>,<y>`.
 */
struct Isometry {
  LinearPart linear = LinearPart::identity;
  Point translation;

  friend bool operator==(const Isometry&, const Isometry&) = default;

  Point operator()(const Point& p) const { return taxicab::apply(linear, p) + translation; }

  std::string str() const {
    return "linear=" + std::string(linear_part_name(linear)) + " t=" + translation.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Isometry& f) { return os << f.str(); }

  static Isometry parse(std::string_view text) {
    constexpr std::string_view lin = "linear=";
    constexpr std::string_view tr = " t=";
    const auto sep = text.find(tr);
    if (!text.starts_with(lin) || sep == std::string_view::npos) {
      throw ParseError("malformed isometry '" + std::string(text) + "', expected linear=<name> t=<x>,<y>");
    }
    return {parse_linear_part(text.substr(lin.size(), sep - lin.size())), Point::parse(text.substr(sep + tr.size()))};
  }
};

inline Isometry identity_isometry() { return {}; }

inline Point apply(const Isometry& f, const Point& p) { return f(p); }

/// f after g.
inline Isometry compose(const Isometry& f, const Isometry& g) {
  return {compose(f.linear, g.linear), apply(f.linear, g.translation) + f.translation};
}

inline Isometry invert(const Isometry& f) {
  const LinearPart inv = invert(f.linear);
  return {inv, -apply(inv, f.translation)};
}

inline Isometry translation(const Point& v) { return {LinearPart::identity, v}; }

namespace detail {

// Linear part acting about `center`: p -> l(p - center) + center.
inline Isometry about(LinearPart l, const Point& center) {
  return compose(translation(center), compose(Isometry{l, {}}, translation(-center)));
}

}  // namespace detail

/// Counterclockwise rotation by 2n t-radians about `center`; n is taken mod 4.
inline Isometry rotation_2n(long long n, const Point& center = {}) {
  static constexpr std::array<LinearPart, 4> turns{LinearPart::identity, LinearPart::rot2, LinearPart::rot4,
                                                   LinearPart::rot6};
  const long long k = ((n % 4) + 4) % 4;
  return detail::about(turns[static_cast<std::size_t>(k)], center);
}

/// Axis directions whose reflections are taxicab isometries.
enum class SpecialAxis { y_eq_x, y_eq_neg_x, y_eq_0, x_eq_0 };

inline constexpr std::array<SpecialAxis, 4> kSpecialAxes{SpecialAxis::y_eq_x, SpecialAxis::y_eq_neg_x,
                                                         SpecialAxis::y_eq_0, SpecialAxis::x_eq_0};

inline std::string_view special_axis_name(SpecialAxis a) {
  static constexpr std::array<std::string_view, 4> names{"y=x", "y=-x", "y=0", "x=0"};
  return names[static_cast<std::size_t>(a)];
}

inline SpecialAxis parse_special_axis(std::string_view name) {
  for (SpecialAxis a : kSpecialAxes) {
    if (special_axis_name(a) == name) return a;
  }
  throw ParseError("unknown reflection axis '" + std::string(name) + "', expected y=x, y=-x, y=0 or x=0");
}

inline LinearPart linear_part_of(SpecialAxis a) {
  switch (a) {
    case SpecialAxis::y_eq_x: return LinearPart::reflect_y_eq_x;
    case SpecialAxis::y_eq_neg_x: return LinearPart::reflect_y_eq_neg_x;
    case SpecialAxis::y_eq_0: return LinearPart::reflect_x_axis;
    case SpecialAxis::x_eq_0: return LinearPart::reflect_y_axis;
  }
  return LinearPart::identity;
}

/// Reflection across the line parallel to `axis` through `through`.
inline Isometry reflection_special(SpecialAxis axis, const Point& through = {}) {
  return detail::about(linear_part_of(axis), through);
}

/// General affine map p -> matrix * p + offset; not necessarily an isometry.
struct AffineMap {
  Scalar xx{1}, xy{0}, yx{0}, yy{1};
  Point offset;

  Point operator()(const Point& p) const { return {xx * p.x + xy * p.y + offset.x, yx * p.x + yy * p.y + offset.y}; }

  static AffineMap from(const Isometry& f) {
    const SignedPermutation m = matrix_of(f.linear);
    return {Scalar(m.xx), Scalar(m.xy), Scalar(m.yx), Scalar(m.yy), f.translation};
  }
};

using PointPair = std::pair<Point, Point>;

struct IsometryDecision {
  bool is_isometry = false;
  std::optional<Isometry> canonical;  ///< Set when is_isometry.
  std::optional<PointPair> witness;   ///< Set otherwise: a pair whose distance changes.
};

/**
 * Decides whether an affine map preserves taxicab distance.
 *
 * It does exactly when the linear part is a signed permutation matrix. On a
 * negative answer the first failing pair among the probes
 * ((0,0),(1,0)), ((1,0),(0,1)), ((0,0),(0,1)), ((0,0),(1,1)) is returned; the
 * four probes pin down both columns and their disjoint support, so one of
 * them always fails for a non-isometry.
 */
inline IsometryDecision is_taxicab_isometry_affine(const AffineMap& m) {
  const auto unit_entry = [](const Scalar& s) { return s == Scalar(1) || s == Scalar(-1) || s.is_zero(); };
  if (unit_entry(m.xx) && unit_entry(m.xy) && unit_entry(m.yx) && unit_entry(m.yy)) {
    const auto to_int = [](const Scalar& s) { return s.sign(); };
    if (const auto l = linear_part_of(SignedPermutation{to_int(m.xx), to_int(m.xy), to_int(m.yx), to_int(m.yy)})) {
      return {true, Isometry{*l, m.offset}, std::nullopt};
    }
  }
  const std::array<PointPair, 4> probes{PointPair{{0, 0}, {1, 0}}, PointPair{{1, 0}, {0, 1}},
                                        PointPair{{0, 0}, {0, 1}}, PointPair{{0, 0}, {1, 1}}};
  for (const auto& [a, b] : probes) {
    if (taxicab_distance(a, b) != taxicab_distance(m(a), m(b))) return {false, std::nullopt, PointPair{a, b}};
  }
  throw std::logic_error("no witness among probes for a non-isometric affine map");
}

struct SampleFailure {
  PointPair pair;
  Scalar before;
  Scalar after;
};

struct SampleReport {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<SampleFailure> first_failure;
};

/// Checks d(P,Q) == d(m(P), m(Q)) on every supplied pair; stops at the first failure.
template <typename Map>
SampleReport verify_isometry_samples(const Map& m, std::span<const PointPair> pairs) {
  if (pairs.empty()) throw DomainError("isometry check needs at least one point pair");
  SampleReport report;
  for (const auto& [a, b] : pairs) {
    ++report.checked;
    const Scalar before = taxicab_distance(a, b);
    const Scalar after = taxicab_distance(m(a), m(b));
    if (before != after) {
      report.passed = false;
      report.first_failure = SampleFailure{{a, b}, before, after};
      break;
    }
  }
  return report;
}

/**
 * Taxicab rotation: moves `p` counterclockwise along the taxicab circle
 * about `center` through it, by arc length theta * radius. Distance to the
 * center is kept; other distances in general are not.
 */
inline Point taxicab_rotate(const Point& p, const Point& center, const Scalar& theta) {
  if (p == center) throw DegenerateInput("taxicab rotation of the center " + center.str() + " itself");
  if (theta.sign() < 0) throw DomainError("taxicab rotation needs a nonnegative angle, got " + theta.str());
  const TaxicabCircle c(center, taxicab_distance(p, center));
  const Scalar start = arc_length_ccw(c, c.corner(Side::S1), p);
  return circle_point_at_arc(c, start + theta * c.radius());
}

/// Reflection with PP' perpendicular to `l` and the midpoint of PP' on `l`.
/// Coincides with the Euclidean reflection.
inline Point taxicab_reflect(const Point& p, const Line& l) {
  const Point n = l.normal();
  const Scalar k = Scalar(2) * (dot(n, p) - l.c()) / dot(n, n);
  return p - k * n;
}

/// Integer grid [-bound, bound]^2 in row-major order (x outer, y inner).
inline std::vector<Point> integer_grid(int bound) {
  std::vector<Point> pts;
  for (int x = -bound; x <= bound; ++x) {
    for (int y = -bound; y <= bound; ++y) pts.push_back({x, y});
  }
  return pts;
}

/// First pair (a before b in grid order) whose taxicab distance `map`
/// changes. Points for which `skip` is true are not used.
template <typename Map, typename Skip>
std::optional<PointPair> find_distance_witness(const Map& map, int bound, Skip skip) {
  const auto grid = integer_grid(bound);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (skip(grid[i])) continue;
    const Point fa = map(grid[i]);
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      if (skip(grid[j])) continue;
      if (taxicab_distance(grid[i], grid[j]) != taxicab_distance(fa, map(grid[j]))) return PointPair{grid[i], grid[j]};
    }
  }
  return std::nullopt;
}

template <typename Map>
std::optional<PointPair> find_distance_witness(const Map& map, int bound = 4) {
  return find_distance_witness(map, bound, [](const Point&) { return false; });
}

}  // namespace taxicab

#endif  // TAXICAB_ISOMETRY_HPP
