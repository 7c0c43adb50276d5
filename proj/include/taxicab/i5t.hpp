#ifndef TAXICAB_I5T_HPP
#define TAXICAB_I5T_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/isometry.hpp"
#include "taxicab/scalar.hpp"

// Base angles of isosceles triangles in the taxicab plane.
//
// With the apex at the origin both base vertices lie on one taxicab circle.
// Whether the base angles agree depends on how the two radii sit relative to
// the quadrants: same quadrant, adjacent quadrants (sharing an axis) or
// opposing quadrants. Points on an axis belong to both neighbouring quadrants.

namespace taxicab {

enum class QuadrantKind : std::uint8_t { same_quadrant, adjacent_quadrants, opposing_quadrants };

inline constexpr std::array<QuadrantKind, 3> kQuadrantKinds{
    QuadrantKind::same_quadrant, QuadrantKind::adjacent_quadrants, QuadrantKind::opposing_quadrants};

inline std::string_view quadrant_kind_name(QuadrantKind k) {
  static constexpr std::array<std::string_view, 3> names{"same_quadrant", "adjacent_quadrants", "opposing_quadrants"};
  return names[static_cast<std::size_t>(k)];
}

struct Configuration {
  QuadrantKind kind;
  std::vector<QuadrantKind> all_kinds;  // ascending, always contains kind

  bool qualifies(QuadrantKind k) const { return std::ranges::find(all_kinds, k) != all_kinds.end(); }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

/// Closed quadrants containing `p`, as a bitmask (bit i = quadrant i+1).
inline unsigned quadrants_of(const Point& p) {
  const int sx = p.x.sign();
  const int sy = p.y.sign();
  unsigned mask = 0;
  if (sx >= 0 && sy >= 0) mask |= 1U;
  if (sx <= 0 && sy >= 0) mask |= 2U;
  if (sx <= 0 && sy <= 0) mask |= 4U;
  if (sx >= 0 && sy <= 0) mask |= 8U;
  return mask;
}

/// Classifies the pair of radii ending at p and q (apex at the origin).
/// The primary kind takes precedence opposing > adjacent > same.
inline Configuration classify_configuration(const Point& p, const Point& q) {
  if (p.is_origin() || q.is_origin()) throw DegenerateInput("base vertex at the apex");
  const unsigned mp = quadrants_of(p);
  const unsigned mq = quadrants_of(q);
  bool found[3] = {false, false, false};
  for (int i = 0; i < 4; ++i) {
    if (!(mp & (1U << i))) continue;
    for (int j = 0; j < 4; ++j) {
      if (!(mq & (1U << j))) continue;
      const int gap = (i - j + 4) % 4;
      found[gap == 0 ? 0 : gap == 2 ? 2 : 1] = true;
    }
  }
  Configuration c{QuadrantKind::same_quadrant, {}};
  for (QuadrantKind k : kQuadrantKinds) {
    if (found[static_cast<std::size_t>(k)]) {
      c.all_kinds.push_back(k);
      c.kind = k;
    }
  }
  return c;
}

/// Isosceles triangle with legs apex-p and apex-q of equal taxicab length.
class IsoscelesTriangle {
 public:
  IsoscelesTriangle(Point apex, Point p, Point q) : apex_(std::move(apex)), p_(std::move(p)), q_(std::move(q)) {
    if (p_ == apex_ || q_ == apex_) throw DegenerateInput("base vertex coincides with apex " + apex_.str());
    if (taxicab_distance(p_, apex_) != taxicab_distance(q_, apex_)) {
      throw DomainError("legs differ: d(apex,p) = " + taxicab_distance(p_, apex_).str() +
                        ", d(apex,q) = " + taxicab_distance(q_, apex_).str());
    }
    if (cross(p_ - apex_, q_ - apex_).is_zero()) {
      throw DegenerateInput("apex " + apex_.str() + ", " + p_.str() + " and " + q_.str() + " are collinear");
    }
  }

  const Point& apex() const { return apex_; }
  const Point& p() const { return p_; }
  const Point& q() const { return q_; }
  Scalar leg() const { return taxicab_distance(p_, apex_); }

 private:
  Point apex_;
  Point p_;
  Point q_;
};

namespace detail {

inline void require_origin_isosceles(const Point& p, const Point& q) {
  static_cast<void>(IsoscelesTriangle(Point{}, p, q));
}

// (initial, terminal): the apex angle sweeps counterclockwise from the
// initial radius to the terminal one through less than a straight angle.
inline std::pair<Point, Point> ccw_order(const Point& a, const Point& b) {
  if (cross(a, b).sign() > 0) return {a, b};
  return {b, a};
}

inline bool in_q1(const Point& p) { return p.x.sign() >= 0 && p.y.sign() >= 0; }
inline bool in_q2(const Point& p) { return p.x.sign() <= 0 && p.y.sign() >= 0; }
inline bool in_q3(const Point& p) { return p.x.sign() <= 0 && p.y.sign() <= 0; }

// Canonical placements, tested in this order:
//   same_quadrant:      both radii in quadrant I;
//   adjacent_quadrants: initial in I, terminal in II, initial not lower;
//   opposing_quadrants: initial in I, terminal in III.
inline bool is_canonical(QuadrantKind k, const Point& initial, const Point& terminal) {
  switch (k) {
    case QuadrantKind::same_quadrant: return in_q1(initial) && in_q1(terminal);
    case QuadrantKind::adjacent_quadrants: return in_q1(initial) && in_q2(terminal) && initial.y >= terminal.y;
    case QuadrantKind::opposing_quadrants: return in_q1(initial) && in_q3(terminal);
  }
  return false;
}

inline std::optional<QuadrantKind> canonical_case(const Point& initial, const Point& terminal) {
  for (QuadrantKind k : kQuadrantKinds) {
    if (is_canonical(k, initial, terminal)) return k;
  }
  return std::nullopt;
}

// Closed-form base angles for a canonical placement, (at initial, at terminal).
inline std::pair<Scalar, Scalar> closed_form(QuadrantKind k, const Point& initial, const Point& terminal) {
  const Scalar r = taxicab_norm(initial);
  const Scalar two(2);
  switch (k) {
    case QuadrantKind::same_quadrant:
      return {Scalar(3) - two * initial.x / r, Scalar(3) - two * terminal.y / r};
    case QuadrantKind::adjacent_quadrants: {
      const Scalar& x0 = initial.x;
      const Scalar& y0 = initial.y;
      const Scalar x1 = -terminal.x;
      const Scalar& y1 = terminal.y;
      const Scalar chord = x1 + x0 + y0 - y1;
      return {two * (x0 + x1) / chord - two * x0 / r, Scalar(4) - two * (x0 + x1) / chord - two * x1 / r};
    }
    case QuadrantKind::opposing_quadrants: {
      const Scalar x1 = -terminal.x;
      const Scalar y1 = -terminal.y;
      return {(initial.y - y1) / r, (x1 - initial.x) / r};
    }
  }
  return {};
}

}  // namespace detail

struct NormalizedTriangle {
  Isometry isometry;          ///< Sends the apex to the origin.
  Point p;                    ///< isometry(p)
  Point q;                    ///< isometry(q)
  QuadrantKind canonical_case;
  Point initial;              ///< Image radius the apex angle sweeps from.
  Point terminal;             ///< Image radius it sweeps to.
};

/**
 * Moves the triangle to a canonical placement with the apex at the origin.
 *
 * All eight linear parts are tried; among the placements that are canonical
 * the one with the earliest case wins (same, adjacent, opposing), then the
 * lexicographically largest (initial, terminal). The choice depends only on
 * the orbit of the triangle under the isometry group, so images of one
 * triangle under any group element get the same placement.
 */
inline NormalizedTriangle normalize_triangle(const IsoscelesTriangle& t) {
  std::optional<NormalizedTriangle> best;
  const Isometry to_origin = translation(-t.apex());
  for (LinearPart l : kLinearParts) {
    const Isometry f = compose(Isometry{l, {}}, to_origin);
    const Point fp = f(t.p());
    const Point fq = f(t.q());
    const auto [initial, terminal] = detail::ccw_order(fp, fq);
    const auto k = detail::canonical_case(initial, terminal);
    if (!k) continue;
    const auto key = [](const NormalizedTriangle& n) {
      return std::tuple(static_cast<int>(n.canonical_case), -n.initial.x, -n.initial.y, -n.terminal.x, -n.terminal.y);
    };
    NormalizedTriangle cand{f, fp, fq, *k, initial, terminal};
    if (!best || key(cand) < key(*best)) best = std::move(cand);
  }
  if (!best) throw std::logic_error("no canonical placement found");
  return *best;
}

/**
 * Closed-form base angles for a triangle with apex at the origin in a
 * canonical placement. Returns (alpha, beta): alpha is the angle at the
 * vertex the apex angle sweeps from (counterclockwise), beta the angle at
 * the vertex it sweeps to. The order of p and q does not matter.
 */
inline std::pair<TAngle, TAngle> base_angles(const Point& p, const Point& q) {
  detail::require_origin_isosceles(p, q);
  const auto [initial, terminal] = detail::ccw_order(p, q);
  const auto k = detail::canonical_case(initial, terminal);
  if (!k) {
    throw DomainError("radii to " + p.str() + " and " + q.str() +
                      " are not in a canonical placement; use normalize_triangle first");
  }
  auto [alpha, beta] = detail::closed_form(*k, initial, terminal);
  return {TAngle{std::move(alpha)}, TAngle{std::move(beta)}};
}

/**
 * Predicted base-angle equality for apex at the origin, compared on
 * component magnitudes:
 *   same quadrant:      |x_p| = |y_q| and |x_q| = |y_p|;
 *   adjacent quadrants: |x_p| = |x_q| and |y_p| = |y_q|;
 *   opposing quadrants: always.
 * A pair qualifying for several configurations through axis points is
 * predicted equal if any qualifying condition holds.
 */
inline bool i5t_condition(const Point& p, const Point& q) {
  detail::require_origin_isosceles(p, q);
  const Configuration c = classify_configuration(p, q);
  if (c.qualifies(QuadrantKind::opposing_quadrants)) return true;
  if (c.qualifies(QuadrantKind::same_quadrant) && abs(p.x) == abs(q.y) && abs(q.x) == abs(p.y)) return true;
  if (c.qualifies(QuadrantKind::adjacent_quadrants) && abs(p.x) == abs(q.x) && abs(p.y) == abs(q.y)) return true;
  return false;
}

struct I5TReport {
  Configuration configuration;
  TAngle alpha;
  TAngle beta;
  bool condition_predicted = false;
  bool angles_equal_measured = false;
  bool agreement = false;
  bool closed_form_matches = false;
  Isometry normalizing_isometry;
  Point image_initial;
  Point image_terminal;
};

/**
 * Full analysis of one isosceles triangle. Base angles are measured on the
 * given triangle and also evaluated in closed form on its canonical image;
 * `closed_form_matches` records whether the two agree.
 */
inline I5TReport i5t_analyze(const IsoscelesTriangle& t) {
  const NormalizedTriangle n = normalize_triangle(t);
  const Isometry back = invert(n.isometry);
  const Point at_initial = back(n.initial);
  const Point at_terminal = back(n.terminal);

  I5TReport report;
  const Point p0 = t.p() - t.apex();
  const Point q0 = t.q() - t.apex();
  report.configuration = classify_configuration(p0, q0);
  report.alpha = angle_measure(at_initial, t.apex(), at_terminal);
  report.beta = angle_measure(at_terminal, t.apex(), at_initial);
  const auto [cf_alpha, cf_beta] = base_angles(n.initial, n.terminal);
  report.closed_form_matches = cf_alpha == report.alpha && cf_beta == report.beta;
  report.condition_predicted = i5t_condition(p0, q0);
  report.angles_equal_measured = report.alpha == report.beta;
  report.agreement = report.condition_predicted == report.angles_equal_measured;
  report.normalizing_isometry = n.isometry;
  report.image_initial = n.initial;
  report.image_terminal = n.terminal;
  return report;
}

}  // namespace taxicab

#endif  // TAXICAB_I5T_HPP
