#ifndef TAXICAB_FIGURES_HPP
#define TAXICAB_FIGURES_HPP

#include <array>
#include <string>
#include <string_view>

#include "taxicab/errors.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/i5t.hpp"
#include "taxicab/isometry.hpp"
#include "taxicab/svg.hpp"

namespace taxicab {

inline constexpr std::array<std::string_view, 6> kFigureNames{"circle", "unit-circle", "rotation-reflection",
                                                              "case1", "case2", "case3"};

/// Thrown for a figure name not in kFigureNames.
class UnknownFigure : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void axes(SvgScene& s, const Point& origin, const Scalar& lo_x, const Scalar& hi_x, const Scalar& lo_y,
                 const Scalar& hi_y) {
  s.segment(origin + Point{lo_x, 0}, origin + Point{hi_x, 0}, "axis");
  s.segment(origin + Point{0, lo_y}, origin + Point{0, hi_y}, "axis");
}

inline SvgScene circle_figure() {
  SvgScene s;
  const TaxicabCircle c({}, Scalar(4));
  s.circle(c);
  const Scalar h(5, 2);
  s.label({h, h}, "S1");
  s.label({-h, h}, "S2");
  s.label({-h, -h}, "S3");
  s.label({h, -h}, "S4");
  s.dot(c.center());
  s.label({0, Scalar(1, 2)}, "(x0,y0)");
  const Scalar x(6);
  s.label({x + Scalar(4), Scalar(3, 2)}, "S1: y=(r+y0)-(x-x0), x0<=x<=x0+r", "equation");
  s.label({x + Scalar(4), Scalar(1, 2)}, "S2: y=(r+y0)+(x-x0), x0-r<=x<=x0", "equation");
  s.label({x + Scalar(4), Scalar(-1, 2)}, "S3: y=-(r-y0)-(x-x0), x0-r<=x<=x0", "equation");
  s.label({x + Scalar(4), Scalar(-3, 2)}, "S4: y=-(r-y0)+(x-x0), x0<=x<=x0+r", "equation");
  return s;
}

inline SvgScene unit_circle_figure() {
  SvgScene s;
  s.circle(TaxicabCircle::unit());
  const Scalar reach(9, 8);
  axes(s, {}, -reach, reach, -reach, reach);
  for (int sign : {1, -1}) {
    const std::string text = sign > 0 ? "1" : "-1";
    s.label({Scalar(sign), Scalar(-1, 4)}, text);
    s.label({Scalar(1, 4), Scalar(sign)}, text);
  }
  return s;
}

// Left: P rotated by 1 t-radian about Q on the circle of radius 4.
// Right: P reflected across a line of slope 1/2 through the origin.
inline SvgScene rotation_reflection_figure() {
  SvgScene s;
  const Scalar four(4);
  const Scalar reach(17, 4);
  const Point q{};
  axes(s, q, Scalar(-1, 4), reach, Scalar(-1, 4), reach);
  s.segment({0, 4}, {4, 0}, "side");
  const Point p{3, 1};
  const Point p_rot = taxicab_rotate(p, q, Scalar(1));
  s.segment(q, p, "radius");
  s.segment(q, p_rot, "radius");
  s.dot(p);
  s.dot(p_rot);
  s.dot(q);
  s.label(p + Point{Scalar(1, 3), Scalar(1, 6)}, "P");
  s.label(p_rot + Point{Scalar(1, 4), Scalar(1, 4)}, "P'");
  s.label(q + Point{Scalar(1, 4), Scalar(-1, 3)}, "Q");
  s.angle_arc(q, p, p_rot, Scalar(1), "θ = " + angle_measure(q, p, p_rot).value.str());

  const Point o{Scalar(6), 0};
  axes(s, o, Scalar(-1, 4), reach, Scalar(-1, 4), reach);
  const Line l = line_through({}, {2, 1});
  const Point r{2, 0};
  const Point r_img = taxicab_reflect(r, l);
  const Point m = midpoint(r, r_img);
  s.segment(o, o + Point{four, 2}, "mirror", Stroke::dashed);
  s.segment(o + r, o + r_img, "guide", Stroke::dotted);
  s.dot(o + r);
  s.dot(o + r_img);
  s.dot(o + m);
  s.label(o + Point{Scalar(7, 2), 2}, "l");
  s.label(o + r + Point{Scalar(1, 4), Scalar(1, 4)}, "P");
  s.label(o + r_img + Point{Scalar(1, 4), Scalar(1, 4)}, "P'");
  s.label(o + m + Point{Scalar(2, 5), 0}, "M");
  return s;
}

// Isosceles triangle with apex at the origin and base vertices p, q on the
// circle of radius 4, annotated with its measured angles.
inline SvgScene triangle_figure(const Point& p, const Point& q) {
  SvgScene s;
  const IsoscelesTriangle t({}, p, q);
  const I5TReport report = i5t_analyze(t);
  const Point o{};
  const Scalar reach(17, 4);
  axes(s, o, -reach, reach, -reach, reach);
  s.circle(TaxicabCircle(o, t.leg()));
  for (const Point& v : {p, q}) {
    s.segment({v.x, 0}, v, "guide", Stroke::dashed);
    s.segment({0, v.y}, v, "guide", Stroke::dashed);
  }
  s.segment(o, p, "radius");
  s.segment(o, q, "radius");
  s.segment(p, q, "chord");
  s.label(midpoint(o, p) + Point{Scalar(-1, 4), Scalar(1, 4)}, "r");
  s.label(midpoint(o, q) + Point{Scalar(-1, 4), Scalar(1, 4)}, "r");
  s.label(midpoint(p, q) + Point{0, Scalar(1, 4)}, "c = " + taxicab_distance(p, q).str());
  s.dot(o);
  s.dot(p);
  s.dot(q);
  s.label(o + Point{Scalar(-1, 2), Scalar(-1, 3)}, "O");
  s.label(p + Point{Scalar(1, 2), Scalar(1, 3)}, "P(" + p.str() + ")");
  s.label(q + Point{Scalar(1, 2), Scalar(1, 3)}, "Q(" + q.str() + ")");

  const Isometry back = invert(report.normalizing_isometry);
  const Point at_alpha = back(report.image_initial);
  const Point at_beta = back(report.image_terminal);
  const Scalar size(1, 2);
  s.angle_arc(o, p, q, size, "θ = " + angle_measure(o, p, q).value.str());
  s.angle_arc(at_alpha, o, at_beta, size, "α = " + report.alpha.value.str());
  s.angle_arc(at_beta, o, at_alpha, size, "β = " + report.beta.value.str());
  return s;
}

}  // namespace detail

/// Builds the named diagram. Throws UnknownFigure for other names.
inline SvgScene emit_figure(std::string_view name) {
  const Point p{Scalar(3, 2), Scalar(5, 2)};
  if (name == "circle") return detail::circle_figure();
  if (name == "unit-circle") return detail::unit_circle_figure();
  if (name == "rotation-reflection") return detail::rotation_reflection_figure();
  if (name == "case1") return detail::triangle_figure(p, {3, 1});
  if (name == "case2") return detail::triangle_figure(p, {-3, 1});
  if (name == "case3") return detail::triangle_figure(p, {-3, -1});
  throw UnknownFigure("unknown figure '" + std::string(name) + "'");
}

}  // namespace taxicab

#endif  // TAXICAB_FIGURES_HPP
