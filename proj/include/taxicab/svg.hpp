#ifndef TAXICAB_SVG_HPP
#define TAXICAB_SVG_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/circle.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/scalar.hpp"

namespace taxicab {

enum class Stroke { solid, dashed, dotted };

/**
 * Static diagram built from exact geometry. Coordinates stay rational until
 * render(), which maps (x, y) to pixels (x * scale, -y * scale) and rounds to
 * three decimals. Output is a pure function of the scene and the scale.
 */
class SvgScene {
 public:
  struct Segment {
    Point a;
    Point b;
    std::string role;  // CSS class, e.g. "side", "axis", "radius"
    Stroke stroke = Stroke::solid;
  };
  struct Dot {
    Point at;
  };
  struct Label {
    Point at;
    std::string text;
    std::string role = "label";
  };
  struct Polyline {
    std::vector<Point> points;
    std::string role;
  };
  using Element = std::variant<Segment, Dot, Label, Polyline>;

  void segment(Point a, Point b, std::string role, Stroke stroke = Stroke::solid) {
    elements_.emplace_back(Segment{std::move(a), std::move(b), std::move(role), stroke});
  }
  void dot(Point at) { elements_.emplace_back(Dot{std::move(at)}); }
  void label(Point at, std::string text, std::string role = "label") {
    elements_.emplace_back(Label{std::move(at), std::move(text), std::move(role)});
  }
  void polyline(std::vector<Point> points, std::string role) {
    elements_.emplace_back(Polyline{std::move(points), std::move(role)});
  }

  /// Taxicab circle drawn as its four sides, S1..S4.
  void circle(const TaxicabCircle& c) {
    for (int i = 0; i < 4; ++i) {
      segment(c.corner(static_cast<Side>(i)), c.corner(static_cast<Side>((i + 1) % 4)), "side");
    }
  }

  /**
   * Marks the undirected angle p-vertex-q with an arc of the taxicab circle
   * of radius `size` about the vertex, and a label just outside it.
   */
  void angle_arc(const Point& vertex, const Point& p, const Point& q, const Scalar& size, std::string text) {
    const TaxicabCircle c(vertex, size);
    Point from = ray_circle_intersection(c, p - vertex);
    Point to = ray_circle_intersection(c, q - vertex);
    Scalar arc = arc_length_ccw(c, from, to);
    if (arc > Scalar(4) * size) {
      std::swap(from, to);
      arc = c.perimeter() - arc;
    }
    const Scalar start = arc_length_ccw(c, c.corner(Side::S1), from);
    std::vector<Point> path{from};
    const Scalar side_len = Scalar(2) * size;
    for (int k = 1; k <= 4; ++k) {
      const Scalar corner_at = Scalar(k) * side_len;  // corner offsets past `start`
      const Scalar ahead = mod(corner_at - start, c.perimeter());
      if (ahead.sign() > 0 && ahead < arc) path.push_back(circle_point_at_arc(c, corner_at));
    }
    std::sort(path.begin() + 1, path.end(), [&](const Point& a, const Point& b) {
      return arc_length_ccw(c, from, a) < arc_length_ccw(c, from, b);
    });
    path.push_back(to);
    polyline(std::move(path), "angle");
    const Point mid = circle_point_at_arc(c, start + arc / Scalar(2));
    label(vertex + Scalar(9, 5) * (mid - vertex), std::move(text), "angle-label");
  }

  const std::vector<Element>& elements() const { return elements_; }

  std::string render(int scale) const;

 private:
  std::vector<Element> elements_;
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string stroke_attr(Stroke s) {
  switch (s) {
    case Stroke::solid: return "";
    case Stroke::dashed: return " stroke-dasharray=\"6 4\"";
    case Stroke::dotted: return " stroke-dasharray=\"2 3\"";
  }
  return "";
}

}  // namespace detail

inline std::string SvgScene::render(int scale) const {
  const Scalar k(scale);
  const auto px = [&](const Scalar& v) { return (k * v).to_fixed(3); };
  const auto py = [&](const Scalar& v) { return (-k * v).to_fixed(3); };

  // Bounding box in plane units, padded by one unit.
  bool any = false;
  Scalar min_x, max_x, min_y, max_y;
  const auto grow = [&](const Point& p) {
    if (!any) {
      min_x = max_x = p.x;
      min_y = max_y = p.y;
      any = true;
      return;
    }
    if (p.x < min_x) min_x = p.x;
    if (p.x > max_x) max_x = p.x;
    if (p.y < min_y) min_y = p.y;
    if (p.y > max_y) max_y = p.y;
  };
  for (const auto& e : elements_) {
    std::visit(
        [&](const auto& el) {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, Segment>) {
            grow(el.a);
            grow(el.b);
          } else if constexpr (std::is_same_v<T, Polyline>) {
            for (const auto& p : el.points) grow(p);
          } else {
            grow(el.at);
          }
        },
        e);
  }
  if (!any) grow({});
  const Scalar pad(1);
  const Scalar left = min_x - pad;
  const Scalar top = max_y + pad;
  const Scalar width = max_x - min_x + Scalar(2) * pad;
  const Scalar height = max_y - min_y + Scalar(2) * pad;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + (k * width).to_fixed(3) + "\" height=\"" +
         (k * height).to_fixed(3) + "\" viewBox=\"" + px(left) + " " + py(top) + " " + (k * width).to_fixed(3) + " " +
         (k * height).to_fixed(3) + "\">\n";
  out += "<style>line,polyline{stroke:black;stroke-width:1.5;fill:none}.side{stroke-width:2}"
         ".axis{stroke:#555}.radius{stroke:#c00}.chord{stroke:#070}.angle{stroke:#00c}"
         "text{font-family:serif;font-size:14px}.angle-label{fill:#00c}</style>\n";
  for (const auto& e : elements_) {
    std::visit(
        [&](const auto& el) {
          using T = std::decay_t<decltype(el)>;
          if constexpr (std::is_same_v<T, Segment>) {
            out += "<line class=\"" + el.role + "\" x1=\"" + px(el.a.x) + "\" y1=\"" + py(el.a.y) + "\" x2=\"" +
                   px(el.b.x) + "\" y2=\"" + py(el.b.y) + "\"" + detail::stroke_attr(el.stroke) + "/>\n";
          } else if constexpr (std::is_same_v<T, Dot>) {
            out += "<circle class=\"point\" cx=\"" + px(el.at.x) + "\" cy=\"" + py(el.at.y) + "\" r=\"3\"/>\n";
          } else if constexpr (std::is_same_v<T, Label>) {
            out += "<text class=\"" + el.role + "\" x=\"" + px(el.at.x) + "\" y=\"" + py(el.at.y) +
                   "\" text-anchor=\"middle\">" + detail::xml_escape(el.text) + "</text>\n";
          } else {
            out += "<polyline class=\"" + el.role + "\" points=\"";
            for (std::size_t i = 0; i < el.points.size(); ++i) {
              if (i > 0) out += ' ';
              out += px(el.points[i].x) + "," + py(el.points[i].y);
            }
            out += "\"/>\n";
          }
        },
        e);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace taxicab

#endif  // TAXICAB_SVG_HPP
