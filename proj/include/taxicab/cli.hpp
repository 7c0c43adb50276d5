#ifndef TAXICAB_CLI_HPP
#define TAXICAB_CLI_HPP

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "taxicab/angle.hpp"
#include "taxicab/circle.hpp"
#include "taxicab/errors.hpp"
#include "taxicab/figures.hpp"
#include "taxicab/geometry.hpp"
#include "taxicab/i5t.hpp"
#include "taxicab/isometry.hpp"
#include "taxicab/json.hpp"
#include "taxicab/scalar.hpp"

// Command-line front end. run_command() does all the work and returns the
// text it would print, so it can be tested without spawning a process.
//
// Exit status: 0 success, 1 domain error from the kernel, 2 usage error
// (unknown subcommand, wrong arity, malformed literal, unknown figure).

namespace taxicab::cli {

struct CommandResult {
  int status = 0;
  std::string out;
  std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kDefaultSvgScale = 40;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Pixels per unit from TAXI_SVG_SCALE (positive integer), default 40.
inline int svg_scale_from(const char* env) {
  if (env == nullptr) return kDefaultSvgScale;
  const std::string_view text(env);
  int value = 0;
  if (text.empty() || text.size() > 6) throw UsageError("TAXI_SVG_SCALE must be a positive integer");
  for (char c : text) {
    if (c < '0' || c > '9') throw UsageError("TAXI_SVG_SCALE must be a positive integer");
    value = value * 10 + (c - '0');
  }
  if (value <= 0) throw UsageError("TAXI_SVG_SCALE must be a positive integer");
  return value;
}

namespace detail {

inline std::vector<Point> points(const std::vector<std::string>& args) {
  std::vector<Point> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(Point::parse(a));
  return out;
}

// One composition step: translate:X,Y | rotate:N[@X,Y] | reflect:AXIS[@X,Y]
// | linear=<name> t=<x>,<y>.
inline Isometry parse_step(std::string_view step) {
  if (step.starts_with("linear=")) return Isometry::parse(step);
  const auto colon = step.find(':');
  if (colon == std::string_view::npos) throw ParseError("malformed isometry step '" + std::string(step) + "'");
  const std::string_view kind = step.substr(0, colon);
  std::string_view arg = step.substr(colon + 1);
  Point about;
  if (const auto at = arg.find('@'); at != std::string_view::npos) {
    about = Point::parse(arg.substr(at + 1));
    arg = arg.substr(0, at);
  }
  if (kind == "translate") return translation(Point::parse(arg));
  if (kind == "rotate") {
    const Scalar n = Scalar::parse(arg);
    if (!n.is_integer()) throw ParseError("rotate step needs an integer count of quarter turns");
    return rotation_2n(static_cast<long long>(n.numerator() % 4), about);
  }
  if (kind == "reflect") return reflection_special(parse_special_axis(arg), about);
  throw ParseError("unknown isometry step '" + std::string(kind) + "'");
}

inline Json circle_position_json(const std::optional<CirclePosition>& pos) {
  Json j;
  j["on_circle"] = pos.has_value();
  if (pos) {
    j["side"] = std::string(side_name(pos->side));
    j["corner"] = pos->corner;
  }
  return j;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline CommandResult run_command(std::span<const std::string> args) {
  CommandResult result;
  std::ostringstream out;

  CLI::App app{"Exact taxicab-plane geometry", "taxi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::vector<std::string> pts;
  bool euclid = false;
  auto* dist = app.add_subcommand("dist", "Taxicab distance between two points");
  dist->add_option("points", pts, "A B")->expected(2)->required();
  dist->add_flag("--euclidean-squared", euclid, "Squared Euclidean distance instead");
  dist->callback([&] {
    const auto p = detail::points(pts);
    out << (euclid ? euclidean_distance_squared(p[0], p[1]) : taxicab_distance(p[0], p[1])) << '\n';
  });

  auto* mid = app.add_subcommand("midpoint", "Midpoint of a segment");
  mid->add_option("points", pts, "A B")->expected(2)->required();
  mid->callback([&] {
    const auto p = detail::points(pts);
    out << midpoint(p[0], p[1]).str() << '\n';
  });

  bool directed = false;
  std::string slope;
  auto* ang = app.add_subcommand("angle", "Angle P-V-Q in t-radians: angle V P Q");
  ang->add_option("points", pts, "V P Q")->expected(0, 3);
  ang->add_flag("--directed", directed, "Counterclockwise arc from ray VP to ray VQ");
  ang->add_option("--standard", slope, "Standard-position measure of a ray with this positive slope");
  ang->callback([&] {
    if (!slope.empty()) {
      if (!pts.empty() || directed) throw UsageError("--standard takes no points");
      out << angle_standard_position(Scalar::parse(slope)) << '\n';
      return;
    }
    if (pts.size() != 3) throw UsageError("angle needs three points: V P Q");
    const auto p = detail::points(pts);
    out << (directed ? directed_arc(p[0], p[1], p[2]) : angle_measure(p[0], p[1], p[2])) << '\n';
  });

  std::string center_arg, radius_arg, at_arg, classify_arg, ray_arg;
  std::vector<std::string> arc_args;
  auto* circ = app.add_subcommand("circle", "Taxicab circle queries: circle CENTER RADIUS <query>");
  circ->add_option("center", center_arg)->required();
  circ->add_option("radius", radius_arg)->required();
  auto* q_at = circ->add_option("--at", at_arg, "Point at counterclockwise arc length S from the east corner");
  auto* q_classify = circ->add_option("--classify", classify_arg, "Side of the circle holding point P");
  auto* q_arc = circ->add_option("--arc", arc_args, "Counterclockwise arc length from A to B")->expected(2);
  auto* q_ray = circ->add_option("--ray", ray_arg, "Where the ray from the center along D meets the circle");
  q_at->excludes(q_classify)->excludes(q_arc)->excludes(q_ray);
  q_classify->excludes(q_arc)->excludes(q_ray);
  q_arc->excludes(q_ray);
  circ->callback([&] {
    const TaxicabCircle c(Point::parse(center_arg), Scalar::parse(radius_arg));
    if (!at_arg.empty()) {
      out << circle_point_at_arc(c, Scalar::parse(at_arg)).str() << '\n';
    } else if (!classify_arg.empty()) {
      out << detail::circle_position_json(point_on_circle(c, Point::parse(classify_arg))).dump() << '\n';
    } else if (!arc_args.empty()) {
      const auto p = detail::points(arc_args);
      out << arc_length_ccw(c, p[0], p[1]) << '\n';
    } else if (!ray_arg.empty()) {
      out << ray_circle_intersection(c, Point::parse(ray_arg)).str() << '\n';
    } else {
      out << c.perimeter() << '\n';
    }
  });

  std::string point_arg, theta_arg;
  auto* rot = app.add_subcommand("rotate", "Taxicab rotation: rotate P CENTER THETA");
  rot->add_option("point", point_arg, "P")->required();
  rot->add_option("center", center_arg, "CENTER")->required();
  rot->add_option("theta", theta_arg, "t-radians, nonnegative")->required();
  rot->callback([&] {
    out << taxicab_rotate(Point::parse(point_arg), Point::parse(center_arg), Scalar::parse(theta_arg)).str() << '\n';
  });

  auto* refl = app.add_subcommand("reflect", "Reflect P across the line through A and B: reflect P A B");
  refl->add_option("points", pts, "P A B")->expected(3)->required();
  refl->callback([&] {
    const auto p = detail::points(pts);
    out << taxicab_reflect(p[0], line_through(p[1], p[2])).str() << '\n';
  });

  std::vector<std::string> steps;
  std::string apply_arg, matrix_arg, offset_arg;
  auto* iso = app.add_subcommand(
      "isometry", "Compose isometry steps (first listed acts first), or decide an affine map with --matrix");
  iso->add_option("steps", steps, "translate:X,Y | rotate:N[@X,Y] | reflect:AXIS[@X,Y] | 'linear=NAME t=X,Y'");
  iso->add_option("--apply", apply_arg, "Also map this point");
  auto* q_matrix = iso->add_option("--matrix", matrix_arg, "a,b,c,d for the linear part [[a,b],[c,d]]");
  iso->add_option("--offset", offset_arg, "Offset of the affine map")->needs(q_matrix);
  iso->callback([&] {
    if (!matrix_arg.empty()) {
      if (!steps.empty()) throw UsageError("--matrix cannot be combined with steps");
      std::vector<Scalar> m;
      std::string_view rest = matrix_arg;
      while (true) {
        const auto comma = rest.find(',');
        m.push_back(Scalar::parse(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (m.size() != 4) throw UsageError("--matrix needs four comma-separated entries");
      const AffineMap map{m[0], m[1], m[2], m[3], offset_arg.empty() ? Point{} : Point::parse(offset_arg)};
      const IsometryDecision d = is_taxicab_isometry_affine(map);
      Json j;
      j["is_isometry"] = d.is_isometry;
      if (d.canonical) j["isometry"] = d.canonical->str();
      if (d.witness) {
        const auto& [a, b] = *d.witness;
        j["witness"] = Json::array({a.str(), b.str()});
        j["distance_before"] = taxicab_distance(a, b).str();
        j["distance_after"] = taxicab_distance(map(a), map(b)).str();
      }
      if (!apply_arg.empty()) j["image"] = map(Point::parse(apply_arg)).str();
      out << j.dump() << '\n';
      return;
    }
    Isometry f;
    for (const auto& s : steps) f = compose(detail::parse_step(s), f);
    Json j = to_json(f);
    if (!apply_arg.empty()) j["image"] = f(Point::parse(apply_arg)).str();
    out << j.dump() << '\n';
  });

  auto* tri = app.add_subcommand("triangle", "Base-angle analysis of an isosceles triangle: triangle APEX P Q");
  tri->add_option("points", pts, "APEX P Q")->expected(3)->required();
  tri->callback([&] {
    const auto p = detail::points(pts);
    out << to_json(i5t_analyze(IsoscelesTriangle(p[0], p[1], p[2]))).dump() << '\n';
  });

  std::string figure_name;
  auto* fig = app.add_subcommand("figure", "SVG diagram: circle, unit-circle, rotation-reflection, case1, case2, case3");
  fig->add_option("name", figure_name)->required();
  fig->callback([&] {
    const int scale = svg_scale_from(std::getenv("TAXI_SVG_SCALE"));
    out << emit_figure(figure_name).render(scale);
  });

  const auto fail = [&](int status, std::string_view what) {
    result.status = status;
    result.err = "taxi: " + std::string(what) + "\n";
    return result;
  };
  // CLI11 consumes its argument vector from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, e.what());
  } catch (const ParseError& e) {
    return fail(kExitUsage, e.what());
  } catch (const UsageError& e) {
    return fail(kExitUsage, e.what());
  } catch (const UnknownFigure& e) {
    return fail(kExitUsage, e.what());
  } catch (const Error& e) {
    return fail(kExitDomain, e.what());
  }
  result.out = out.str();
  return result;
}

}  // namespace taxicab::cli

#endif  // TAXICAB_CLI_HPP
