#ifndef AMPCYL_FIGURE_HPP
#define AMPCYL_FIGURE_HPP

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ampcyl/cases.hpp"
#include "ampcyl/cone2.hpp"
#include "ampcyl/verify.hpp"

namespace ampcyl {

// Everything in (a, b) coordinates, exact; the window is [-R, R]^2.
struct FigureModel {
  static constexpr int R = 5;

  struct Boundary {
    Ray2 ray;
    Vec2 end;           // where the ray leaves the window
    std::string label;  // "b = -3/2·a" or "a = 0"
  };
  struct Region {
    std::string cylinder;
    std::vector<Vec2> polygon;  // counterclockwise; two points for a Single cone
  };

  std::string type;
  std::vector<Boundary> ample;
  std::vector<Region> regions;
};

inline Vec2 window_exit(const Ray2& r) {
  BigInt ax = abs(r.x()), ay = abs(r.y());
  BigInt m = ax < ay ? ay : ax;
  Rational t(BigInt(FigureModel::R), m);
  return {t * r.x(), t * r.y()};
}

inline std::string slope_label(const Ray2& r) {
  if (r.x() == 0) return "a = 0";
  return "b = " + to_string(Rational(r.y()) / Rational(r.x())) + "·a";
}

// Cone intersected with the window.
inline std::vector<Vec2> window_polygon(const Wedge& w) {
  if (w.kind() == Wedge::Kind::Zero) return {};
  if (w.kind() == Wedge::Kind::Single) return {Vec2{0, 0}, window_exit(w.start())};
  std::vector<Vec2> pts{Vec2{0, 0}, window_exit(w.start())};
  const Rational r = FigureModel::R;
  std::vector<Vec2> corners{{r, r}, {-r, r}, {-r, -r}, {r, -r}};
  std::vector<Vec2> inside;
  for (const auto& c : corners)
    if (in_relint(w, Ray2::of(c))) inside.push_back(c);
  std::sort(inside.begin(), inside.end(),
            [&](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
  for (const auto& c : inside) pts.push_back(c);
  pts.push_back(window_exit(w.end()));
  return pts;
}

inline FigureModel figure_model(const CaseFile& c, const std::optional<CylinderSet>& cylinders = {}) {
  FigureModel m;
  m.type = c.type_label;
  Wedge amp = case_ample_wedge(c);
  for (const Ray2& r : {amp.start(), amp.end()}) m.ample.push_back({r, window_exit(r), slope_label(r)});
  CylinderSet set;
  if (cylinders) set = *cylinders;
  else if (!c.expected.covering_sets.empty()) set = c.expected.covering_sets.front();
  for (const auto& n : set) m.regions.push_back({n, window_polygon(polarity_cone(c, n))});
  return m;
}

// Closed convex polygon membership, exact.
inline bool point_in_polygon(const std::vector<Vec2>& poly, const Vec2& p) {
  if (poly.size() < 3) return false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % poly.size()];
    if (cross(Vec2{b[0] - a[0], b[1] - a[1]}, Vec2{p[0] - a[0], p[1] - a[1]}) < 0) return false;
  }
  return true;
}

namespace detail {

inline std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0 ? 0.0 : v);
  return buf;
}

inline std::string px(const Rational& a) { return fmt6(200 + 30 * to_double(a)); }
inline std::string py(const Rational& b) { return fmt6(200 - 30 * to_double(b)); }

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '<') out += "&lt;";
    else if (ch == '>') out += "&gt;";
    else if (ch == '&') out += "&amp;";
    else if (ch == '"') out += "&quot;";
    else out += ch;
  }
  return out;
}

} // namespace detail

inline std::string render_svg(const FigureModel& m) {
  using detail::px;
  using detail::py;
  static const char* fills[] = {"#808080", "#4a7fb5", "#b5654a", "#5b9e5b", "#9e8a3b"};
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
        "viewBox=\"0 0 400 400\">\n"
     << "  <title>" << detail::xml_escape(m.type) << "</title>\n"
     << "  <defs>\n"
     << "    <marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" "
        "orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker>\n"
     << "    <clipPath id=\"window\"><rect x=\"50\" y=\"50\" width=\"300\" height=\"300\"/></clipPath>\n"
     << "  </defs>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"400\" height=\"400\" fill=\"white\"/>\n"
     << "  <g clip-path=\"url(#window)\">\n";
  for (std::size_t i = 0; i < m.regions.size(); ++i) {
    const auto& r = m.regions[i];
    const char* fill = fills[i % 5];
    if (r.polygon.size() == 2) {
      os << "    <line class=\"pol\" data-cylinder=\"" << detail::xml_escape(r.cylinder) << "\" x1=\""
         << px(r.polygon[0][0]) << "\" y1=\"" << py(r.polygon[0][1]) << "\" x2=\"" << px(r.polygon[1][0])
         << "\" y2=\"" << py(r.polygon[1][1]) << "\" stroke=\"" << fill << "\" stroke-width=\"2\"/>\n";
      continue;
    }
    os << "    <polygon class=\"pol\" data-cylinder=\"" << detail::xml_escape(r.cylinder) << "\" points=\"";
    for (std::size_t k = 0; k < r.polygon.size(); ++k)
      os << (k ? " " : "") << px(r.polygon[k][0]) << "," << py(r.polygon[k][1]);
    os << "\" fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
  }
  for (const auto& b : m.ample)
    os << "    <line class=\"amp\" x1=\"200\" y1=\"200\" x2=\"" << px(b.end[0]) << "\" y2=\"" << py(b.end[1])
       << "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"2,3\"/>\n";
  os << "  </g>\n"
     << "  <line x1=\"40\" y1=\"200\" x2=\"365\" y2=\"200\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n"
     << "  <line x1=\"200\" y1=\"360\" x2=\"200\" y2=\"35\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n"
     << "  <text x=\"372\" y=\"204\" font-family=\"serif\" font-size=\"14\" font-style=\"italic\">a</text>\n"
     << "  <text x=\"196\" y=\"28\" font-family=\"serif\" font-size=\"14\" font-style=\"italic\">b</text>\n";
  for (const auto& b : m.ample) {
    double x = 200 + 30 * to_double(b.end[0]), y = 200 - 30 * to_double(b.end[1]);
    x = std::clamp(x, 10.0, 300.0);
    y = std::clamp(y + (b.end[1] < 0 ? 14.0 : -6.0), 14.0, 396.0);
    os << "  <text x=\"" << detail::fmt6(x) << "\" y=\"" << detail::fmt6(y)
       << "\" font-family=\"serif\" font-size=\"12\">" << detail::xml_escape(b.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline std::string render_figure(const CaseFile& c, const std::optional<CylinderSet>& cylinders = {}) {
  return render_svg(figure_model(c, cylinders));
}

} // namespace ampcyl

#endif // AMPCYL_FIGURE_HPP
