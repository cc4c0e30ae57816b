#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "prismcat/catalog.hpp"

namespace prismcat {

namespace {

constexpr double kView = 1.6;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

// Clip the line to the viewport square (Liang-Barsky on a parametrized line).
std::optional<std::array<Vec2, 2>> clip(const PlanarLine& l) {
  const Vec2 p{l.normal.x * l.offset, l.normal.y * l.offset};
  const Vec2 dir{-l.normal.y, l.normal.x};
  double t0 = -1e9, t1 = 1e9;
  auto edge = [&](double pd, double q) {
    // Keep t with pd * t <= q.
    if (pd == 0.0) return q >= 0.0;
    const double t = q / pd;
    if (pd > 0) t1 = std::min(t1, t);
    else t0 = std::max(t0, t);
    return true;
  };
  if (!edge(dir.x, kView - p.x) || !edge(-dir.x, kView + p.x) || !edge(dir.y, kView - p.y) ||
      !edge(-dir.y, kView + p.y) || t0 > t1) {
    return std::nullopt;
  }
  return std::array<Vec2, 2>{Vec2{p.x + t0 * dir.x, p.y + t0 * dir.y}, Vec2{p.x + t1 * dir.x, p.y + t1 * dir.y}};
}

void line_element(std::ostream& os, const PlanarLine& l, const char* color, const char* id) {
  const auto seg = clip(l);
  if (!seg) return;
  os << "    <line id=\"" << id << "\" x1=\"" << fmt((*seg)[0].x) << "\" y1=\"" << fmt((*seg)[0].y) << "\" x2=\""
     << fmt((*seg)[1].x) << "\" y2=\"" << fmt((*seg)[1].y) << "\" stroke=\"" << color << "\"/>\n";
}

void circle_element(std::ostream& os, const PlanarCircle& c, const char* id) {
  os << "    <circle id=\"" << id << "\" cx=\"" << fmt(c.center.x) << "\" cy=\"" << fmt(c.center.y) << "\" r=\""
     << fmt(c.radius) << "\" stroke=\"black\"/>\n";
}

}  // namespace

std::string render_svg(const PlanarConfig& c, const std::string& title) {
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"640\" height=\"640\" viewBox=\"" << fmt(-kView)
     << ' ' << fmt(-kView) << ' ' << fmt(2 * kView) << ' ' << fmt(2 * kView) << "\">\n";
  if (!title.empty()) os << "  <title>" << title << "</title>\n";
  os << "  <rect x=\"" << fmt(-kView) << "\" y=\"" << fmt(-kView) << "\" width=\"" << fmt(2 * kView) << "\" height=\""
     << fmt(2 * kView) << "\" fill=\"white\"/>\n";
  // Flip so that y points up, as in the plane.
  os << "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-width=\"0.008\">\n";
  line_element(os, c.red, "red", "red");
  line_element(os, c.green, "green", "green");
  line_element(os, c.blue, "blue", "blue");
  circle_element(os, c.back, "back");
  circle_element(os, c.top, "top");
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace prismcat
