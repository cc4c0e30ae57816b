#include "prismcat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace prismcat {

double cos_pi_over(int n) {
  switch (n) {
    case 2: return 0.0;
    case 3: return 0.5;
    case 4: return std::sqrt(0.5);
    default: return std::cos(kPi / n);
  }
}

double sin_pi_over(int n) {
  switch (n) {
    case 2: return 1.0;
    case 4: return std::sqrt(0.5);
    case 6: return 0.5;
    default: return std::sin(kPi / n);
  }
}

namespace {

double negate(double v) { return v == 0.0 ? 0.0 : -v; }

// cos(phi) with the right angle mapped to an exact zero.
double cos_angle(double phi) {
  if (phi == kPi / 2) return 0.0;
  if (phi == kPi / 3) return 0.5;
  return std::cos(phi);
}

}  // namespace

PlanarLine PlanarLine::vertical(double c, bool prism_right) {
  PlanarLine l;
  l.normal = {prism_right ? 1.0 : -1.0, 0.0};
  l.offset = prism_right ? c : negate(c);
  return l;
}

PlanarLine PlanarLine::sloped(double m, double b, bool prism_above) {
  const double norm = std::hypot(1.0, m);
  PlanarLine l;
  l.normal = {negate(m) / norm, 1.0 / norm};
  l.offset = b / norm;
  if (!prism_above) {
    l.normal = {negate(l.normal.x), -l.normal.y};
    l.offset = negate(l.offset);
  }
  return l;
}

double PlanarLine::slope() const {
  if (is_vertical()) throw std::logic_error("vertical line has no slope");
  return negate(normal.x / normal.y);
}

double PlanarLine::intercept() const {
  if (is_vertical()) throw std::logic_error("vertical line has no y-intercept");
  return offset / normal.y;
}

double PlanarLine::x_intercept() const {
  if (!is_vertical()) throw std::logic_error("line is not vertical");
  return offset / normal.x;
}

PlanarObject PlanarConfig::face(Face f) const {
  switch (f) {
    case Face::kRed: return red;
    case Face::kGreen: return green;
    case Face::kBlue: return blue;
    case Face::kBack: return back;
    case Face::kTop: return top;
  }
  throw std::logic_error("bad face");
}

Lines build_lines(const Labeling& l) {
  const int a3 = l.label(3);
  if (a3 != 2 && a3 != 3) {
    throw std::domain_error("a3 must be 2 or 3, got " + std::to_string(a3));
  }
  Lines out;
  out.red = PlanarLine::vertical(a3 == 2 ? 0.0 : -0.5);
  // Green: y = -cot(pi/a1) x + cos(pi/a4)/sin(pi/a1), prism below.
  out.green.normal = {negate(cos_pi_over(l.label(1))), -sin_pi_over(l.label(1))};
  out.green.offset = negate(cos_pi_over(l.label(4)));
  // Blue: y = cot(pi/a2) x - cos(pi/a6)/sin(pi/a2), prism above.
  out.blue.normal = {negate(cos_pi_over(l.label(2))), sin_pi_over(l.label(2))};
  out.blue.offset = negate(cos_pi_over(l.label(6)));
  return out;
}

double line_circle_offset(double r, double theta) {
  if (!(theta > 0.0 && theta <= kPi / 2)) {
    throw std::domain_error("angle must lie in (0, pi/2]");
  }
  return r * cos_angle(theta);
}

LinearConstraint LinearConstraint::with_unit_y() const {
  if (coef_y == 0.0) throw std::logic_error("constraint has no y0 term");
  return {coef_x / coef_y, 1.0, coef_r / coef_y, rhs / coef_y};
}

LinearConstraint tangency_constraint(const PlanarLine& line, double phi) {
  return {line.normal.x, line.normal.y, negate(cos_angle(phi)), line.offset};
}

CocircleConstraint cocircle_constraint(double phi) { return {cos_angle(phi)}; }

namespace {

std::optional<double> line_line(const PlanarLine& a, const PlanarLine& b) {
  const double dot = a.normal.x * b.normal.x + a.normal.y * b.normal.y;
  const double cross = a.normal.x * b.normal.y - a.normal.y * b.normal.x;
  if (cross == 0.0) {
    // Parallel: coincident lines meet everywhere at angle zero.
    const double gap = dot > 0 ? a.offset - b.offset : a.offset + b.offset;
    if (gap == 0.0) return 0.0;
    return std::nullopt;
  }
  return std::atan2(std::abs(cross), std::abs(dot));
}

std::optional<double> line_circle(const PlanarLine& l, const PlanarCircle& c) {
  const double delta = std::abs(l.signed_distance(c.center));
  const double r = c.radius;
  if (delta > r) return std::nullopt;
  return std::atan2(std::sqrt((r - delta) * (r + delta)), delta);
}

std::optional<double> circle_circle(const PlanarCircle& a, const PlanarCircle& b) {
  const double d = std::hypot(a.center.x - b.center.x, a.center.y - b.center.y);
  const double r1 = a.radius;
  const double r2 = b.radius;
  if (d > r1 + r2 || d < std::abs(r1 - r2)) return std::nullopt;
  // Triangle (r1, r2, d) through a common point; area by Kahan's Heron.
  std::array<double, 3> s{r1, r2, d};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double prod = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  const double area = 0.25 * std::sqrt(std::max(prod, 0.0));
  const double sin_phi = 2.0 * area / (r1 * r2);
  const double cos_phi = (d * d - (r1 * r1 + r2 * r2)) / (2.0 * (r1 * r2));
  return std::atan2(sin_phi, std::abs(cos_phi));
}

}  // namespace

std::optional<double> measure_angle(const PlanarObject& a, const PlanarObject& b) {
  if (const auto* la = std::get_if<PlanarLine>(&a)) {
    if (const auto* lb = std::get_if<PlanarLine>(&b)) return line_line(*la, *lb);
    return line_circle(*la, std::get<PlanarCircle>(b));
  }
  const auto& ca = std::get<PlanarCircle>(a);
  if (const auto* lb = std::get_if<PlanarLine>(&b)) return line_circle(*lb, ca);
  return circle_circle(ca, std::get<PlanarCircle>(b));
}

std::vector<int> ConfigReport::failing_edges(double tol) const {
  std::vector<int> out;
  for (const EdgeCheck& e : edges) {
    if (!(e.residual <= tol)) out.push_back(e.edge);
  }
  return out;
}

ConfigReport verify_config(const Labeling& l, const PlanarConfig& c, double tol) {
  ConfigReport rep;
  rep.passed = true;
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    EdgeCheck& e = rep.edges[i];
    e.edge = static_cast<int>(i) + 1;
    e.expected = kPi / l[i];
    e.measured = measure_angle(c.face(kEdgeFaces[i][0]), c.face(kEdgeFaces[i][1]));
    e.residual = e.measured ? std::abs(*e.measured - e.expected) : std::numeric_limits<double>::infinity();
    rep.max_residual = std::max(rep.max_residual, e.residual);
    if (!(e.residual <= tol)) rep.passed = false;
  }
  return rep;
}

TopCircleSystem top_circle_system(const Labeling& l, const Lines& lines) {
  TopCircleSystem sys;
  sys.green = {lines.green.normal.x, lines.green.normal.y, negate(cos_pi_over(l.label(7))), lines.green.offset};
  sys.blue = {lines.blue.normal.x, lines.blue.normal.y, negate(cos_pi_over(l.label(8))), lines.blue.offset};
  sys.back = {cos_pi_over(l.label(9))};
  return sys;
}

namespace {

// Real roots of a r^2 + b r + c = 0, cancellation-free.
std::vector<double> quadratic_roots(double a, double b, double c) {
  const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (std::abs(a) <= 1e-14 * scale) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    if (disc < -1e-14 * b * b) return {};
    disc = 0.0;
  }
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) return {0.0};
  std::vector<double> roots{q / a, c / q};
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

RealizeResult realize_detailed(const Labeling& l) {
  if (const Admissibility adm = is_admissible(l); !adm) {
    throw std::invalid_argument("labeling " + to_string(l) + " is not admissible: " + adm.reason());
  }
  const Lines lines = build_lines(l);
  const TopCircleSystem sys = top_circle_system(l, lines);

  // The two tangency rows give the center as C0 + r C1.
  const double det = sys.green.coef_x * sys.blue.coef_y - sys.green.coef_y * sys.blue.coef_x;
  if (std::abs(det) < 1e-14) {
    throw RealizationError("green and blue lines are parallel for " + to_string(l));
  }
  auto solve = [&](double g, double b) -> Vec2 {
    return {(g * sys.blue.coef_y - sys.green.coef_y * b) / det, (sys.green.coef_x * b - g * sys.blue.coef_x) / det};
  };
  const Vec2 c0 = solve(sys.green.rhs, sys.blue.rhs);
  const Vec2 c1 = solve(-sys.green.coef_r, -sys.blue.coef_r);

  const double qa = c1.x * c1.x + c1.y * c1.y - 1.0;
  const double qb = 2.0 * (c0.x * c1.x + c0.y * c1.y - sys.back.cos_phi);
  const double qc = c0.x * c0.x + c0.y * c0.y - 1.0;

  RealizeResult res;
  std::vector<PlanarConfig> valid;
  for (double r : quadratic_roots(qa, qb, qc)) {
    if (!(r > 0.0)) continue;
    res.positive_roots.push_back(r);
    PlanarConfig cfg;
    cfg.red = lines.red;
    cfg.green = lines.green;
    cfg.blue = lines.blue;
    cfg.top = {{c0.x + r * c1.x, c0.y + r * c1.y}, r};
    cfg.a3_branch = l.label(3);
    if (verify_config(l, cfg).passed) valid.push_back(cfg);
  }
  if (valid.empty()) {
    throw RealizationError("no valid top circle for " + to_string(l));
  }
  res.config = valid.front();
  if (valid.size() > 1) {
    std::ostringstream os;
    os << "two valid radii for " << to_string(l) << "; keeping r = " << valid.front().top.radius;
    res.warning = os.str();
  }
  return res;
}

PlanarConfig realize(const Labeling& l) { return realize_detailed(l).config; }

}  // namespace prismcat
