#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "prismcat/labelings.hpp"

namespace prismcat {

inline constexpr double kPi = 3.14159265358979323846;

inline constexpr double kConstructionTolerance = 1e-10;
inline constexpr double kAngleTolerance = 1e-9;

// cos(pi/n) and sin(pi/n), exact for the values that are exact in binary.
double cos_pi_over(int n);
double sin_pi_over(int n);

struct Vec2 {
  double x = 0;
  double y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

// A line n.p = d with unit normal n pointing into the prism, so the prism
// lies in the closed half-plane n.p >= d. Vertical lines have n = (+-1, 0)
// exactly.
struct PlanarLine {
  Vec2 normal{1, 0};
  double offset = 0;

  // x = c, prism on the right (x >= c) or left.
  static PlanarLine vertical(double c, bool prism_right = true);
  // y = m x + b, prism above (y >= m x + b) or below.
  static PlanarLine sloped(double m, double b, bool prism_above = true);

  bool is_vertical() const { return normal.y == 0.0; }
  double slope() const;      // m of y = m x + b; throws for vertical lines
  double intercept() const;  // b of y = m x + b; throws for vertical lines
  double x_intercept() const;  // c of x = c; throws for non-vertical lines

  // Positive on the prism side.
  double signed_distance(Vec2 p) const { return normal.x * p.x + normal.y * p.y - offset; }

  friend bool operator==(const PlanarLine&, const PlanarLine&) = default;
};

struct PlanarCircle {
  Vec2 center;
  double radius = 1;

  static PlanarCircle unit() { return {{0, 0}, 1}; }

  friend bool operator==(const PlanarCircle&, const PlanarCircle&) = default;
};

using PlanarObject = std::variant<PlanarLine, PlanarCircle>;

struct PlanarConfig {
  PlanarLine red;
  PlanarLine green;
  PlanarLine blue;
  PlanarCircle back = PlanarCircle::unit();
  PlanarCircle top;
  int a3_branch = 2;

  PlanarObject face(Face f) const;

  friend bool operator==(const PlanarConfig&, const PlanarConfig&) = default;
};

class RealizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Lines {
  PlanarLine red;
  PlanarLine green;
  PlanarLine blue;
};

// Red is x = 0 (a3 = 2) or x = -1/2 (a3 = 3); green and blue are placed
// so they meet the unit circle at pi/a4 and pi/a6 and the red line at pi/a1
// and pi/a2. Throws std::domain_error if a3 is not 2 or 3.
Lines build_lines(const Labeling& l);

// Closest approach to the center of a line meeting a circle of radius r at
// angle theta. Throws std::domain_error unless 0 < theta <= pi/2.
double line_circle_offset(double r, double theta);

// coef_x * x0 + coef_y * y0 + coef_r * r = rhs.
struct LinearConstraint {
  double coef_x = 0;
  double coef_y = 0;
  double coef_r = 0;
  double rhs = 0;

  double residual(double x0, double y0, double r) const {
    return coef_x * x0 + coef_y * y0 + coef_r * r - rhs;
  }
  // Same constraint scaled so coef_y == 1 (sloped lines only), i.e. in the
  // form y0 - m x0 - r cos(phi) sqrt(1 + m^2) = b.
  LinearConstraint with_unit_y() const;
};

// A circle (x0, y0, r) whose center lies on the prism side of `line` and
// which meets it at angle phi: its center sits r cos(phi) inside the line.
// For a vertical line x = c with the prism on the right this reads
// x0 - r cos(phi) = c.
LinearConstraint tangency_constraint(const PlanarLine& line, double phi);

// x0^2 + y0^2 = 1 + r^2 + 2 cos(phi) r: a circle meeting the unit circle at
// angle phi, outside of it.
struct CocircleConstraint {
  double cos_phi = 0;

  double residual(double x0, double y0, double r) const {
    return x0 * x0 + y0 * y0 - 1.0 - r * r - 2.0 * cos_phi * r;
  }
};

CocircleConstraint cocircle_constraint(double phi);

// Angle in [0, pi/2] between two curves at a common point, or nullopt if they
// do not meet. Symmetric in its arguments.
std::optional<double> measure_angle(const PlanarObject& a, const PlanarObject& b);

struct EdgeCheck {
  int edge = 0;  // 1-based
  double expected = 0;
  std::optional<double> measured;
  double residual = 0;  // infinity when the faces are disjoint
};

struct ConfigReport {
  std::array<EdgeCheck, kEdgeCount> edges{};
  bool passed = false;
  double max_residual = 0;

  // Edges whose residual exceeds the tolerance, 1-based.
  std::vector<int> failing_edges(double tol = kAngleTolerance) const;
};

ConfigReport verify_config(const Labeling& l, const PlanarConfig& c, double tol = kAngleTolerance);

struct TopCircleSystem {
  LinearConstraint green;  // angle pi/a7
  LinearConstraint blue;   // angle pi/a8
  CocircleConstraint back; // angle pi/a9
};

TopCircleSystem top_circle_system(const Labeling& l, const Lines& lines);

struct RealizeResult {
  PlanarConfig config;
  std::vector<double> positive_roots;  // candidate radii before filtering
  std::optional<std::string> warning;
};

// Lines from build_lines, then the top circle from the two tangency
// constraints and the unit-circle constraint, eliminated to a quadratic in r.
// Among positive roots the one whose configuration verifies is kept (the
// smaller, with a warning, if both do). Throws std::invalid_argument for an
// inadmissible labeling and RealizationError if no root is valid.
RealizeResult realize_detailed(const Labeling& l);
PlanarConfig realize(const Labeling& l);

}  // namespace prismcat
