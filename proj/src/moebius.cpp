#include "prismcat/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace prismcat {

MoebiusMatrix MoebiusMatrix::normalized() const {
  const Complex s = std::sqrt(det());
  return {a / s, b / s, c / s, d / s};
}

double frobenius_distance(const MoebiusMatrix& m, const MoebiusMatrix& n) {
  return std::sqrt(std::norm(m.a - n.a) + std::norm(m.b - n.b) + std::norm(m.c - n.c) + std::norm(m.d - n.d));
}

double psl2_distance(const MoebiusMatrix& m, const MoebiusMatrix& n) {
  const MoebiusMatrix mn = m.normalized();
  const MoebiusMatrix nn = n.normalized();
  return std::min(frobenius_distance(mn, nn), frobenius_distance(mn, -nn));
}

MoebiusMatrix pow(const MoebiusMatrix& m, int n) {
  if (n < 0) throw std::domain_error("negative matrix power");
  MoebiusMatrix result = MoebiusMatrix::identity();
  MoebiusMatrix base = m;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

MoebiusMatrix rotation_matrix(Complex center, double theta, Turn turn) {
  const double t = turn == Turn::kCounterClockwise ? theta : -theta;
  const Complex e_plus = std::polar(1.0, t);
  const Complex e_minus = std::conj(e_plus);
  return {e_minus, center * (e_plus - e_minus), 0.0, e_plus};
}

namespace {

Complex meet_red(const PlanarLine& red, const PlanarLine& other) {
  const double x = red.x_intercept();
  return {x, (other.offset - other.normal.x * x) / other.normal.y};
}

}  // namespace

GeneratorSet build_generators(const Labeling& l, const PlanarConfig& c) {
  const int a3 = l.label(3);
  if (a3 != 2 && a3 != 3) {
    throw std::domain_error("a3 must be 2 or 3, got " + std::to_string(a3));
  }
  if (c.a3_branch != a3) {
    throw std::domain_error("configuration branch does not match a3");
  }
  GeneratorSet g;
  g.exponents = l;
  g.a3_branch = a3;
  g.theta1 = kPi / l.label(1);
  g.theta2 = kPi / l.label(2);
  g.center1 = meet_red(c.red, c.green);
  g.center2 = meet_red(c.red, c.blue);
  g.top = c.top;

  const double x = c.top.center.x;
  const double y = c.top.center.y;
  const double r = c.top.radius;
  const Complex w{x, y};

  g.m2 = rotation_matrix(g.center1, g.theta1, Turn::kCounterClockwise);
  g.m3 = rotation_matrix(g.center2, g.theta2, Turn::kClockwise);
  if (a3 == 2) {
    // Pairs the two halves of the unit sphere across x = 0.
    g.m1 = {0.0, -1.0, 1.0, 0.0};
    // Top circle to its mirror image across x = 0.
    g.m4 = {-std::conj(w) / r, std::norm(w) / r - r, 1.0 / r, -w / r};
  } else {
    // Unit sphere to the unit sphere centered at -1.
    g.m1 = {-1.0, -1.0, 1.0, 0.0};
    // Top circle to its mirror image across x = -1/2.
    const Complex mirrored = -std::conj(w) - 1.0;
    g.m4 = {mirrored / r, mirrored * (-w) / r - r, 1.0 / r, -w / r};
  }
  return g;
}

MoebiusMatrix relation_base(const GeneratorSet& g, std::size_t i) {
  switch (i) {
    case 0: return g.m2;
    case 1: return g.m3;
    case 2: return g.m1;
    case 3: return g.m2.inverse() * g.m1;
    case 4: return g.m3.inverse() * g.m2;
    case 5: return g.m3.inverse() * g.m1;
    case 6: return g.m4.inverse() * g.m2;
    case 7: return g.m4.inverse() * g.m3;
    case 8: return g.m4.inverse() * g.m1;
  }
  throw std::out_of_range("relation index");
}

double relation_tolerance(int exponent) {
  return kRelationTolerance * std::max(1.0, std::log2(static_cast<double>(exponent)));
}

RelationReport verify_relations(const GeneratorSet& g) {
  RelationReport rep;
  rep.passed = true;
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    RelationCheck& rc = rep.relations[i];
    rc.word = kRelationWords[i];
    rc.exponent = g.exponents[i];
    rc.residual = psl2_distance(pow(relation_base(g, i).normalized(), rc.exponent), MoebiusMatrix::identity());
    rc.tolerance = relation_tolerance(rc.exponent);
    rc.passed = rc.residual <= rc.tolerance;
    rep.passed = rep.passed && rc.passed;
    rep.max_residual = std::max(rep.max_residual, rc.residual);
  }
  return rep;
}

TraceReport trace_check(const GeneratorSet& g) {
  TraceReport rep;
  rep.passed = true;
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    TraceCheck& tc = rep.traces[i];
    tc.word = kRelationWords[i];
    tc.abs_trace = std::abs(relation_base(g, i).normalized().trace());
    tc.expected = 2.0 * cos_pi_over(g.exponents[i]);
    tc.residual = std::abs(tc.abs_trace - tc.expected);
    tc.passed = tc.residual <= kTraceTolerance;
    rep.passed = rep.passed && tc.passed;
    rep.max_residual = std::max(rep.max_residual, tc.residual);
  }
  return rep;
}

}  // namespace prismcat
