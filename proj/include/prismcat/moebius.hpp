#pragma once

#include <array>
#include <complex>
#include <string>

#include "prismcat/geometry.hpp"
#include "prismcat/labelings.hpp"

namespace prismcat {

using Complex = std::complex<double>;

inline constexpr double kDeterminantTolerance = 1e-10;
inline constexpr double kRelationTolerance = 1e-7;
inline constexpr double kTraceTolerance = 1e-8;

// [[a, b], [c, d]] acting on the boundary plane by w -> (a w + b) / (c w + d).
struct MoebiusMatrix {
  Complex a{1}, b{0}, c{0}, d{1};

  static MoebiusMatrix identity() { return {}; }

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  // Adjugate; the inverse for determinant one.
  MoebiusMatrix inverse() const { return {d, -b, -c, a}; }
  // Scaled to determinant one (principal square root).
  MoebiusMatrix normalized() const;
  Complex apply(Complex w) const { return (a * w + b) / (c * w + d); }

  MoebiusMatrix operator-() const { return {-a, -b, -c, -d}; }
  friend MoebiusMatrix operator*(const MoebiusMatrix& m, const MoebiusMatrix& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  friend bool operator==(const MoebiusMatrix&, const MoebiusMatrix&) = default;
};

double frobenius_distance(const MoebiusMatrix& m, const MoebiusMatrix& n);

// Distance in PSL2: both normalized to determinant one, then the smaller of
// |M - N| and |M + N|.
double psl2_distance(const MoebiusMatrix& m, const MoebiusMatrix& n);

inline bool psl2_equal(const MoebiusMatrix& m, const MoebiusMatrix& n, double tol = kRelationTolerance) {
  return psl2_distance(m, n) <= tol;
}

MoebiusMatrix pow(const MoebiusMatrix& m, int n);

enum class Turn { kCounterClockwise, kClockwise };

// Elliptic element fixing `center` and infinity, rotating by 2 theta about
// the vertical axis over `center`:
//   ccw: [[e^{-i theta}, center (e^{i theta} - e^{-i theta})], [0, e^{i theta}]]
//   cw:  the same with theta negated.
MoebiusMatrix rotation_matrix(Complex center, double theta, Turn turn);

struct GeneratorSet {
  MoebiusMatrix m1, m2, m3, m4;
  Labeling exponents;
  int a3_branch = 2;
  double theta1 = 0;
  double theta2 = 0;
  Complex center1;  // fixed point of m2: y1 i or z1
  Complex center2;  // fixed point of m3: y2 i or z2
  PlanarCircle top;
};

// Side pairings of the doubled prism. Throws std::domain_error if a3 is not
// 2 or 3.
GeneratorSet build_generators(const Labeling& l, const PlanarConfig& c);

inline constexpr std::array<const char*, kEdgeCount> kRelationWords{
    "M2^a1",        "M3^a2",        "M1^a3",        "(M2^-1 M1)^a4", "(M3^-1 M2)^a5",
    "(M3^-1 M1)^a6", "(M4^-1 M2)^a7", "(M4^-1 M3)^a8", "(M4^-1 M1)^a9",
};

// The element whose a_i-th power is relation i (0-based index).
MoebiusMatrix relation_base(const GeneratorSet& g, std::size_t i);

// Power tolerance for an exponent: the base tolerance, scaled by log2 of the
// exponent once it is large enough for repeated squaring to matter.
double relation_tolerance(int exponent);

struct RelationCheck {
  std::string word;
  int exponent = 0;
  double residual = 0;
  double tolerance = 0;
  bool passed = false;
};

struct RelationReport {
  std::array<RelationCheck, kEdgeCount> relations;
  bool passed = false;
  double max_residual = 0;
};

RelationReport verify_relations(const GeneratorSet& g);

struct TraceCheck {
  std::string word;
  double abs_trace = 0;
  double expected = 0;  // 2 cos(pi/a_i)
  double residual = 0;
  bool passed = false;
};

struct TraceReport {
  std::array<TraceCheck, kEdgeCount> traces;
  bool passed = false;
  double max_residual = 0;
};

TraceReport trace_check(const GeneratorSet& g);

}  // namespace prismcat
