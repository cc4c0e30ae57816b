#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prismcat {

inline constexpr std::size_t kEdgeCount = 9;
inline constexpr std::size_t kVertexCount = 6;

// Dihedral-angle labels a1..a9 of a triangular prism; label n means angle pi/n.
// Storage is 0-based (labels[0] is a1); label(k) is the 1-based accessor.
struct Labeling {
  std::array<int, kEdgeCount> labels{};

  constexpr int& operator[](std::size_t i) { return labels[i]; }
  constexpr int operator[](std::size_t i) const { return labels[i]; }
  constexpr int label(int edge) const { return labels[static_cast<std::size_t>(edge - 1)]; }

  friend constexpr auto operator<=>(const Labeling&, const Labeling&) = default;
  friend constexpr bool operator==(const Labeling&, const Labeling&) = default;
};

std::string to_string(const Labeling& l);

enum class TriangleClass { kSpherical, kEuclidean, kHyperbolic };

std::string_view to_string(TriangleClass c);

// Sign of 1/p + 1/q + 1/r - 1, decided in integers. Throws std::domain_error
// if any argument is below 2.
TriangleClass classify_triangle(int p, int q, int r);

enum class CuspType { k236, k244, k333 };

std::string_view to_string(CuspType c);       // "236"
std::string_view bracket_name(CuspType c);    // "[2,3,6]"
std::optional<CuspType> parse_cusp(std::string_view s);

// Cusp type of the ideal-vertex multiset {a1, a2, a5}, or nullopt if that
// triple is not Euclidean.
std::optional<CuspType> cusp_of(const Labeling& l);

// The five faces of the prism as seen in the boundary plane. Red, green and
// blue are the three vertical planes through the ideal vertex (lines); back
// is the unit circle; top is the second circle.
enum class Face { kRed, kGreen, kBlue, kBack, kTop };

std::string_view to_string(Face f);

// Combinatorics of the labeled prism. Edge k (1-based) is the intersection of
// kEdgeFaces[k-1]; each vertex is the meeting point of three edges.
//
//   bottom triangle (red):  a1 red/green, a2 red/blue, a3 red/back
//   vertical edges:         a4 green/back, a5 green/blue, a6 blue/back
//   top triangle:           a7 green/top, a8 blue/top, a9 back/top
//
// The ideal vertex is red/green/blue = {a1, a2, a5}. Green and blue are the
// two quadrilaterals exchanged by the prism's reflection symmetry.
inline constexpr std::array<std::array<Face, 2>, kEdgeCount> kEdgeFaces{{
    {Face::kRed, Face::kGreen},
    {Face::kRed, Face::kBlue},
    {Face::kRed, Face::kBack},
    {Face::kGreen, Face::kBack},
    {Face::kGreen, Face::kBlue},
    {Face::kBlue, Face::kBack},
    {Face::kGreen, Face::kTop},
    {Face::kBlue, Face::kTop},
    {Face::kBack, Face::kTop},
}};

struct VertexTriple {
  std::array<int, 3> edges;  // 1-based edge numbers
  TriangleClass required;
};

inline constexpr std::array<VertexTriple, kVertexCount> kVertexTriples{{
    {{1, 2, 5}, TriangleClass::kEuclidean},  // ideal: red/green/blue
    {{1, 3, 4}, TriangleClass::kSpherical},  // red/green/back
    {{2, 3, 6}, TriangleClass::kSpherical},  // red/blue/back
    {{5, 7, 8}, TriangleClass::kSpherical},  // green/blue/top
    {{4, 7, 9}, TriangleClass::kSpherical},  // green/back/top
    {{6, 8, 9}, TriangleClass::kSpherical},  // blue/back/top
}};

// The prismatic 3-circuit: the three vertical edges.
inline constexpr std::array<int, 3> kPrismaticCircuit{4, 5, 6};

// Edge permutation induced by the reflection symmetry (a1<->a2, a4<->a6,
// a7<->a8), 1-based.
inline constexpr std::array<int, kEdgeCount> kMateEdge{2, 1, 3, 6, 5, 4, 8, 7, 9};

struct TripleCheck {
  std::array<int, 3> edges;
  std::array<int, 3> labels;
  TriangleClass required;
  TriangleClass actual;
};

std::array<TripleCheck, kVertexCount> vertex_triples(const Labeling& l);

enum class Condition {
  kNone,
  kLabelBelowTwo,      // angles must be pi/n with n >= 2
  kIdealNotEuclidean,  // ideal vertex
  kVertexNotSpherical, // finite vertex
  kCircuitNotHyperbolic,
};

std::string_view to_string(Condition c);

struct Admissibility {
  bool admissible = false;
  Condition failed = Condition::kNone;
  std::array<int, 3> edges{};  // offending triple, when there is one

  explicit operator bool() const { return admissible; }
  std::string reason() const;
};

// Ideal triple Euclidean, finite vertices spherical, vertical edges
// hyperbolic. Quadrilateral and 4-circuit conditions are implied for this
// combinatorial type and are not checked.
Admissibility is_admissible(const Labeling& l);

Labeling symmetry_mate(const Labeling& l);

// Lexicographically smaller of l and its mate.
Labeling canonicalize(const Labeling& l);

struct CatalogItem {
  Labeling labeling;  // free slot, if any, holds free_min
  bool family = false;
  std::optional<int> free_slot;  // 1-based edge number
  int free_min = 0;
  CuspType cusp = CuspType::k236;

  // Member of the family with the free slot set to n; the labeling itself
  // for a specific item. Throws std::out_of_range if n < free_min.
  Labeling instantiate(int n) const;

  // True if l (or its mate) is this item or a member of this family.
  bool contains(const Labeling& l) const;
};

// Probe value and floor used to fold one-parameter families out of the
// finite search.
inline constexpr int kFamilyProbe = 20;
inline constexpr int kFamilyFloor = 6;
inline constexpr int kDefaultSearchBound = 12;

// Every admissible canonical labeling with all labels <= bound, sorted.
std::vector<Labeling> enumerate_admissible(int bound);

// The full catalog, sorted by cusp then labeling: families first within a
// cusp in the same lexicographic order as specifics.
std::vector<CatalogItem> enumerate_catalog(int bound = kDefaultSearchBound);

struct CatalogCounts {
  int families = 0;
  int specifics = 0;
};

CatalogCounts count(const std::vector<CatalogItem>& items, std::optional<CuspType> cusp = std::nullopt);

// Counts the catalog is known to contain.
CatalogCounts expected_counts(std::optional<CuspType> cusp = std::nullopt);

}  // namespace prismcat
