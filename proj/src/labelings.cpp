#include "prismcat/labelings.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace prismcat {

std::string to_string(const Labeling& l) {
  std::ostringstream os;
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    if (i) os << ' ';
    os << l[i];
  }
  return os.str();
}

std::string_view to_string(TriangleClass c) {
  switch (c) {
    case TriangleClass::kSpherical: return "spherical";
    case TriangleClass::kEuclidean: return "Euclidean";
    case TriangleClass::kHyperbolic: return "hyperbolic";
  }
  return "?";
}

TriangleClass classify_triangle(int p, int q, int r) {
  if (p < 2 || q < 2 || r < 2) {
    throw std::domain_error("triangle labels must be >= 2");
  }
  // 1/p + 1/q + 1/r vs 1, multiplied through by pqr.
  const std::int64_t P = p, Q = q, R = r;
  const std::int64_t lhs = Q * R + P * R + P * Q;
  const std::int64_t rhs = P * Q * R;
  if (lhs == rhs) return TriangleClass::kEuclidean;
  return lhs > rhs ? TriangleClass::kSpherical : TriangleClass::kHyperbolic;
}

std::string_view to_string(CuspType c) {
  switch (c) {
    case CuspType::k236: return "236";
    case CuspType::k244: return "244";
    case CuspType::k333: return "333";
  }
  return "?";
}

std::string_view bracket_name(CuspType c) {
  switch (c) {
    case CuspType::k236: return "[2,3,6]";
    case CuspType::k244: return "[2,4,4]";
    case CuspType::k333: return "[3,3,3]";
  }
  return "?";
}

std::optional<CuspType> parse_cusp(std::string_view s) {
  if (s == "236" || s == "[2,3,6]") return CuspType::k236;
  if (s == "244" || s == "[2,4,4]") return CuspType::k244;
  if (s == "333" || s == "[3,3,3]") return CuspType::k333;
  return std::nullopt;
}

std::optional<CuspType> cusp_of(const Labeling& l) {
  std::array<int, 3> t{l.label(1), l.label(2), l.label(5)};
  std::sort(t.begin(), t.end());
  if (t == std::array<int, 3>{2, 3, 6}) return CuspType::k236;
  if (t == std::array<int, 3>{2, 4, 4}) return CuspType::k244;
  if (t == std::array<int, 3>{3, 3, 3}) return CuspType::k333;
  return std::nullopt;
}

std::string_view to_string(Face f) {
  switch (f) {
    case Face::kRed: return "red";
    case Face::kGreen: return "green";
    case Face::kBlue: return "blue";
    case Face::kBack: return "back";
    case Face::kTop: return "top";
  }
  return "?";
}

std::array<TripleCheck, kVertexCount> vertex_triples(const Labeling& l) {
  std::array<TripleCheck, kVertexCount> out{};
  for (std::size_t v = 0; v < kVertexCount; ++v) {
    const auto& vt = kVertexTriples[v];
    TripleCheck& tc = out[v];
    tc.edges = vt.edges;
    for (std::size_t k = 0; k < 3; ++k) tc.labels[k] = l.label(vt.edges[k]);
    tc.required = vt.required;
    tc.actual = classify_triangle(tc.labels[0], tc.labels[1], tc.labels[2]);
  }
  return out;
}

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::kNone: return "none";
    case Condition::kLabelBelowTwo: return "label below 2";
    case Condition::kIdealNotEuclidean: return "ideal triple not Euclidean";
    case Condition::kVertexNotSpherical: return "finite vertex triple not spherical";
    case Condition::kCircuitNotHyperbolic: return "prismatic 3-circuit not hyperbolic";
  }
  return "?";
}

std::string Admissibility::reason() const {
  if (admissible) return "admissible";
  std::ostringstream os;
  os << to_string(failed);
  if (failed != Condition::kLabelBelowTwo) {
    os << " (a" << edges[0] << ", a" << edges[1] << ", a" << edges[2] << ")";
  }
  return os.str();
}

Admissibility is_admissible(const Labeling& l) {
  Admissibility res;
  for (int v : l.labels) {
    if (v < 2) {
      res.failed = Condition::kLabelBelowTwo;
      return res;
    }
  }
  // Stops at the first failing vertex; this is on the hot path of grid scans.
  for (const VertexTriple& vt : kVertexTriples) {
    const auto& e = vt.edges;
    if (classify_triangle(l.label(e[0]), l.label(e[1]), l.label(e[2])) != vt.required) {
      res.failed = vt.required == TriangleClass::kEuclidean ? Condition::kIdealNotEuclidean
                                                            : Condition::kVertexNotSpherical;
      res.edges = e;
      return res;
    }
  }
  const auto& c = kPrismaticCircuit;
  if (classify_triangle(l.label(c[0]), l.label(c[1]), l.label(c[2])) != TriangleClass::kHyperbolic) {
    res.failed = Condition::kCircuitNotHyperbolic;
    res.edges = c;
    return res;
  }
  res.admissible = true;
  return res;
}

Labeling symmetry_mate(const Labeling& l) {
  Labeling m;
  for (int e = 1; e <= static_cast<int>(kEdgeCount); ++e) {
    m[static_cast<std::size_t>(kMateEdge[static_cast<std::size_t>(e - 1)] - 1)] = l.label(e);
  }
  return m;
}

Labeling canonicalize(const Labeling& l) { return std::min(l, symmetry_mate(l)); }

Labeling CatalogItem::instantiate(int n) const {
  if (!family) return labeling;
  if (n < free_min) {
    throw std::out_of_range("family instance below free_min");
  }
  Labeling out = labeling;
  out[static_cast<std::size_t>(*free_slot - 1)] = n;
  return out;
}

bool CatalogItem::contains(const Labeling& l) const {
  for (const Labeling& cand : {l, symmetry_mate(l)}) {
    if (!family) {
      if (cand == labeling) return true;
      continue;
    }
    const std::size_t s = static_cast<std::size_t>(*free_slot - 1);
    bool match = cand[s] >= free_min;
    for (std::size_t i = 0; i < kEdgeCount && match; ++i) {
      if (i != s && cand[i] != labeling[i]) match = false;
    }
    if (match) return true;
  }
  return false;
}

namespace {

// Slots are assigned ideal triple first so that the Euclidean filter prunes
// everything else early.
constexpr std::array<int, kEdgeCount> kSearchOrder{1, 2, 5, 3, 4, 6, 7, 8, 9};

struct PendingCheck {
  std::array<int, 3> edges;
  TriangleClass required;
};

// checks[k]: the triples that become fully assigned when the k-th slot of
// kSearchOrder is set.
std::array<std::vector<PendingCheck>, kEdgeCount> schedule_checks() {
  std::array<int, kEdgeCount + 1> position{};
  for (std::size_t k = 0; k < kEdgeCount; ++k) position[static_cast<std::size_t>(kSearchOrder[k])] = static_cast<int>(k);

  std::vector<PendingCheck> all;
  for (const auto& vt : kVertexTriples) all.push_back({vt.edges, vt.required});
  all.push_back({kPrismaticCircuit, TriangleClass::kHyperbolic});

  std::array<std::vector<PendingCheck>, kEdgeCount> checks;
  for (const PendingCheck& pc : all) {
    int last = 0;
    for (int e : pc.edges) last = std::max(last, position[static_cast<std::size_t>(e)]);
    checks[static_cast<std::size_t>(last)].push_back(pc);
  }
  return checks;
}

void search(std::size_t depth, int bound, Labeling& cur,
            const std::array<std::vector<PendingCheck>, kEdgeCount>& checks,
            std::set<Labeling>& found) {
  if (depth == kEdgeCount) {
    found.insert(canonicalize(cur));
    return;
  }
  const std::size_t slot = static_cast<std::size_t>(kSearchOrder[depth] - 1);
  for (int v = 2; v <= bound; ++v) {
    cur[slot] = v;
    bool ok = true;
    for (const PendingCheck& pc : checks[depth]) {
      if (classify_triangle(cur.label(pc.edges[0]), cur.label(pc.edges[1]), cur.label(pc.edges[2])) !=
          pc.required) {
        ok = false;
        break;
      }
    }
    if (ok) search(depth + 1, bound, cur, checks, found);
  }
  cur[slot] = 0;
}

Labeling with_slot(Labeling l, std::size_t slot, int v) {
  l[slot] = v;
  return l;
}

}  // namespace

std::vector<Labeling> enumerate_admissible(int bound) {
  static const auto checks = schedule_checks();
  std::set<Labeling> found;
  Labeling cur;
  search(0, bound, cur, checks, found);
  return {found.begin(), found.end()};
}

std::vector<CatalogItem> enumerate_catalog(int bound) {
  const std::vector<Labeling> admissible = enumerate_admissible(bound);

  // A slot is free when the labeling stays admissible at the probe value and
  // the two values after it. Keyed by (pattern with free slot zeroed, slot).
  std::map<std::pair<Labeling, int>, int> families;
  for (const Labeling& l : admissible) {
    for (std::size_t s = 0; s < kEdgeCount; ++s) {
      bool free = true;
      for (int v = kFamilyProbe; v <= kFamilyProbe + 2 && free; ++v) {
        free = is_admissible(with_slot(l, s, v)).admissible;
      }
      if (!free) continue;

      Labeling probe = with_slot(l, s, kFamilyProbe);
      int slot = static_cast<int>(s) + 1;
      if (canonicalize(probe) != probe) {
        probe = symmetry_mate(probe);
        slot = kMateEdge[s];
      }
      const std::size_t fs = static_cast<std::size_t>(slot - 1);
      int lo = kFamilyProbe;
      while (lo > 2 && is_admissible(with_slot(probe, fs, lo - 1)).admissible) --lo;
      // Values below the floor are listed individually.
      families.emplace(std::make_pair(with_slot(probe, fs, 0), slot), std::max(lo, kFamilyFloor));
    }
  }

  std::vector<CatalogItem> items;
  for (const auto& [key, lo] : families) {
    CatalogItem it;
    it.family = true;
    it.free_slot = key.second;
    it.free_min = lo;
    it.labeling = with_slot(key.first, static_cast<std::size_t>(key.second - 1), lo);
    it.cusp = *cusp_of(it.labeling);
    items.push_back(it);
  }
  const std::size_t family_count = items.size();
  for (const Labeling& l : admissible) {
    bool covered = false;
    for (std::size_t f = 0; f < family_count && !covered; ++f) covered = items[f].contains(l);
    if (covered) continue;
    CatalogItem it;
    it.labeling = l;
    it.cusp = *cusp_of(l);
    items.push_back(it);
  }
  std::sort(items.begin(), items.end(), [](const CatalogItem& a, const CatalogItem& b) {
    if (a.cusp != b.cusp) return a.cusp < b.cusp;
    return a.labeling < b.labeling;
  });
  return items;
}

CatalogCounts count(const std::vector<CatalogItem>& items, std::optional<CuspType> cusp) {
  CatalogCounts c;
  for (const CatalogItem& it : items) {
    if (cusp && it.cusp != *cusp) continue;
    (it.family ? c.families : c.specifics) += 1;
  }
  return c;
}

CatalogCounts expected_counts(std::optional<CuspType> cusp) {
  if (!cusp) return {12, 78};
  switch (*cusp) {
    case CuspType::k236: return {8, 32};
    case CuspType::k244: return {4, 24};
    case CuspType::k333: return {0, 22};
  }
  return {};
}

}  // namespace prismcat
