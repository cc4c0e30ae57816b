#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "prismcat/geometry.hpp"
#include "prismcat/labelings.hpp"
#include "prismcat/moebius.hpp"

namespace prismcat {

inline constexpr const char* kCatalogFormat = "prism-catalog/1";
inline constexpr const char* kToolVersion = "prismcat 1.0.0";

enum class EntryKind { kSpecific, kFamily, kFamilyInstance };

std::string_view to_string(EntryKind k);

struct Provenance {
  std::string tool_version = kToolVersion;
  double construction_tolerance = kConstructionTolerance;
  double angle_tolerance = kAngleTolerance;
  double relation_tolerance = kRelationTolerance;
  double trace_tolerance = kTraceTolerance;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct VerificationSummary {
  std::array<double, kEdgeCount> angle_residuals{};
  std::array<double, kEdgeCount> relation_residuals{};
  std::array<double, kEdgeCount> trace_residuals{};

  friend bool operator==(const VerificationSummary&, const VerificationSummary&) = default;
};

// One realized labeling. A family entry carries its free slot and bound and
// is realized at free_min; a family instance also carries the family it
// belongs to.
struct CatalogEntry {
  EntryKind kind = EntryKind::kSpecific;
  Labeling labeling;
  std::optional<int> free_slot;
  int free_min = 0;
  CuspType cusp = CuspType::k236;
  PlanarConfig config;
  std::array<MoebiusMatrix, 4> generators{};
  VerificationSummary verification;
  Provenance provenance;

  friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

struct EntryChecks {
  ConfigReport angles;
  RelationReport relations;
  TraceReport traces;
  double max_det_error = 0;

  bool passed() const {
    return angles.passed && relations.passed && traces.passed && max_det_error <= kDeterminantTolerance;
  }
};

EntryChecks check_labeling(const Labeling& l, const PlanarConfig& c, const GeneratorSet& g);

// Realizes and verifies item (or the family member at n).
CatalogEntry make_entry(const CatalogItem& item, std::optional<int> instance = std::nullopt);
CatalogEntry make_entry(const Labeling& l);

CatalogItem item_of(const CatalogEntry& e);

struct Catalog {
  std::string format = kCatalogFormat;
  Provenance provenance;
  std::vector<CatalogEntry> entries;
};

// Canonical order: cusp, then labeling, then kind.
void sort_entries(std::vector<CatalogEntry>& entries);

std::string entry_to_json(const CatalogEntry& e, int indent = 2);
CatalogEntry entry_from_json(const std::string& text);

std::string catalog_to_json(const Catalog& c, int indent = 1);
// Throws std::runtime_error on malformed input or an unknown format tag.
Catalog catalog_from_json(const std::string& text);

// Deterministic SVG 1.1 drawing of the three lines and two circles over the
// fixed viewport [-1.6, 1.6]^2.
std::string render_svg(const PlanarConfig& c, const std::string& title = "");

}  // namespace prismcat
