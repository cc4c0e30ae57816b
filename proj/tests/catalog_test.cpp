#include "prismcat/catalog.hpp"

#include <cstring>

#include "gtest/gtest.h"

namespace prismcat {
namespace {

std::vector<CatalogEntry> AllEntries() {
  std::vector<CatalogEntry> out;
  for (const CatalogItem& it : enumerate_catalog()) {
    out.push_back(make_entry(it));
    if (it.family) out.push_back(make_entry(it, it.free_min + 3));
  }
  sort_entries(out);
  return out;
}

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(CatalogJson, EntryRoundTripIsBitExact) {
  for (const CatalogEntry& e : AllEntries()) {
    const CatalogEntry back = entry_from_json(entry_to_json(e));
    EXPECT_EQ(back, e) << to_string(e.labeling);
    EXPECT_TRUE(SameBits(back.config.top.radius, e.config.top.radius));
    EXPECT_TRUE(SameBits(back.config.top.center.x, e.config.top.center.x));
    EXPECT_TRUE(SameBits(back.generators[3].b.imag(), e.generators[3].b.imag()));
    EXPECT_EQ(entry_to_json(back), entry_to_json(e));
  }
}

TEST(CatalogJson, CatalogRoundTrip) {
  Catalog c;
  c.entries = AllEntries();
  const std::string text = catalog_to_json(c);
  const Catalog back = catalog_from_json(text);
  EXPECT_EQ(back.format, kCatalogFormat);
  EXPECT_EQ(back.provenance, c.provenance);
  ASSERT_EQ(back.entries.size(), c.entries.size());
  for (std::size_t i = 0; i < c.entries.size(); ++i) EXPECT_EQ(back.entries[i], c.entries[i]);
  EXPECT_EQ(catalog_to_json(back), text);
}

TEST(CatalogJson, EmptyCatalog) {
  const Catalog back = catalog_from_json(catalog_to_json(Catalog{}));
  EXPECT_TRUE(back.entries.empty());
}

TEST(CatalogJson, InfiniteResidualSurvives) {
  CatalogEntry e = make_entry(Labeling{{2, 6, 2, 7, 3, 2, 2, 3, 2}});
  e.verification.angle_residuals[4] = std::numeric_limits<double>::infinity();
  EXPECT_EQ(entry_from_json(entry_to_json(e)), e);
}

TEST(CatalogJson, RejectsMalformedInput) {
  EXPECT_THROW(catalog_from_json("{"), std::runtime_error);
  EXPECT_THROW(catalog_from_json(R"({"format": "other/1", "provenance": {}, "entries": []})"), std::runtime_error);
  EXPECT_THROW(catalog_from_json(R"({"format": "prism-catalog/1"})"), std::runtime_error);
}

TEST(CatalogEntries, StoredChecksPass) {
  for (const CatalogEntry& e : AllEntries()) {
    for (std::size_t i = 0; i < kEdgeCount; ++i) {
      EXPECT_LE(e.verification.angle_residuals[i], kAngleTolerance) << to_string(e.labeling);
      EXPECT_LE(e.verification.relation_residuals[i], kRelationTolerance) << to_string(e.labeling);
      EXPECT_LE(e.verification.trace_residuals[i], kTraceTolerance) << to_string(e.labeling);
    }
  }
}

TEST(CatalogEntries, ItemOfInvertsMakeEntry) {
  for (const CatalogItem& it : enumerate_catalog()) {
    const CatalogItem back = item_of(make_entry(it));
    EXPECT_EQ(back.labeling, it.labeling);
    EXPECT_EQ(back.family, it.family);
    EXPECT_EQ(back.free_slot, it.free_slot);
    if (it.family) EXPECT_EQ(back.free_min, it.free_min);
    if (it.family) EXPECT_EQ(item_of(make_entry(it, it.free_min + 5)).labeling, it.labeling);
  }
}

TEST(CatalogEntries, SortedCanonically) {
  const auto entries = AllEntries();
  for (std::size_t i = 1; i < entries.size(); ++i) {
    const auto& a = entries[i - 1];
    const auto& b = entries[i];
    EXPECT_TRUE(a.cusp < b.cusp || (a.cusp == b.cusp && a.labeling <= b.labeling));
  }
}

TEST(RenderSvg, DeterministicAndComplete) {
  const Labeling l{{2, 6, 2, 7, 3, 2, 2, 3, 2}};
  const PlanarConfig c = realize(l);
  const std::string a = render_svg(c, to_string(l));
  const std::string b = render_svg(realize(l), to_string(l));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("viewBox=\"-1.6"), std::string::npos);
  EXPECT_NE(a.find("</svg>"), std::string::npos);
  // Strokes in order: red, green, blue, then the two circles in black.
  const auto red = a.find("stroke=\"red\"");
  const auto green = a.find("stroke=\"green\"");
  const auto blue = a.find("stroke=\"blue\"");
  const auto black = a.find("stroke=\"black\"");
  ASSERT_NE(red, std::string::npos);
  ASSERT_NE(black, std::string::npos);
  EXPECT_LT(red, green);
  EXPECT_LT(green, blue);
  EXPECT_LT(blue, black);
  EXPECT_NE(a.find("stroke=\"black\"", black + 1), std::string::npos);
}

}  // namespace
}  // namespace prismcat
