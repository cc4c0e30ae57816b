#include "prismcat/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace prismcat {

using nlohmann::json;

std::string_view to_string(EntryKind k) {
  switch (k) {
    case EntryKind::kSpecific: return "specific";
    case EntryKind::kFamily: return "family";
    case EntryKind::kFamilyInstance: return "family_instance";
  }
  return "?";
}

namespace {

EntryKind parse_kind(const std::string& s) {
  if (s == "specific") return EntryKind::kSpecific;
  if (s == "family") return EntryKind::kFamily;
  if (s == "family_instance") return EntryKind::kFamilyInstance;
  throw std::runtime_error("unknown entry kind: " + s);
}

// JSON has no infinities; a disjoint face pair is stored as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }
double number(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

json residuals(const std::array<double, kEdgeCount>& r) {
  json a = json::array();
  for (double v : r) a.push_back(number(v));
  return a;
}

std::array<double, kEdgeCount> residuals(const json& j) {
  if (j.size() != kEdgeCount) throw std::runtime_error("expected 9 residuals");
  std::array<double, kEdgeCount> r{};
  for (std::size_t i = 0; i < kEdgeCount; ++i) r[i] = number(j[i]);
  return r;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }
Complex complex_from(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

json matrix_json(const MoebiusMatrix& m) {
  return {{"a", complex_json(m.a)}, {"b", complex_json(m.b)}, {"c", complex_json(m.c)}, {"d", complex_json(m.d)}};
}
MoebiusMatrix matrix_from(const json& j) {
  return {complex_from(j.at("a")), complex_from(j.at("b")), complex_from(j.at("c")), complex_from(j.at("d"))};
}

json line_json(const PlanarLine& l) { return {{"normal", {l.normal.x, l.normal.y}}, {"offset", l.offset}}; }
PlanarLine line_from(const json& j) {
  PlanarLine l;
  l.normal = {j.at("normal").at(0).get<double>(), j.at("normal").at(1).get<double>()};
  l.offset = j.at("offset").get<double>();
  return l;
}

json circle_json(const PlanarCircle& c) { return {{"center", {c.center.x, c.center.y}}, {"radius", c.radius}}; }
PlanarCircle circle_from(const json& j) {
  return {{j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()}, j.at("radius").get<double>()};
}

json provenance_json(const Provenance& p) {
  return {{"tool_version", p.tool_version},
          {"tolerances",
           {{"construction", p.construction_tolerance},
            {"angle", p.angle_tolerance},
            {"relation", p.relation_tolerance},
            {"trace", p.trace_tolerance}}}};
}
Provenance provenance_from(const json& j) {
  Provenance p;
  p.tool_version = j.at("tool_version").get<std::string>();
  const json& t = j.at("tolerances");
  p.construction_tolerance = t.at("construction").get<double>();
  p.angle_tolerance = t.at("angle").get<double>();
  p.relation_tolerance = t.at("relation").get<double>();
  p.trace_tolerance = t.at("trace").get<double>();
  return p;
}

json to_json_value(const CatalogEntry& e) {
  json j;
  j["kind"] = std::string(to_string(e.kind));
  j["cusp"] = std::string(to_string(e.cusp));
  j["labeling"] = e.labeling.labels;
  j["family"] = e.free_slot ? json{{"free_slot", *e.free_slot}, {"free_min", e.free_min}} : json(nullptr);
  j["config"] = {{"a3_branch", e.config.a3_branch},
                 {"red", line_json(e.config.red)},
                 {"green", line_json(e.config.green)},
                 {"blue", line_json(e.config.blue)},
                 {"back", circle_json(e.config.back)},
                 {"top", circle_json(e.config.top)}};
  j["generators"] = {{"m1", matrix_json(e.generators[0])},
                     {"m2", matrix_json(e.generators[1])},
                     {"m3", matrix_json(e.generators[2])},
                     {"m4", matrix_json(e.generators[3])}};
  j["verification"] = {{"angle_residuals", residuals(e.verification.angle_residuals)},
                       {"relation_residuals", residuals(e.verification.relation_residuals)},
                       {"trace_residuals", residuals(e.verification.trace_residuals)}};
  j["provenance"] = provenance_json(e.provenance);
  return j;
}

CatalogEntry entry_from_value(const json& j) {
  CatalogEntry e;
  e.kind = parse_kind(j.at("kind").get<std::string>());
  const auto cusp = parse_cusp(j.at("cusp").get<std::string>());
  if (!cusp) throw std::runtime_error("unknown cusp type");
  e.cusp = *cusp;
  e.labeling.labels = j.at("labeling").get<std::array<int, kEdgeCount>>();
  if (const json& f = j.at("family"); !f.is_null()) {
    e.free_slot = f.at("free_slot").get<int>();
    e.free_min = f.at("free_min").get<int>();
  }
  const json& c = j.at("config");
  e.config.a3_branch = c.at("a3_branch").get<int>();
  e.config.red = line_from(c.at("red"));
  e.config.green = line_from(c.at("green"));
  e.config.blue = line_from(c.at("blue"));
  e.config.back = circle_from(c.at("back"));
  e.config.top = circle_from(c.at("top"));
  const json& g = j.at("generators");
  e.generators = {matrix_from(g.at("m1")), matrix_from(g.at("m2")), matrix_from(g.at("m3")), matrix_from(g.at("m4"))};
  const json& v = j.at("verification");
  e.verification.angle_residuals = residuals(v.at("angle_residuals"));
  e.verification.relation_residuals = residuals(v.at("relation_residuals"));
  e.verification.trace_residuals = residuals(v.at("trace_residuals"));
  e.provenance = provenance_from(j.at("provenance"));
  return e;
}

}  // namespace

EntryChecks check_labeling(const Labeling& l, const PlanarConfig& c, const GeneratorSet& g) {
  EntryChecks ch;
  ch.angles = verify_config(l, c);
  ch.relations = verify_relations(g);
  ch.traces = trace_check(g);
  for (const MoebiusMatrix& m : {g.m1, g.m2, g.m3, g.m4}) {
    ch.max_det_error = std::max(ch.max_det_error, std::abs(m.det() - 1.0));
  }
  return ch;
}

CatalogEntry make_entry(const CatalogItem& item, std::optional<int> instance) {
  CatalogEntry e;
  e.cusp = item.cusp;
  if (item.family) {
    e.kind = instance ? EntryKind::kFamilyInstance : EntryKind::kFamily;
    e.free_slot = item.free_slot;
    e.free_min = item.free_min;
    e.labeling = item.instantiate(instance.value_or(item.free_min));
  } else {
    e.labeling = item.labeling;
  }
  e.config = realize(e.labeling);
  const GeneratorSet g = build_generators(e.labeling, e.config);
  e.generators = {g.m1, g.m2, g.m3, g.m4};
  const EntryChecks ch = check_labeling(e.labeling, e.config, g);
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    e.verification.angle_residuals[i] = ch.angles.edges[i].residual;
    e.verification.relation_residuals[i] = ch.relations.relations[i].residual;
    e.verification.trace_residuals[i] = ch.traces.traces[i].residual;
  }
  return e;
}

CatalogEntry make_entry(const Labeling& l) {
  CatalogItem item;
  item.labeling = l;
  const auto cusp = cusp_of(l);
  if (!cusp) throw std::invalid_argument("ideal triple not Euclidean");
  item.cusp = *cusp;
  return make_entry(item);
}

CatalogItem item_of(const CatalogEntry& e) {
  CatalogItem it;
  it.cusp = e.cusp;
  it.family = e.free_slot.has_value();
  it.free_slot = e.free_slot;
  it.free_min = e.free_min;
  it.labeling = e.labeling;
  if (it.family) it.labeling[static_cast<std::size_t>(*e.free_slot - 1)] = e.free_min;
  return it;
}

void sort_entries(std::vector<CatalogEntry>& entries) {
  std::stable_sort(entries.begin(), entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    if (a.cusp != b.cusp) return a.cusp < b.cusp;
    if (a.labeling != b.labeling) return a.labeling < b.labeling;
    return a.kind < b.kind;
  });
}

std::string entry_to_json(const CatalogEntry& e, int indent) { return to_json_value(e).dump(indent); }

CatalogEntry entry_from_json(const std::string& text) { return entry_from_value(json::parse(text)); }

std::string catalog_to_json(const Catalog& c, int indent) {
  json j;
  j["format"] = c.format;
  j["provenance"] = provenance_json(c.provenance);
  json summary = json::object();
  for (CuspType cusp : {CuspType::k236, CuspType::k244, CuspType::k333}) {
    int fam = 0, spec = 0;
    for (const CatalogEntry& e : c.entries) {
      if (e.cusp != cusp) continue;
      if (e.kind == EntryKind::kFamily) ++fam;
      if (e.kind == EntryKind::kSpecific) ++spec;
    }
    summary[std::string(to_string(cusp))] = {{"families", fam}, {"specifics", spec}};
  }
  j["summary"] = summary;
  j["entries"] = json::array();
  for (const CatalogEntry& e : c.entries) j["entries"].push_back(to_json_value(e));
  return j.dump(indent) + "\n";
}

Catalog catalog_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Catalog c;
    c.format = j.at("format").get<std::string>();
    if (c.format != kCatalogFormat) throw std::runtime_error("unsupported catalog format: " + c.format);
    c.provenance = provenance_from(j.at("provenance"));
    for (const json& e : j.at("entries")) c.entries.push_back(entry_from_value(e));
    return c;
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("malformed catalog: ") + ex.what());
  }
}

}  // namespace prismcat
