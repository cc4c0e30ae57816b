#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prismcat/catalog.hpp"
#include "prismcat/geometry.hpp"
#include "prismcat/labelings.hpp"
#include "prismcat/moebius.hpp"

namespace py = pybind11;
using namespace prismcat;

namespace {

Labeling to_labeling(const std::vector<int>& v) {
  if (v.size() != kEdgeCount) throw py::value_error("a labeling has exactly 9 labels");
  Labeling l;
  std::copy(v.begin(), v.end(), l.labels.begin());
  return l;
}

std::vector<int> from_labeling(const Labeling& l) { return {l.labels.begin(), l.labels.end()}; }

py::tuple matrix_tuple(const MoebiusMatrix& m) { return py::make_tuple(m.a, m.b, m.c, m.d); }

}  // namespace

PYBIND11_MODULE(_prismcat, m) {
  m.doc() = "One-cusped hyperbolic triangular prisms: catalog, realization and PSL(2,C) generators";

  py::register_exception<RealizationError>(m, "RealizationError");

  m.def("classify_triangle", [](int p, int q, int r) { return std::string(to_string(classify_triangle(p, q, r))); });

  m.def("is_admissible", [](const std::vector<int>& v) {
    const Admissibility a = is_admissible(to_labeling(v));
    return py::make_tuple(a.admissible, a.reason());
  });

  m.def("symmetry_mate", [](const std::vector<int>& v) { return from_labeling(symmetry_mate(to_labeling(v))); });
  m.def("canonicalize", [](const std::vector<int>& v) { return from_labeling(canonicalize(to_labeling(v))); });

  m.def("enumerate_catalog", [] {
    py::list out;
    for (const CatalogItem& it : enumerate_catalog()) {
      py::dict d;
      d["labeling"] = from_labeling(it.labeling);
      d["cusp"] = std::string(to_string(it.cusp));
      d["family"] = it.family;
      d["free_slot"] = it.free_slot ? py::cast(*it.free_slot) : py::none();
      d["free_min"] = it.family ? py::cast(it.free_min) : py::none();
      out.append(d);
    }
    return out;
  });

  m.def("realize", [](const std::vector<int>& v) {
    const PlanarConfig c = realize(to_labeling(v));
    py::dict d;
    auto line = [](const PlanarLine& l) {
      return py::make_tuple(py::make_tuple(l.normal.x, l.normal.y), l.offset);
    };
    d["red"] = line(c.red);
    d["green"] = line(c.green);
    d["blue"] = line(c.blue);
    d["top_center"] = py::make_tuple(c.top.center.x, c.top.center.y);
    d["top_radius"] = c.top.radius;
    d["a3_branch"] = c.a3_branch;
    return d;
  });

  m.def("angle_residuals", [](const std::vector<int>& v) {
    const Labeling l = to_labeling(v);
    const ConfigReport r = verify_config(l, realize(l));
    std::vector<double> out;
    for (const EdgeCheck& e : r.edges) out.push_back(e.residual);
    return out;
  });

  m.def("generators", [](const std::vector<int>& v) {
    const Labeling l = to_labeling(v);
    const GeneratorSet g = build_generators(l, realize(l));
    return py::make_tuple(matrix_tuple(g.m1), matrix_tuple(g.m2), matrix_tuple(g.m3), matrix_tuple(g.m4));
  });

  m.def("relation_residuals", [](const std::vector<int>& v) {
    const Labeling l = to_labeling(v);
    const RelationReport r = verify_relations(build_generators(l, realize(l)));
    std::vector<double> out;
    for (const RelationCheck& c : r.relations) out.push_back(c.residual);
    return out;
  });

  m.def("trace_residuals", [](const std::vector<int>& v) {
    const Labeling l = to_labeling(v);
    const TraceReport r = trace_check(build_generators(l, realize(l)));
    std::vector<double> out;
    for (const TraceCheck& c : r.traces) out.push_back(c.residual);
    return out;
  });

  m.def("entry_json", [](const std::vector<int>& v) { return entry_to_json(make_entry(to_labeling(v))); });

  m.def("render_svg", [](const std::vector<int>& v) {
    const Labeling l = to_labeling(v);
    return render_svg(realize(l), to_string(l));
  });
}
