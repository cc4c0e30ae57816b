#include "prismcat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prismcat/catalog.hpp"

namespace prismcat::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string complex_str(Complex z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return num(z.real()) + (std::signbit(im) ? " - " : " + ") + num(std::abs(im)) + "i";
}

std::string line_str(const PlanarLine& l) {
  if (l.is_vertical()) return "x = " + num(l.x_intercept());
  return "y = " + num(l.slope()) + " x + " + num(l.intercept());
}

std::string circle_str(const PlanarCircle& c) {
  return "center (" + num(c.center.x) + ", " + num(c.center.y) + ")  radius " + num(c.radius);
}

Labeling parse_labeling(const std::vector<std::string>& tokens) {
  std::vector<int> values;
  for (const std::string& tok : tokens) {
    std::istringstream is(tok);
    std::string part;
    while (is >> part) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(part, &used);
      } catch (const std::exception&) {
        throw UsageError("not an integer label: " + part);
      }
      if (used != part.size()) throw UsageError("not an integer label: " + part);
      values.push_back(v);
    }
  }
  if (values.size() != kEdgeCount) {
    throw UsageError("expected 9 labels a1..a9, got " + std::to_string(values.size()));
  }
  Labeling l;
  std::copy(values.begin(), values.end(), l.labels.begin());
  return l;
}

// Admissible labeling or a usage error naming the failed condition.
Labeling admissible_labeling(const std::vector<std::string>& tokens) {
  const Labeling l = parse_labeling(tokens);
  if (const Admissibility adm = is_admissible(l); !adm) {
    throw UsageError("labeling " + to_string(l) + " is not admissible: " + adm.reason());
  }
  if (l.label(3) != 2 && l.label(3) != 3) {
    throw UsageError("a3 must be 2 or 3");
  }
  return l;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << content;
  if (!f.flush()) throw UsageError("write to " + path + " failed");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// --- enumerate ---------------------------------------------------------

struct EnumerateOptions {
  std::optional<int> max_n;
  std::string cusp;
  std::optional<int> a3;
  std::string output;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<CuspType> cusp;
  if (!opt.cusp.empty()) {
    cusp = parse_cusp(opt.cusp);
    if (!cusp) throw UsageError("unknown cusp " + opt.cusp + " (expected 236, 244 or 333)");
  }
  const std::vector<CatalogItem> all = enumerate_catalog();
  std::vector<CatalogItem> items;
  for (const CatalogItem& it : all) {
    if (cusp && it.cusp != *cusp) continue;
    if (opt.a3 && it.labeling.label(3) != *opt.a3) continue;
    items.push_back(it);
  }

  Catalog catalog;
  std::vector<std::string> failures;
  auto add = [&](const CatalogItem& it, std::optional<int> n) {
    CatalogEntry e = make_entry(it, n);
    const GeneratorSet g = build_generators(e.labeling, e.config);
    if (!check_labeling(e.labeling, e.config, g).passed()) failures.push_back(to_string(e.labeling));
    catalog.entries.push_back(std::move(e));
  };
  for (const CatalogItem& it : items) {
    add(it, std::nullopt);
    if (it.family && opt.max_n) {
      for (int n = it.free_min; n <= *opt.max_n; ++n) add(it, n);
    }
  }
  sort_entries(catalog.entries);

  const std::string text = catalog_to_json(catalog);
  std::ostream& summary = opt.output.empty() ? err : out;
  if (opt.output.empty()) {
    out << text;
  } else {
    write_file(opt.output, text);
  }

  const CatalogCounts c236 = count(items, CuspType::k236);
  const CatalogCounts c244 = count(items, CuspType::k244);
  const CatalogCounts c333 = count(items, CuspType::k333);
  const CatalogCounts total = count(items);
  summary << "C236: " << c236.families << " families + " << c236.specifics << "; C244: " << c244.families << " + "
          << c244.specifics << "; C333: " << c333.families << " + " << c333.specifics << "\n";
  summary << total.families << " families, " << total.specifics << " specific; " << catalog.entries.size()
          << " entries written\n";

  int code = kExitOk;
  if (!opt.a3) {
    const CatalogCounts want = expected_counts(cusp);
    const CatalogCounts got = count(items, cusp);
    if (got.families != want.families || got.specifics != want.specifics) {
      err << "count mismatch: expected " << want.families << " families + " << want.specifics << " specific\n";
      code = kExitVerificationFailed;
    }
  }
  for (const std::string& f : failures) {
    err << "verification failed: " << f << "\n";
    code = kExitVerificationFailed;
  }
  return code;
}

// --- realize -----------------------------------------------------------

int cmd_realize(const std::vector<std::string>& tokens, const std::string& svg_path, const std::string& json_path,
                std::ostream& out) {
  const Labeling l = admissible_labeling(tokens);
  const RealizeResult res = realize_detailed(l);
  const PlanarConfig& c = res.config;
  const ConfigReport rep = verify_config(l, c);

  out << "labeling  " << to_string(l) << "\n";
  out << "cusp      " << bracket_name(*cusp_of(l)) << "\n";
  out << "red       " << line_str(c.red) << "\n";
  out << "green     " << line_str(c.green) << "\n";
  out << "blue      " << line_str(c.blue) << "\n";
  out << "back      " << circle_str(c.back) << "\n";
  out << "top       " << circle_str(c.top) << "\n";
  out << "angles    max residual " << sci(rep.max_residual) << (rep.passed ? "  ok" : "  FAIL") << "\n";
  if (res.warning) out << "warning   " << *res.warning << "\n";

  if (!svg_path.empty()) write_file(svg_path, render_svg(c, to_string(l)));
  if (!json_path.empty()) write_file(json_path, entry_to_json(make_entry(l)) + "\n");
  return rep.passed ? kExitOk : kExitVerificationFailed;
}

// --- matrices ----------------------------------------------------------

std::string matrix_str(const MoebiusMatrix& m) {
  return "[[" + complex_str(m.a) + ", " + complex_str(m.b) + "], [" + complex_str(m.c) + ", " + complex_str(m.d) + "]]";
}

int cmd_matrices(const std::vector<std::string>& tokens, const std::string& json_path, std::ostream& out) {
  const Labeling l = admissible_labeling(tokens);
  const PlanarConfig c = realize(l);
  const GeneratorSet g = build_generators(l, c);
  const EntryChecks ch = check_labeling(l, c, g);

  out << "labeling  " << to_string(l) << "\n";
  const std::array<const MoebiusMatrix*, 4> ms{&g.m1, &g.m2, &g.m3, &g.m4};
  for (std::size_t i = 0; i < ms.size(); ++i) {
    out << "M" << i + 1 << " = " << matrix_str(*ms[i]) << "\n";
  }
  out << "max |det - 1| " << sci(ch.max_det_error) << "\n";
  out << "relations\n";
  for (std::size_t i = 0; i < kEdgeCount; ++i) {
    const RelationCheck& rc = ch.relations.relations[i];
    const TraceCheck& tc = ch.traces.traces[i];
    char line[160];
    std::snprintf(line, sizeof line, "  %-14s a%zu = %-4d residual %.3e  |tr| residual %.3e  %s\n", rc.word.c_str(),
                  i + 1, rc.exponent, rc.residual, tc.residual, rc.passed && tc.passed ? "ok" : "FAIL");
    out << line;
  }
  if (!json_path.empty()) write_file(json_path, entry_to_json(make_entry(l)) + "\n");
  return ch.passed() ? kExitOk : kExitVerificationFailed;
}

// --- verify ------------------------------------------------------------

double config_distance(const PlanarConfig& a, const PlanarConfig& b) {
  double d = 0;
  auto upd = [&](double x, double y) { d = std::max(d, std::abs(x - y)); };
  for (auto [p, q] : {std::pair{&a.red, &b.red}, {&a.green, &b.green}, {&a.blue, &b.blue}}) {
    upd(p->normal.x, q->normal.x);
    upd(p->normal.y, q->normal.y);
    upd(p->offset, q->offset);
  }
  for (auto [p, q] : {std::pair{&a.back, &b.back}, {&a.top, &b.top}}) {
    upd(p->center.x, q->center.x);
    upd(p->center.y, q->center.y);
    upd(p->radius, q->radius);
  }
  if (a.a3_branch != b.a3_branch) d = std::numeric_limits<double>::infinity();
  return d;
}

struct SweepMax {
  double angle = 0, relation = 0, trace = 0, det = 0, stored = 0;
};

int cmd_verify(const std::string& path, const std::vector<int>& samples, std::ostream& out, std::ostream& err) {
  Catalog catalog;
  try {
    catalog = catalog_from_json(read_file(path));
  } catch (const std::runtime_error& ex) {
    throw UsageError(ex.what());
  }

  SweepMax mx;
  std::vector<std::string> failures;
  int checked = 0;

  auto check = [&](const std::string& name, const Labeling& l, const PlanarConfig& c) {
    ++checked;
    if (!is_admissible(l)) {
      failures.push_back(name + ": not admissible");
      return;
    }
    const ConfigReport angles = verify_config(l, c);
    mx.angle = std::max(mx.angle, angles.max_residual);
    if (!angles.passed) {
      std::string edges;
      for (int e : angles.failing_edges()) edges += " a" + std::to_string(e);
      failures.push_back(name + ": angle check failed on" + edges);
      return;
    }
    const GeneratorSet g = build_generators(l, c);
    const EntryChecks ch = check_labeling(l, c, g);
    mx.relation = std::max(mx.relation, ch.relations.max_residual);
    mx.trace = std::max(mx.trace, ch.traces.max_residual);
    mx.det = std::max(mx.det, ch.max_det_error);
    if (!ch.passed()) failures.push_back(name + ": relation/trace/determinant check failed");
  };

  for (const CatalogEntry& e : catalog.entries) {
    const std::string name = to_string(e.labeling);
    check(name, e.labeling, e.config);
    if (is_admissible(e.labeling) && (e.labeling.label(3) == 2 || e.labeling.label(3) == 3)) {
      try {
        const double d = config_distance(realize(e.labeling), e.config);
        mx.stored = std::max(mx.stored, d);
        if (!(d <= kAngleTolerance)) failures.push_back(name + ": stored configuration differs from realization");
      } catch (const std::exception& ex) {
        failures.push_back(name + ": " + ex.what());
      }
    }
    if (e.kind != EntryKind::kFamily) continue;
    const CatalogItem item = item_of(e);
    std::vector<int> ns = samples;
    if (ns.empty()) ns = {item.free_min, item.free_min + 1, item.free_min + 10, 500};
    for (int n : ns) {
      if (n < item.free_min) continue;
      const Labeling inst = item.instantiate(n);
      try {
        check(name + " [a" + std::to_string(*item.free_slot) + "=" + std::to_string(n) + "]", inst, realize(inst));
      } catch (const std::exception& ex) {
        failures.push_back(to_string(inst) + ": " + ex.what());
      }
    }
  }

  out << "checked " << checked << " labelings from " << catalog.entries.size() << " entries\n";
  out << "max angle residual     " << sci(mx.angle) << "\n";
  out << "max relation residual  " << sci(mx.relation) << "\n";
  out << "max trace residual     " << sci(mx.trace) << "\n";
  out << "max |det - 1|          " << sci(mx.det) << "\n";
  out << "max stored deviation   " << sci(mx.stored) << "\n";
  for (const std::string& f : failures) err << "FAIL " << f << "\n";
  out << (failures.empty() ? "all checks passed" : std::to_string(failures.size()) + " failures") << "\n";
  return failures.empty() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, realize and verify one-cusped hyperbolic triangular prism reflection groups", "prismcat"};
  app.require_subcommand(1);

  EnumerateOptions eo;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the catalog and write it as JSON");
  enumerate->add_option("--max-n", eo.max_n, "Also expand each family to instances free_min..N");
  enumerate->add_option("--cusp", eo.cusp, "Only this cusp type (236, 244 or 333)");
  enumerate->add_option("--a3", eo.a3, "Only labelings with this a3");
  enumerate->add_option("-o,--output", eo.output, "Output file (default: stdout)");

  std::vector<std::string> labels;
  std::string svg_path, json_path;
  auto* realize_cmd = app.add_subcommand("realize", "Print the lines and circles realizing a labeling");
  realize_cmd->add_option("labels", labels, "a1 .. a9")->required();
  realize_cmd->add_option("--svg", svg_path, "Write an SVG figure");
  realize_cmd->add_option("--json", json_path, "Write the catalog entry as JSON");

  auto* matrices = app.add_subcommand("matrices", "Print the PSL(2,C) generators and relation residuals");
  matrices->add_option("labels", labels, "a1 .. a9")->required();
  matrices->add_option("--json", json_path, "Write the catalog entry as JSON");

  std::string catalog_path;
  std::vector<int> samples;
  auto* verify = app.add_subcommand("verify", "Re-realize and re-verify every entry of a catalog file");
  verify->add_option("catalog", catalog_path, "Catalog JSON file")->required();
  verify->add_option("--sample", samples, "Family instances to check (default: free_min, +1, +10, 500)");

  std::vector<std::string> argv{args.rbegin(), args.rend()};
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(eo, out, err);
    if (*realize_cmd) return cmd_realize(labels, svg_path, json_path, out);
    if (*matrices) return cmd_matrices(labels, json_path, out);
    if (*verify) return cmd_verify(catalog_path, samples, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace prismcat::cli
