// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "prismcat/catalog.hpp"
#include "prismcat/geometry.hpp"
#include "prismcat/labelings.hpp"
#include "prismcat/moebius.hpp"

using namespace prismcat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

struct SweepItem {
  Labeling labeling;
  bool large_power = false;
};

std::vector<SweepItem> sweep_set() {
  std::vector<SweepItem> out;
  for (const CatalogItem& it : enumerate_catalog()) {
    if (!it.family) {
      out.push_back({it.labeling});
      continue;
    }
    for (int n : {it.free_min, it.free_min + 1, it.free_min + 10, 500}) out.push_back({it.instantiate(n), n == 500});
  }
  return out;
}

Outcome counts() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto items = enumerate_catalog();
  const double dt = seconds_since(t0);
  const CatalogCounts a = count(items, CuspType::k236);
  const CatalogCounts b = count(items, CuspType::k244);
  const CatalogCounts c = count(items, CuspType::k333);
  const CatalogCounts t = count(items);
  const bool ok = a.families == 8 && a.specifics == 32 && b.families == 4 && b.specifics == 24 && c.families == 0 &&
                  c.specifics == 22 && t.families == 12 && t.specifics == 78 && dt < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "236: %d+%d, 244: %d+%d, 333: %d+%d, %.3fs", a.families, a.specifics, b.families,
                b.specifics, c.families, c.specifics, dt);
  return {ok, buf};
}

Outcome golden() {
  auto rows = oracle::load_golden(PRISMCAT_TEST_DATA "/golden_tables.txt");
  std::vector<oracle::GoldenRow> got;
  for (const CatalogItem& it : enumerate_catalog()) {
    oracle::GoldenRow r;
    r.cusp = std::string(to_string(it.cusp));
    r.labels = it.labeling.labels;
    r.free_slot = it.free_slot;
    r.free_min = it.family ? it.free_min : 0;
    got.push_back(r);
  }
  std::sort(rows.begin(), rows.end());
  std::sort(got.begin(), got.end());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < std::max(rows.size(), got.size()); ++i) {
    if (i >= rows.size() || i >= got.size() || !(rows[i] == got[i])) ++mismatches;
  }
  return {mismatches == 0 && !rows.empty(),
          std::to_string(rows.size()) + " table rows, " + std::to_string(mismatches) + " mismatches"};
}

Outcome fixture_one() {
  const PlanarConfig c = realize(Labeling{{2, 6, 2, 7, 3, 2, 2, 3, 2}});
  const double c7 = std::cos(kPi / 7), s = std::sin(3 * kPi / 14);
  const double x = (2 * std::sqrt(3.0) * c7 - std::sqrt(6 * s - 2)) / 4;
  const double r = (std::sqrt(18 * s - 6) - 2 * c7) / 4;
  const double closed = std::max({std::abs(c.top.center.x - x), std::abs(c.top.center.y - c7), std::abs(c.top.radius - r)});
  const double printed = std::max(std::abs(c.top.center.x - 0.4504), std::abs(c.top.radius - 0.1209));
  return {closed <= 1e-10 && printed <= 5e-5,
          fmt("x=%.12f r=%.12f, closed-form error %.1e", c.top.center.x, c.top.radius, closed)};
}

Outcome fixture_two() {
  const PlanarConfig c = realize(Labeling{{2, 4, 2, 5, 4, 2, 2, 2, 3}});
  const double c5 = std::cos(kPi / 5);
  const double err = std::max({std::abs(c.top.center.x - c5), std::abs(c.top.center.y - c5),
                               std::abs(c.top.radius - (std::pow(5.0, 0.25) - 1) / 2)});
  return {err <= 1e-10, fmt("r=%.15f, error %.1e", c.top.radius, err)};
}

Outcome fixture_three() {
  const double r3 = std::sqrt(3.0), r6 = std::sqrt(6.0), c5 = std::cos(kPi / 5);
  struct Row {
    int a4, a6;
    double gm, gb, bm, bb;
  };
  const Row rows[] = {
      {3, 4, -r3 / 3, r3 / 3, r3 / 3, -r6 / 3},
      {3, 5, -r3 / 3, r3 / 3, r3 / 3, -2 * r3 / 3 * c5},
      {4, 4, -r3 / 3, r6 / 3, r3 / 3, -r6 / 3},
      {4, 5, -r3 / 3, r6 / 3, r3 / 3, -2 * r3 / 3 * c5},
      {5, 5, -r3 / 3, 2 * r3 / 3 * c5, r3 / 3, -2 * r3 / 3 * c5},
  };
  double err = 0;
  for (const Row& r : rows) {
    const Lines ls = build_lines(Labeling{{3, 3, 2, r.a4, 3, r.a6, 2, 2, 2}});
    err = std::max({err, std::abs(ls.green.slope() - r.gm), std::abs(ls.green.intercept() - r.gb),
                    std::abs(ls.blue.slope() - r.bm), std::abs(ls.blue.intercept() - r.bb)});
  }
  return {err <= 1e-12, fmt("5 line pairs, max coefficient error %.1e", err)};
}

Outcome angle_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  std::size_t failed = 0, n = 0;
  for (const SweepItem& s : sweep_set()) {
    ++n;
    try {
      const ConfigReport r = verify_config(s.labeling, realize(s.labeling));
      worst = std::max(worst, r.max_residual);
      if (!(r.max_residual <= 1e-9)) ++failed;
    } catch (const std::exception&) {
      ++failed;
    }
  }
  const double dt = seconds_since(t0);
  return {failed == 0 && dt < 10.0,
          std::to_string(n) + " labelings, max residual " + fmt("%.1e, %.3fs", worst, dt)};
}

Outcome relation_sweep() {
  double worst_rel = 0, worst_big = 0, worst_tr = 0;
  std::size_t failed = 0, n = 0;
  for (const SweepItem& s : sweep_set()) {
    ++n;
    const GeneratorSet g = build_generators(s.labeling, realize(s.labeling));
    bool ok = true;
    for (std::size_t i = 0; i < kEdgeCount; ++i) {
      const int e = s.labeling.labels[i];
      const double d = psl2_distance(pow(relation_base(g, i), e), MoebiusMatrix::identity());
      double& worst = s.large_power ? worst_big : worst_rel;
      worst = std::max(worst, d);
      if (!(d <= (s.large_power ? 1e-6 : 1e-7))) ok = false;
      const double tr = std::abs(std::abs(relation_base(g, i).normalized().trace()) - 2 * std::cos(kPi / e));
      worst_tr = std::max(worst_tr, tr);
      if (!(tr <= 1e-8)) ok = false;
    }
    if (!ok) ++failed;
  }
  return {failed == 0, std::to_string(n) + " labelings, max word residual " +
                           fmt("%.1e (n=500: %.1e), max trace residual %.1e", worst_rel, worst_big, worst_tr)};
}

Outcome determinants() {
  double worst = 0;
  for (const SweepItem& s : sweep_set()) {
    const GeneratorSet g = build_generators(s.labeling, realize(s.labeling));
    for (const MoebiusMatrix& m : {g.m1, g.m2, g.m3, g.m4}) worst = std::max(worst, std::abs(m.det() - 1.0));
  }
  return {worst <= 1e-10, fmt("max |det - 1| %.1e", worst)};
}

Outcome newton_agreement() {
  auto items = enumerate_catalog();
  std::mt19937 rng(99);
  std::shuffle(items.begin(), items.end(), rng);
  const std::array<std::array<double, 3>, 8> seeds{{
      {0.5, 0.5, 0.2}, {1, 1, 0.5}, {0.2, 0.9, 0.1}, {1.5, 0, 1}, {0, 1.5, 1}, {2, 2, 2}, {0.8, -0.3, 0.4}, {1, 0.3, 0.05},
  }};
  double worst = 0;
  int agreed = 0;
  for (std::size_t k = 0; k < 20; ++k) {
    const Labeling l = items[k].labeling;
    const PlanarConfig c = realize(l);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& s : seeds) {
      const auto v = oracle::newton(oracle::top_system(l.labels), s);
      if (!v || (*v)[2] <= 0) continue;
      best = std::min(best, std::max({std::abs((*v)[0] - c.top.center.x), std::abs((*v)[1] - c.top.center.y),
                                      std::abs((*v)[2] - c.top.radius)}));
    }
    worst = std::max(worst, best);
    if (best <= 1e-9) ++agreed;
  }
  return {agreed == 20, std::to_string(agreed) + "/20 entries agree, max deviation " + fmt("%.1e", worst)};
}

Outcome symmetry_grid() {
  const auto t0 = std::chrono::steady_clock::now();
  std::array<int, 9> a{};
  a.fill(2);
  long long checked = 0, mismatches = 0, admissible = 0;
  while (true) {
    const Labeling l{a};
    const bool x = is_admissible(l).admissible;
    if (x != is_admissible(symmetry_mate(l)).admissible) ++mismatches;
    admissible += x;
    ++checked;
    std::size_t i = 0;
    while (i < 9 && a[i] == 10) a[i++] = 2;
    if (i == 9) break;
    ++a[i];
  }
  const double dt = seconds_since(t0);
  return {mismatches == 0 && dt < 30.0,
          std::to_string(checked) + " labelings (" + std::to_string(admissible) + " admissible), " +
              std::to_string(mismatches) + " mismatches, " + fmt("%.2fs", dt)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"catalog counts", counts},
      {"golden tables", golden},
      {"fixture 1 (2,6,2,7,3,2,2,3,2)", fixture_one},
      {"fixture 2 (2,4,2,5,4,2,2,2,3)", fixture_two},
      {"fixture 3 line pairs", fixture_three},
      {"angle sweep", angle_sweep},
      {"relation and trace sweep", relation_sweep},
      {"determinants", determinants},
      {"Newton agreement", newton_agreement},
      {"symmetry grid a <= 10", symmetry_grid},
  };
  int failures = 0;
  int k = 0;
  for (const auto& [name, fn] : criteria) {
    ++k;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", k - failures, k);
  return failures == 0 ? 0 : 1;
}
