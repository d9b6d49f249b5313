// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "test_support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace linknav;
using namespace linknav::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) {
      out_.pass = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<Linkage> criterion2_linkages() {
  std::mt19937_64 rng(20240601);
  std::vector<Linkage> out;
  for (int i = 0; i < 200; ++i) out.push_back(random_generic(rng, 4 + i % 6, 25));
  return out;
}

Outcome c1() {
  Check c;
  const auto t0 = Clock::now();
  Linkage L = pentagon();
  Graph g = build_graph(L);
  const auto twocells = enumerate_cells(L, 2).size();
  bool deg4 = true;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) deg4 = deg4 && g.degree(v) == 4;
  const double dt = seconds_since(t0);
  c.require(g.vertices().size() == 30, "vertices " + std::to_string(g.vertices().size()));
  c.require(g.edges().size() == 60, "edges " + std::to_string(g.edges().size()));
  c.require(twocells == 24, "2-cells " + std::to_string(twocells));
  c.require(deg4, "a vertex has degree != 4");
  c.require(dt < 1.0, fmt("runtime %.3fs", dt));
  c.note(fmt("30 vertices, 60 edges, 24 2-cells, 4-regular in %.3fs", dt));
  return c.result();
}

Outcome c2() {
  Check c;
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const Linkage& L : criterion2_linkages()) {
    const auto count = static_cast<std::int64_t>(enumerate_cells(L, 0).size());
    c.require(predicted_vertex_count(L) == count, "formula mismatch for n=" + std::to_string(L.size()));
    ++checked;
  }
  for (int n = 4; n <= 10; ++n) {
    Linkage B = bow(n);
    const std::int64_t want = (std::int64_t{1} << (n - 1)) - 2;
    c.require(static_cast<std::int64_t>(enumerate_cells(B, 0).size()) == want, "bow enumeration n=" + std::to_string(n));
    c.require(predicted_vertex_count(B) == want, "bow formula n=" + std::to_string(n));
  }
  const double dt = seconds_since(t0);
  c.require(dt < 60, fmt("runtime %.1fs", dt));
  c.note(fmt("%zu random linkages and bows n=4..10 exact in %.2fs", checked, dt));
  return c.result();
}

Outcome c3() {
  Check c;
  Graph q = build_graph(two_circles());
  auto comps = components(q);
  c.require(comps.size() == 2, "components " + std::to_string(comps.size()));
  for (const auto& comp : comps) c.require(comp.size() == 3, "component size " + std::to_string(comp.size()));

  Linkage H = hexagon_linkage();
  Graph h = build_graph(H);
  auto list = hexagon_list();
  auto sorted = list;
  std::sort(sorted.begin(), sorted.end());
  c.require(h.vertices() == sorted, "hexagon vertex set differs");
  c.require(h.edges().size() == 6 && components(h).size() == 1, "hexagon is not a single 6-cycle");
  for (std::size_t v = 0; v < h.vertices().size(); ++v) c.require(h.degree(v) == 2, "hexagon vertex degree != 2");
  for (std::size_t i = 0; i < list.size(); ++i)
    c.require(move_between(H, list[i], list[(i + 1) % list.size()]).has_value(), "hexagon order broken at " + std::to_string(i));
  c.note("two 3-cycles; hexagon list forms the 6-cycle in the listed order");
  return c.result();
}

Outcome c4() {
  Check c;
  for (const Linkage& L : criterion2_linkages())
    c.require(euler_characteristic(L) == euler_from_betti(L), "Euler mismatch for n=" + std::to_string(L.size()));
  auto b = betti_numbers(Linkage::create({1, 1, 1, 1, Rational(7, 2)}));
  c.require(b == std::vector<std::uint64_t>{1, 0, 1}, "5-bow Betti numbers differ");
  c.note("census Euler = Betti Euler on 200 linkages; 5-bow Betti (1,0,1)");
  return c.result();
}

struct HeptagonRun {
  std::string trace_json, plan_json, tom_json;
  bool trace_ok = false, plan_ok = false, tom_ok = false;
  std::size_t plan_len = 0, tom_len = 0;
};

HeptagonRun heptagon_run() {
  HeptagonRun r;
  Linkage L = heptagon();
  auto trace = heptagon_trace();
  try {
    Path p = path_from_vertices(L, trace);
    validate_path(L, p);
    r.trace_ok = p.vertices() == trace && p.length() == 9;
    r.trace_json = dump_json(path_to_json(p));
  } catch (const Error&) {
  }
  PlanReport pr = plan(L, heptagon_v1(), heptagon_target());
  validate_path(L, pr.path);
  r.plan_len = pr.path.length();
  r.plan_ok = pr.path.start == heptagon_v1() && pr.path.end() == heptagon_target() && r.plan_len <= 13;
  r.plan_json = dump_json(path_to_json(pr.path));
  TargetOrMirror tm = plan_to_target_or_mirror(L, heptagon_v1(), heptagon_target());
  validate_path(L, tm.path);
  r.tom_len = tm.path.length();
  r.tom_ok = tm.reached_mirror && tm.path.end() == mirror(heptagon_target()) && r.tom_len <= 7;
  r.tom_json = dump_json(path_to_json(tm.path));
  return r;
}

Outcome c5() {
  Check c;
  HeptagonRun r = heptagon_run();
  c.require(r.trace_ok, "worked-example trace does not validate");
  c.require(r.plan_ok, "plan length " + std::to_string(r.plan_len));
  c.require(r.tom_ok, "target-or-mirror length " + std::to_string(r.tom_len));
  c.note(fmt("trace valid; plan %zu steps; mirror reached in %zu steps", r.plan_len, r.tom_len));
  return c.result();
}

Outcome c6() {
  Check c;
  const auto t0 = Clock::now();
  std::mt19937_64 rng(6060);
  std::size_t pairs = 0, max_conn = 0, max_disc = 0, nopath = 0;
  for (int i = 0; i < 70; ++i) {
    const bool connected = i < 50;
    Linkage L = random_with_connectivity(rng, 4 + i % 4, connected);
    Graph g = build_graph(L);
    auto comps = components(g);
    std::vector<std::size_t> comp_of(g.vertices().size());
    for (std::size_t k = 0; k < comps.size(); ++k)
      for (std::size_t v : comps[k]) comp_of[v] = k;
    for (std::size_t a = 0; a < g.vertices().size(); ++a)
      for (std::size_t b = 0; b < g.vertices().size(); ++b) {
        ++pairs;
        const Vertex& v = g.vertices()[a];
        const Vertex& w = g.vertices()[b];
        try {
          PlanReport r = plan(L, v, w);
          validate_path(L, r.path);
          c.require(r.path.start == v && r.path.end() == w, "wrong endpoints");
          c.require(comp_of[a] == comp_of[b], "plan crossed components");
          (connected ? max_conn : max_disc) = std::max(connected ? max_conn : max_disc, r.path.length());
        } catch (const NoPathError&) {
          ++nopath;
          c.require(comp_of[a] != comp_of[b], "NoPath inside a component");
        } catch (const Error& e) {
          c.require(false, e.what());
        }
      }
  }
  const double dt = seconds_since(t0);
  c.require(max_conn <= 13, "connected max " + std::to_string(max_conn));
  c.require(max_disc <= 7, "disconnected max " + std::to_string(max_disc));
  c.require(dt < 300, fmt("runtime %.1fs", dt));
  c.note(fmt("%zu pairs; max %zu (connected) / %zu (disconnected); %zu NoPath; %.1fs", pairs, max_conn, max_disc, nopath, dt));
  return c.result();
}

Outcome c7() {
  Check c;
  std::size_t worst = 0, pairs = 0;
  for (int n = 4; n <= 8; ++n) {
    Linkage L = bow(n);
    Graph g = build_graph(L);
    for (std::size_t a = 0; a < g.vertices().size(); ++a) {
      auto d = bfs_distances(g, a);
      for (std::size_t b = 0; b < g.vertices().size(); ++b) {
        ++pairs;
        Path p = plan_bow(L, g.vertices()[a], g.vertices()[b]);
        validate_path(L, p);
        c.require(p.end() == g.vertices()[b], "bow path misses its target");
        c.require(d[b] >= 0 && p.length() >= static_cast<std::size_t>(d[b]), "bow path shorter than BFS");
        worst = std::max(worst, p.length());
      }
    }
  }
  c.require(worst <= 3, "bow max " + std::to_string(worst));
  c.note(fmt("%zu pairs on bows n=4..8, max length %zu", pairs, worst));
  return c.result();
}

Outcome c8() {
  Check c;
  std::size_t vertices = 0, edges = 0;
  double worst_res = 0, worst_end = 0;
  for (const Linkage& L : {pentagon(), hexagon_linkage()}) {
    const double tol = 1e-9 * L.perimeter_double();
    for (const Vertex& v : enumerate_cells(L, 0)) {
      ++vertices;
      Configuration cfg = realize_vertex(L, v);
      c.require(cell_label(cfg) == v, "vertex round trip " + v.to_string());
      worst_res = std::max(worst_res, oracle_length_residual(L, cfg));
    }
    for (const EdgeLabel& e : enumerate_cells(L, 1)) {
      ++edges;
      MotionSegment s = edge_flex(L, e);
      for (std::size_t k = 0; k < s.frames.size(); ++k) {
        worst_res = std::max(worst_res, oracle_length_residual(L, s.frames[k]));
        const double t = s.params[k];
        if (t > 0 && t < 1) {
          Convexification cv = convexify(s.frames[k]);
          c.require(cv.label == e, "edge round trip " + e.to_string());
          c.require(strictly_convex(cv), "not strictly convex at t=" + std::to_string(t));
        }
      }
      auto [a, b] = edge_endpoints(L, e);
      worst_end = std::max({worst_end, max_displacement(s.frames.front(), realize_vertex(L, a)),
                            max_displacement(s.frames.back(), realize_vertex(L, b))});
      c.require(worst_res <= tol, fmt("residual %.3g", worst_res));
      c.require(worst_end <= tol, fmt("endpoint mismatch %.3g", worst_end));
    }
  }
  c.note(fmt("%zu vertices, %zu edges; max residual %.2g, max endpoint gap %.2g", vertices, edges, worst_res, worst_end));
  return c.result();
}

struct MotionRun {
  Outcome outcome;
  std::string json;
};

MotionRun heptagon_motion() {
  Check c;
  Linkage L = heptagon();
  std::mt19937_64 rng(909);
  Configuration s = perturb(L, realize_vertex(L, heptagon_v1()), 1e-3, rng);
  Configuration t = perturb(L, realize_vertex(L, heptagon_target()), 1e-3, rng);
  Motion m = synthesize_motion(L, s, t);
  const double tol = 1e-9 * L.perimeter_double(), delta = 0.05 * L.perimeter_double();
  double res = 0, step = 0, gap = 0;
  const Configuration* prev = nullptr;
  std::vector<EdgeLabel> prov;
  for (const auto& seg : m.segments) {
    if (prev) gap = std::max(gap, max_displacement(*prev, seg.frames.front()));
    for (std::size_t i = 0; i < seg.frames.size(); ++i) {
      res = std::max(res, oracle_length_residual(L, seg.frames[i]));
      if (i) step = std::max(step, max_displacement(seg.frames[i - 1], seg.frames[i]));
    }
    prev = &seg.frames.back();
    if (seg.provenance.kind == Provenance::Kind::Edge) prov.push_back(seg.provenance.label);
  }
  std::vector<EdgeLabel> planned;
  for (const auto& st : m.plan.steps) planned.push_back(st.edge);
  bool valid = true;
  try {
    validate_path(L, m.plan);
  } catch (const Error&) {
    valid = false;
  }
  c.require(res <= tol, fmt("residual %.3g", res));
  c.require(step <= delta, fmt("frame step %.3g", step));
  c.require(gap <= tol, fmt("junction gap %.3g", gap));
  c.require(valid && prov == planned && m.plan.length() <= 13, "edge provenance is not the validated plan");
  c.require(max_displacement(m.segments.front().frames.front(), snap_configuration(L, s)) <= tol, "first frame is not S");
  c.require(max_displacement(m.segments.back().frames.back(), snap_configuration(L, t)) <= tol, "last frame is not T");
  c.note(fmt("%zu segments, %zu frames, %zu plan steps; residual %.2g, step %.3g, gap %.2g", m.segments.size(),
             m.frame_count(), m.plan.length(), res, step, gap));
  return {c.result(), dump_json(motion_to_json(L, m))};
}

Outcome c9() { return heptagon_motion().outcome; }

Outcome c10() {
  Check c;
  HeptagonRun a = heptagon_run(), b = heptagon_run();
  c.require(a.trace_json == b.trace_json && a.plan_json == b.plan_json && a.tom_json == b.tom_json,
            "criterion 5 JSON differs between runs");
  MotionRun m1 = heptagon_motion(), m2 = heptagon_motion();
  c.require(m1.json == m2.json, "criterion 9 motion JSON differs between runs");
  c.note(fmt("path JSON and %zu-byte motion JSON identical across runs", m1.json.size()));
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"pentagon complex", c1},     {"vertex-count formula", c2}, {"quadrilateral graphs", c3},
      {"homology/Euler", c4},       {"heptagon fixture", c5},     {"step-bound sweep", c6},
      {"bow navigation", c7},       {"geometry properties", c8},  {"end-to-end synthesis", c9},
      {"determinism", c10}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first << "): " << o.detail
              << std::endl;
  }
  std::cout << (failures ? "FAILED " : "ALL PASSED ") << criteria.size() - failures << "/" << criteria.size() << std::endl;
  return failures ? 1 : 0;
}
