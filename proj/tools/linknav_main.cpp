// linknav: command-line front end for planning and synthesizing linkage motions.

#include "linknav/linknav.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace fs = std::filesystem;
using namespace linknav;

namespace {

enum Exit : int { kOk = 0, kInputError = 2, kNoPath = 3, kNumeric = 4, kBound = 5 };

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError(ErrorCode::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// Records what a run consumed and produced.
struct Manifest {
  std::string command;
  Json options = Json::object();
  Json inputs = Json::array();
  Json outputs = Json::array();

  void input(const std::string& path, const std::string& data) {
    inputs.push_back({{"path", path}, {"sha256", sha256_hex(data)}});
  }
  void output(const std::string& path, const std::string& data) {
    outputs.push_back({{"path", path}, {"sha256", sha256_hex(data)}});
  }
  Json to_json() const {
    return {{"command", command}, {"options", options}, {"inputs", inputs}, {"outputs", outputs}, {"version", kVersion}};
  }
};

Manifest g_manifest;

std::string load_input(const std::string& path) {
  std::string data = read_file(path);
  g_manifest.input(path, data);
  return data;
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError(ErrorCode::InvalidInput, "cannot write " + path);
  f << data;
  g_manifest.output(path, data);
}

// A linkage file is {"lengths": [...]} or whitespace/comma separated rationals.
Linkage load_linkage(const std::string& path) {
  const std::string text = load_input(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return linkage_from_json(parse_json(text));
  std::vector<Rational> lengths;
  std::string token;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream ss(cleaned);
  while (ss >> token) lengths.push_back(parse_rational(token));
  return Linkage::create(std::move(lengths));
}

Json betti_json(const Linkage& L) { return Json(betti_numbers(L)); }

int cmd_check(const std::string& file, bool as_json) {
  Json report;
  try {
    Linkage L = load_linkage(file);
    const auto& order = L.by_length();
    report = {{"n", L.size()},
              {"perimeter", format_rational(L.perimeter())},
              {"longest", L.longest()},
              {"generic", true},
              {"genericity_certified", L.genericity_certified()},
              {"connected", L.is_connected()},
              {"bow", L.is_bow()}};
    if (L.size() >= 3) report["second_third_longest"] = {order[1], order[2]};
  } catch (const NonGenericError& e) {
    report = {{"generic", false}, {"witness", e.witness().indices()}, {"error", e.what()}};
    if (as_json) std::cout << dump_json(report);
    else std::cout << "NonGeneric: witness " << e.witness().to_string() << "\n";
    return kInputError;
  }
  if (as_json) {
    std::cout << dump_json(report);
  } else {
    std::cout << "n: " << report["n"] << "\nperimeter: " << report["perimeter"].get<std::string>()
              << "\nlongest: " << report["longest"] << "\ngeneric: OK"
              << (report["genericity_certified"].get<bool>() ? "" : " (randomized certificate)")
              << "\nconnected: " << (report["connected"].get<bool>() ? "yes" : "no")
              << "\nbow: " << (report["bow"].get<bool>() ? "yes" : "no") << "\n";
  }
  return kOk;
}

EnumerationLimits limits_with(bool force) {
  EnumerationLimits lim = EnumerationLimits::from_environment();
  lim.force = force;
  return lim;
}

Json graph_stats(const Linkage& L, const Graph& g, const EnumerationLimits& lim) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) ++hist[g.degree(v)];
  Json h = Json::object();
  for (auto [d, c] : hist) h[std::to_string(d)] = c;
  return {{"n", L.size()},
          {"vertex_count", g.vertices().size()},
          {"edge_count", g.edges().size()},
          {"predicted_vertex_count", predicted_vertex_count(L)},
          {"components", components(g).size()},
          {"degree_histogram", h},
          {"betti", betti_json(L)},
          {"euler_census", euler_characteristic(L, lim)},
          {"euler_betti", euler_from_betti(L)},
          {"diameter", diameter(g)}};
}

std::string dot_label(const CyclicPartition& p) { return "\"" + p.to_string() + "\""; }

int cmd_graph(const std::string& file, bool stats, bool dot, bool census, bool force, const std::string& out) {
  Linkage L = load_linkage(file);
  const EnumerationLimits lim = limits_with(force);
  if (!stats && !dot && !census) stats = true;
  std::string text;
  if (census) {
    CellCensus c = cell_census(L, false, lim);
    text += dump_json(Json{{"n", L.size()},
                           {"cells", c.counts},
                           {"predicted_vertex_count", predicted_vertex_count(L)},
                           {"euler_census", euler_characteristic(L, lim)},
                           {"euler_betti", euler_from_betti(L)}});
  }
  if (stats || dot) {
    Graph g = build_graph(L, lim);
    if (stats) text += dump_json(graph_stats(L, g, lim));
    if (dot) {
      text += "graph linknav {\n";
      for (const Vertex& v : g.vertices()) text += "  " + dot_label(v) + ";\n";
      for (const auto& e : g.edges())
        text += "  " + dot_label(g.vertices()[e.a]) + " -- " + dot_label(g.vertices()[e.b]) + " [label=" +
                dot_label(e.label) + "];\n";
      text += "}\n";
    }
  }
  write_output(out, text);
  return kOk;
}

std::string move_line(const Step& s, const Vertex& from) {
  std::ostringstream ss;
  ss << from.to_string() << " --shift " << s.move.shifted.to_string() << " from part " << s.move.source << " to "
     << (s.move.direction == Direction::ToNext ? "next" : "previous") << " via " << s.edge.to_string() << "--> "
     << s.vertex.to_string();
  return ss.str();
}

int cmd_plan(const std::string& file, const std::string& from, const std::string& to, const std::string& out) {
  Linkage L = load_linkage(file);
  const Vertex v = parse_label(from), w = parse_label(to);
  PlanReport r = plan(L, v, w);
  Json j = path_to_json(r.path);
  j["reached_mirror"] = r.reached_mirror;
  j["length"] = r.path.length();
  Json phases = Json::array();
  for (const auto& p : r.phases) phases.push_back({{"name", p.name}, {"steps", p.steps}});
  j["phases"] = phases;
  j["relabeling"] = r.relabeling.new_to_old();
  write_output(out, dump_json(j));
  std::ostream& trace = (out.empty() || out == "-") ? std::cerr : std::cout;
  Vertex cur = r.path.start;
  for (const Step& s : r.path.steps) {
    trace << move_line(s, cur) << "\n";
    cur = s.vertex;
  }
  trace << "steps: " << r.path.length() << "\n";
  return kOk;
}

Configuration load_config(const std::string& path) { return configuration_from_json(parse_json(load_input(path))); }

int cmd_synth(const std::string& file, const std::string& from, const std::string& to, int samples,
              const std::string& out) {
  Linkage L = load_linkage(file);
  const Configuration s = load_config(from), t = load_config(to);
  FlexOptions opts;
  opts.samples = samples;
  Motion m = synthesize_motion(L, s, t, opts);
  const MotionStats st = motion_stats(L, m);
  write_output(out, dump_json(motion_to_json(L, m)));
  std::ostream& summary = (out.empty() || out == "-") ? std::cerr : std::cout;
  summary << "segments: " << st.segments << "\nframes: " << st.frames << "\nplan steps: " << m.plan.length()
          << "\nmax length residual: " << st.max_length_residual << "\nmax frame step: " << st.max_step
          << "\nmax junction gap: " << st.max_junction_gap << "\n";
  return kOk;
}

int cmd_render(const std::string& file, const std::string& dir, double fps, bool animated) {
  auto [L, m] = motion_from_json(parse_json(load_input(file)));
  RenderResult r = render_motion(m, dir, fps, animated);
  for (const auto& p : r.files) g_manifest.output(p.string(), read_file(p.string()));
  std::cout << "wrote " << r.files.size() << " files to " << dir << "\n";
  return kOk;
}

int cmd_verify(const std::string& file, std::size_t sample, std::uint64_t seed, bool force, const std::string& out) {
  Linkage L = load_linkage(file);
  Graph g = build_graph(L, limits_with(force));
  const std::size_t nv = g.vertices().size();
  const bool connected = L.is_connected();
  const bool bow = L.is_bow();
  const std::size_t bound = connected ? kConnectedPlanBound : kDisconnectedPlanBound;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (sample == 0) {
    for (std::size_t a = 0; a < nv; ++a)
      for (std::size_t b = 0; b < nv; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
    for (std::size_t k = 0; k < sample; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::vector<int>> dist(nv);

  std::size_t planned = 0, no_path = 0, violations = 0, max_plan = 0, max_bow = 0;
  int max_bfs = 0;
  Json failures = Json::array();
  auto fail = [&](std::size_t a, std::size_t b, const std::string& why) {
    ++violations;
    if (failures.size() < 20)
      failures.push_back({{"from", label_to_json(g.vertices()[a])}, {"to", label_to_json(g.vertices()[b])}, {"reason", why}});
  };
  for (auto [a, b] : pairs) {
    if (dist[a].empty()) dist[a] = bfs_distances(g, a);
    const int d = dist[a][b];
    const Vertex& v = g.vertices()[a];
    const Vertex& w = g.vertices()[b];
    try {
      PlanReport r = plan(L, v, w);
      ++planned;
      validate_path(L, r.path);
      if (!(r.path.start == v) || !(r.path.end() == w)) fail(a, b, "wrong endpoints");
      if (d < 0) fail(a, b, "planned across components");
      else if (r.path.length() < static_cast<std::size_t>(d)) fail(a, b, "shorter than BFS distance");
      if (r.path.length() > bound) fail(a, b, "length " + std::to_string(r.path.length()));
      max_plan = std::max(max_plan, r.path.length());
      max_bfs = std::max(max_bfs, d);
    } catch (const NoPathError&) {
      ++no_path;
      if (d >= 0) fail(a, b, "NoPath within a component");
    } catch (const Error& e) {
      fail(a, b, e.what());
    }
    if (bow) {
      try {
        Path p = plan_bow(L, v, w);
        validate_path(L, p);
        max_bow = std::max(max_bow, p.length());
        if (p.length() > kBowBound || (d >= 0 && p.length() < static_cast<std::size_t>(d)) || !(p.end() == w))
          fail(a, b, "bow path of length " + std::to_string(p.length()));
      } catch (const Error& e) {
        fail(a, b, std::string("bow: ") + e.what());
      }
    }
  }
  Json report = {{"n", L.size()},
                 {"vertex_count", nv},
                 {"connected", connected},
                 {"bow", bow},
                 {"pairs", pairs.size()},
                 {"planned", planned},
                 {"no_path", no_path},
                 {"bound", bound},
                 {"max_plan_length", max_plan},
                 {"max_bfs_distance", max_bfs},
                 {"violations", violations},
                 {"failures", failures}};
  if (bow) report["max_bow_length"] = max_bow;
  write_output(out, dump_json(report));
  return violations ? kBound : kOk;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const BoundViolation*>(&e)) return kBound;
  if (dynamic_cast<const NumericError*>(&e)) return kNumeric;
  if (dynamic_cast<const PlanningError*>(&e)) return kNoPath;
  return kInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plan and synthesize motions of planar polygonal linkages"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string manifest_path;
  app.add_option("--manifest", manifest_path, "Write a run manifest (input/output hashes) to this file");

  std::string file, out, from, to, dir;
  bool as_json = false, stats = false, dot = false, census = false, force = false, animated = false;
  int samples = 64;
  double fps = 24.0;
  std::size_t sample = 0;
  std::uint64_t seed = 1;

  auto* check = app.add_subcommand("check", "Validate a linkage and report genericity and connectivity");
  check->add_option("linkage", file, "Linkage file")->required();
  check->add_flag("--json", as_json, "Emit a JSON report");

  auto* graph = app.add_subcommand("graph", "Enumerate the cell complex and its vertex-edge graph");
  graph->add_option("linkage", file, "Linkage file")->required();
  graph->add_flag("--stats", stats, "Graph statistics as JSON (default)");
  graph->add_flag("--dot", dot, "Graph in DOT format");
  graph->add_flag("--census", census, "Cell counts per dimension");
  graph->add_flag("--force", force, "Lift the enumeration size cap");
  graph->add_option("-o,--out", out, "Output file (default stdout)");

  auto* planc = app.add_subcommand("plan", "Plan a path between two vertices");
  planc->add_option("linkage", file, "Linkage file")->required();
  planc->add_option("--from", from, "Start vertex, e.g. 3,6|1,4,7|2,5")->required();
  planc->add_option("--to", to, "Target vertex")->required();
  planc->add_option("-o,--out", out, "Path JSON output (default stdout)");

  auto* synth = app.add_subcommand("synth", "Synthesize a motion between two configurations");
  synth->add_option("linkage", file, "Linkage file")->required();
  synth->add_option("--from-config", from, "Start configuration JSON")->required();
  synth->add_option("--to-config", to, "Target configuration JSON")->required();
  synth->add_option("--samples", samples, "Samples per edge flex")->check(CLI::PositiveNumber);
  synth->add_option("-o,--out", out, "Motion JSON output (default stdout)");

  auto* render = app.add_subcommand("render", "Render a motion as SVG frames");
  render->add_option("motion", file, "Motion JSON")->required();
  render->add_option("-o,--out", dir, "Output directory")->required();
  render->add_option("--fps", fps, "Frames per second of the animation")->check(CLI::PositiveNumber);
  render->add_flag("--animated", animated, "Also write an animated motion.svg");

  auto* verify = app.add_subcommand("verify", "Check the planner's step bounds against BFS on the full graph");
  verify->add_option("linkage", file, "Linkage file")->required();
  verify->add_option("--sample", sample, "Check this many random pairs instead of all");
  verify->add_option("--seed", seed, "Seed for --sample");
  verify->add_flag("--force", force, "Lift the enumeration size cap");
  verify->add_option("-o,--out", out, "Report output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  for (int i = 1; i < argc; ++i) g_manifest.command += (i > 1 ? " " : "") + std::string(argv[i]);
  int code = kOk;
  try {
    if (*check) code = cmd_check(file, as_json);
    else if (*graph) code = cmd_graph(file, stats, dot, census, force, out);
    else if (*planc) code = cmd_plan(file, from, to, out);
    else if (*synth) code = cmd_synth(file, from, to, samples, out);
    else if (*render) code = cmd_render(file, dir, fps, animated);
    else if (*verify) code = cmd_verify(file, sample, seed, force, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kInputError;
  }

  if (!manifest_path.empty()) {
    for (const CLI::App* sub : app.get_subcommands()) {
      for (const CLI::Option* opt : sub->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        g_manifest.options[opt->get_name()] = opt->as<std::string>();
      }
    }
    g_manifest.options["exit_code"] = code;
    std::ofstream f(manifest_path, std::ios::binary);
    f << dump_json(g_manifest.to_json());
  }
  return code;
}
