#include "linknav/json_io.hpp"

#include "linknav/error.hpp"
#include "linknav/navigator.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace linknav {
namespace {

[[noreturn]] void bad(const std::string& what) { throw InputError(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

IndexSet set_from_json(const Json& j) {
  if (!j.is_array()) bad("index set must be an array");
  IndexSet s;
  for (const Json& x : j) {
    if (!x.is_number_integer()) bad("indices must be integers");
    const int i = x.get<int>();
    if (s.contains(i)) bad("repeated index " + std::to_string(i));
    s |= IndexSet::single(i);
  }
  return s;
}

Json set_to_json(IndexSet s) { return Json(s.indices()); }

Provenance::Kind kind_from_string(const std::string& k) {
  if (k == "edge") return Provenance::Kind::Edge;
  if (k == "cell") return Provenance::Kind::Cell;
  if (k == "connector") return Provenance::Kind::Connector;
  bad("unknown provenance kind '" + k + "'");
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v)) return v;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

std::string dump_json(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json linkage_to_json(const Linkage& L) {
  Json lengths = Json::array();
  for (const Rational& l : L.lengths()) lengths.push_back(format_rational(l));
  return Json{{"lengths", lengths}};
}

Linkage linkage_from_json(const Json& j) {
  const Json& arr = field(j, "lengths");
  if (!arr.is_array()) bad("'lengths' must be an array");
  std::vector<Rational> lengths;
  for (const Json& x : arr) {
    if (x.is_string()) lengths.push_back(parse_rational(x.get<std::string>()));
    else if (x.is_number_integer()) lengths.emplace_back(x.get<long long>());
    else bad("lengths must be rational strings or integers");
  }
  return Linkage::create(std::move(lengths));
}

Json label_to_json(const CyclicPartition& p) {
  Json out = Json::array();
  for (IndexSet s : p.parts()) out.push_back(set_to_json(s));
  return out;
}

CyclicPartition label_from_json(const Json& j) {
  if (!j.is_array()) bad("label must be an array of index arrays");
  std::vector<IndexSet> parts;
  for (const Json& part : j) parts.push_back(set_from_json(part));
  return canonicalize(std::move(parts));
}

CyclicPartition parse_label(std::string_view text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') return label_from_json(parse_json(text));
  std::vector<IndexSet> parts;
  std::string part;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, part, '|')) {
    IndexSet s;
    std::stringstream ps(part);
    std::string item;
    while (std::getline(ps, item, ',')) {
      char* end = nullptr;
      const long v = std::strtol(item.c_str(), &end, 10);
      while (end && *end == ' ') ++end;
      if (end == item.c_str() || (end && *end != '\0')) bad("malformed label '" + std::string(text) + "'");
      if (s.contains(static_cast<int>(v))) bad("repeated index in label");
      s |= IndexSet::single(static_cast<int>(v));
    }
    parts.push_back(s);
  }
  return canonicalize(std::move(parts));
}

Json path_to_json(const Path& p) {
  Json steps = Json::array();
  for (const Step& s : p.steps) {
    steps.push_back(Json{{"move",
                          {{"from", s.move.source},
                           {"dir", s.move.direction == Direction::ToNext ? "next" : "prev"},
                           {"set", set_to_json(s.move.shifted)}}},
                         {"edge", label_to_json(s.edge)},
                         {"vertex", label_to_json(s.vertex)}});
  }
  return Json{{"start", label_to_json(p.start)}, {"steps", steps}};
}

Path path_from_json(const Linkage& L, const Json& j) {
  Path p{label_from_json(field(j, "start")), {}};
  Vertex cur = p.start;
  const Json& steps = field(j, "steps");
  if (!steps.is_array()) bad("'steps' must be an array");
  std::size_t index = 0;
  for (const Json& s : steps) {
    ++index;
    const Json& mv = field(s, "move");
    const std::string dir = field(mv, "dir").get<std::string>();
    if (dir != "next" && dir != "prev") bad("move direction must be 'next' or 'prev'");
    Move m{field(mv, "from").get<int>(), dir == "next" ? Direction::ToNext : Direction::ToPrevious,
           set_from_json(field(mv, "set"))};
    MoveResult r;
    try {
      r = apply_move(L, cur, m);
    } catch (const Error& e) {
      throw InvalidStepError(index, e.what());
    }
    if (s.contains("edge") && !(label_from_json(s.at("edge")) == r.edge)) throw InvalidStepError(index, "edge label mismatch");
    if (s.contains("vertex") && !(label_from_json(s.at("vertex")) == r.vertex))
      throw InvalidStepError(index, "vertex label mismatch");
    cur = r.vertex;
    p.steps.push_back(Step{m, std::move(r.edge), std::move(r.vertex)});
  }
  return p;
}

Json configuration_to_json(const Configuration& c) {
  Json out = Json::array();
  for (const Point& p : c.points) out.push_back(Json::array({round12(p.x), round12(p.y)}));
  return out;
}

Configuration configuration_from_json(const Json& j) {
  if (!j.is_array()) bad("configuration must be an array of [x, y] pairs");
  Configuration c;
  for (const Json& p : j) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) bad("each point must be [x, y]");
    c.points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return c;
}

Json motion_to_json(const Linkage& L, const Motion& m) {
  Json segs = Json::array();
  for (const MotionSegment& s : m.segments) {
    Json frames = Json::array();
    for (const Configuration& f : s.frames) frames.push_back(configuration_to_json(f));
    Json params = Json::array();
    for (double t : s.params) params.push_back(round12(t));
    segs.push_back(Json{{"provenance", {{"kind", to_string(s.provenance.kind)}, {"label", label_to_json(s.provenance.label)}}},
                        {"params", params},
                        {"frames", frames}});
  }
  Json out{{"linkage", linkage_to_json(L)}, {"segments", segs}};
  if (m.plan.start.size() > 0) out["plan"] = path_to_json(m.plan);
  return out;
}

std::pair<Linkage, Motion> motion_from_json(const Json& j) {
  Linkage L = linkage_from_json(field(j, "linkage"));
  Motion m;
  const Json& segs = field(j, "segments");
  if (!segs.is_array()) bad("'segments' must be an array");
  for (const Json& s : segs) {
    MotionSegment seg;
    const Json& prov = field(s, "provenance");
    seg.provenance.kind = kind_from_string(field(prov, "kind").get<std::string>());
    seg.provenance.label = label_from_json(field(prov, "label"));
    for (const Json& f : field(s, "frames")) {
      seg.frames.push_back(configuration_from_json(f));
      if (static_cast<int>(seg.frames.back().size()) != L.size()) bad("frame size does not match the linkage");
    }
    if (s.contains("params")) {
      for (const Json& t : s.at("params")) seg.params.push_back(t.get<double>());
      if (seg.params.size() != seg.frames.size()) bad("params and frames differ in length");
    }
    m.segments.push_back(std::move(seg));
  }
  if (j.contains("plan")) m.plan = path_from_json(L, j.at("plan"));
  return {std::move(L), std::move(m)};
}

}  // namespace linknav
