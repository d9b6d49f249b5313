#include "linknav/navigator.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <numeric>

namespace linknav {
namespace {

// Navigation works on vertex sequences; Moves are recovered at the end.
using Route = std::vector<Vertex>;

Vertex tri(IndexSet a, IndexSet b, IndexSet c, int n) { return canonical_unchecked({a, b, c}, n); }

bool adjacent(const Linkage& L, const Vertex& u, const Vertex& w) { return move_between(L, u, w).has_value(); }

bool valid_route(const Linkage& L, const Route& r) {
  for (std::size_t i = 1; i < r.size(); ++i)
    if (!adjacent(L, r[i - 1], r[i])) return false;
  return true;
}

// Moves `s` (a proper subset of one part) into the part at position `dest`.
Vertex shift_to(const Linkage& L, const Vertex& v, IndexSet s, int dest) {
  const int src = v.part_of(s.lowest());
  const Direction d = dest == (src + 1) % 3 ? Direction::ToNext : Direction::ToPrevious;
  return apply_move(L, v, Move{src, d, s}).vertex;
}

void push_distinct(Route& r, Vertex v) {
  if (r.empty() || !(r.back() == v)) r.push_back(std::move(v));
}

// Adds elements of `pool` to `base` in ascending order while the result stays short.
IndexSet grow_short(const Linkage& L, IndexSet base, IndexSet pool) {
  pool.for_each([&](int x) {
    if (!base.contains(x) && L.is_short(base | IndexSet::single(x))) base |= IndexSet::single(x);
  });
  return base;
}

bool locally_maximal(const Linkage& L, IndexSet c) {
  const IndexSet rest = L.all() - c;
  bool ok = true;
  rest.for_each([&](int x) { ok = ok && !L.is_short(c | IndexSet::single(x)); });
  return ok;
}

// ---- inside-out cores -------------------------------------------------------

// Three steps when some part Z and element x of a side X (|X| >= 2) have Z∪{x}
// long and Y∪{x} short, Y being the other side.
std::optional<Route> quadrilateral_core(const Linkage& L, const Vertex& w) {
  const int n = w.n();
  for (long ci = 0; ci < 3; ++ci) {
    const IndexSet z = w.at_cyclic(ci), next = w.at_cyclic(ci + 1), prev = w.at_cyclic(ci + 2);
    for (int toward_next = 0; toward_next < 2; ++toward_next) {
      const IndexSet x_side = toward_next ? next : prev;
      const IndexSet y_side = toward_next ? prev : next;
      if (x_side.size() < 2) continue;
      for (int x : x_side.indices()) {
        const IndexSet xs = IndexSet::single(x);
        if (L.is_short(z | xs) || !L.is_short(y_side | xs)) continue;
        const IndexSet x_rest = x_side - xs;
        Route r;
        if (!toward_next) {
          r = {tri(x_side, z, y_side, n), tri(xs, z, y_side | x_rest, n), tri(xs | y_side, z, x_rest, n),
               tri(y_side, z, x_side, n)};
        } else {
          r = {tri(y_side, z, x_side, n), tri(y_side | x_rest, z, xs, n), tri(x_rest, z, xs | y_side, n),
               tri(x_side, z, y_side, n)};
        }
        if (r.front() == w && r.back() == mirror(w) && valid_route(L, r)) return r;
      }
    }
  }
  return std::nullopt;
}

// Four steps around center part C with sides A (before C) and B (after C),
// both of size >= 2: needs p in B and q in A with C∪{p}, C∪{q} long and {p,q} short.
std::optional<Route> pentagon_core(const Linkage& L, const Vertex& w, int center) {
  const int n = w.n();
  const IndexSet c = w.at_cyclic(center), b = w.at_cyclic(center + 1), a = w.at_cyclic(center + 2);
  if (a.size() < 2 || b.size() < 2) return std::nullopt;
  for (int p : b.indices()) {
    const IndexSet ps = IndexSet::single(p);
    if (L.is_short(c | ps)) continue;
    for (int q : a.indices()) {
      const IndexSet qs = IndexSet::single(q);
      if (L.is_short(c | qs) || !L.is_short(ps | qs)) continue;
      Route r{tri(a, c, b, n), tri(a | (b - ps), c, ps, n), tri((a - qs) | (b - ps), c, ps | qs, n),
              tri((a - qs) | b, c, qs, n), tri(b, c, a, n)};
      if (valid_route(L, r)) return r;
    }
  }
  return std::nullopt;
}

// Navigation among vertices that share the part C, where C is locally maximal
// (every proper subset of the complement R is short). At most 3 steps via a
// hub (C,{x},R∖x) or (C,R∖y,{y}).
std::optional<Route> bow_route(const Linkage& L, IndexSet c, const Vertex& u, const Vertex& v) {
  const int n = u.n();
  if (u == v) return Route{u};
  if (adjacent(L, u, v)) return Route{u, v};
  const int cu = u.part_of(c.lowest()), cv = v.part_of(c.lowest());
  if (cu < 0 || cv < 0 || !(u[static_cast<std::size_t>(cu)] == c) || !(v[static_cast<std::size_t>(cv)] == c)) return std::nullopt;
  const IndexSet a = u.at_cyclic(cu + 1), d = u.at_cyclic(cu + 2);
  const IndexSet ta = v.at_cyclic(cv + 1), td = v.at_cyclic(cv + 2);
  auto mk = [&](IndexSet x, IndexSet y) { return tri(c, x, y, n); };

  std::optional<Route> best;
  auto offer = [&](Route route) {
    if (valid_route(L, route) && route.back() == v && (!best || route.size() < best->size())) best = std::move(route);
  };
  ta.for_each([&](int x) {
    const IndexSet xs = IndexSet::single(x);
    Route route{u};
    if (!(a == xs)) {
      if (a.contains(x)) push_distinct(route, mk(xs, d | (a - xs)));
      else if (!(d == xs)) {
        push_distinct(route, mk(a | xs, d - xs));
        push_distinct(route, mk(xs, (d - xs) | a));
      } else {
        return;
      }
    }
    push_distinct(route, mk(ta, td));
    offer(std::move(route));
  });
  td.for_each([&](int y) {
    const IndexSet ys = IndexSet::single(y);
    Route route{u};
    if (!(d == ys)) {
      if (d.contains(y)) push_distinct(route, mk(a | (d - ys), ys));
      else if (!(a == ys)) {
        push_distinct(route, mk(a - ys, d | ys));
        push_distinct(route, mk((a - ys) | d, ys));
      } else {
        return;
      }
    }
    push_distinct(route, mk(ta, td));
    offer(std::move(route));
  });
  return best;
}

// Pulls the pieces of C lying in the two other parts into the part holding
// the longest edge, next part first. Fails if a whole part would be pulled.
std::optional<Route> pull_into(const Linkage& L, const Vertex& u, IndexSet c) {
  const int b = L.longest();
  Route route{u};
  for (int k = 1; k <= 2; ++k) {
    const Vertex& cur = route.back();
    const int home = cur.part_of(b);
    const IndexSet part = cur.at_cyclic(home + k);
    const IndexSet s = part & c;
    if (s.empty()) continue;
    if (s == part || !L.is_short(cur[static_cast<std::size_t>(home)] | s)) return std::nullopt;
    route.push_back(shift_to(L, cur, s, home));
  }
  const Vertex& last = route.back();
  if (!(last[static_cast<std::size_t>(last.part_of(b))] == c)) return std::nullopt;
  return route;
}

// Moves from w to mirror(w) along `pre` (w -> w'), a core (w' -> mirror(w'))
// and the mirrored preparation undone.
std::optional<Route> wrap_core(const Linkage& L, const Route& pre, const std::optional<Route>& core) {
  if (!core) return std::nullopt;
  Route r = pre;
  r.insert(r.end(), core->begin() + 1, core->end());
  for (std::size_t i = pre.size() - 1; i-- > 0;) r.push_back(mirror(pre[i]));
  if (!valid_route(L, r)) return std::nullopt;
  return r;
}

Route inside_out_route(const Linkage& L, const Vertex& w) {
  std::optional<Route> best;
  auto offer = [&](std::optional<Route> r) {
    if (r && r->back() == mirror(w) && (!best || r->size() < best->size())) best = std::move(r);
  };
  offer(quadrilateral_core(L, w));

  // Preparation: grow the part J holding the longest edge by maximal shifts
  // from the next side, the previous side, or both (next first).
  const int b = L.longest();
  const int ji = w.part_of(b);
  const IndexSet j = w.at_cyclic(ji);
  for (int variant = 0; variant < 3; ++variant) {
    Route pre{w};
    IndexSet c = j;
    for (int k : {1, 2}) {
      if (variant == 0 && k == 2) continue;
      if (variant == 1 && k == 1) continue;
      const Vertex& cur = pre.back();
      const int home = cur.part_of(b);
      const IndexSet side = cur.at_cyclic(home + k);
      const IndexSet grown = grow_short(L, c, side);
      if (grown == c) continue;
      pre.push_back(shift_to(L, cur, grown - c, home));
      c = grown;
    }
    if (variant == 2 && pre.size() <= 2) continue;  // same as a one-sided variant
    const Vertex& w2 = pre.back();
    const int center = w2.part_of(b);
    offer(wrap_core(L, pre, quadrilateral_core(L, w2)));
    offer(wrap_core(L, pre, pentagon_core(L, w2, center)));
    if (locally_maximal(L, c)) offer(wrap_core(L, pre, bow_route(L, c, w2, mirror(w2))));
  }
  if (!best)
    throw BoundViolation(ErrorCode::NormalizationFailed, "no inside-out route found for " + w.to_string());
  return *best;
}

// ---- target or mirror -------------------------------------------------------

struct PhaseOne {
  Route route;
  bool mirror = false;
  std::size_t interval_index = 0;  // position of the interval vertex X
  std::vector<PhaseCount> phases;
};

// Assumes the relabeled frame: index 1 is the longest edge and the target is
// in cyclic interval form.
PhaseOne phase_one(const Linkage& L, const Vertex& v, const Vertex& target) {
  const int n = L.size();
  const IndexSet one{1};
  PhaseOne out;
  out.route.push_back(v);
  const Vertex target_mirror = mirror(target);
  if (v == target || v == target_mirror) {
    out.mirror = !(v == target);
    return out;
  }
  auto mark = [&](const char* name, std::size_t before) {
    out.phases.push_back({name, out.route.size() - before});
  };

  // Isolate index 1: as much of its part as possible goes to the next part
  // in one move, the rest to the previous part.
  std::size_t before = out.route.size();
  {
    const Vertex cur = out.route.back();
    const IndexSet rest = cur[0] - one;
    if (!rest.empty()) {
      IndexSet s;
      rest.for_each([&](int x) {
        if (L.is_short(cur[1] | s | IndexSet::single(x))) s |= IndexSet::single(x);
      });
      if (!s.empty()) out.route.push_back(shift_to(L, cur, s, 1));
      const IndexSet left = out.route.back()[0] - one;
      if (!left.empty()) out.route.push_back(shift_to(L, out.route.back(), left, 2));
    }
  }
  mark("isolate", before);

  // Freeze runs of consecutive indices by side and find the longest short
  // prefix {1} ∪ blocks[0..kb).
  const Vertex mid = out.route.back();
  struct Block {
    int side;
    IndexSet set;
  };
  std::vector<Block> blocks;
  for (int x = 2; x <= n; ++x) {
    const int side = mid[1].contains(x) ? 1 : 2;
    if (!blocks.empty() && blocks.back().side == side) blocks.back().set |= IndexSet::single(x);
    else blocks.push_back({side, IndexSet::single(x)});
  }
  std::size_t kb = 0;
  IndexSet acc = one;
  while (kb < blocks.size() && L.is_short(acc | blocks[kb].set)) acc |= blocks[kb++].set;
  // Keep both sides nonempty: the prefix may not swallow a whole side.
  if (kb + 1 >= blocks.size()) kb = blocks.size() - 2;

  before = out.route.size();
  for (int side : {blocks[0].side, 3 - blocks[0].side}) {
    IndexSet s;
    for (std::size_t i = 0; i < kb; ++i)
      if (blocks[i].side == side) s |= blocks[i].set;
    if (!s.empty()) out.route.push_back(shift_to(L, out.route.back(), s, 0));
  }
  mark("pull", before);

  before = out.route.size();
  {
    const int side = blocks[kb].side;
    IndexSet s;
    for (std::size_t i = kb + 1; i < blocks.size(); ++i)
      if (blocks[i].side == side) s |= blocks[i].set;
    if (!s.empty()) out.route.push_back(shift_to(L, out.route.back(), s, 3 - side));
  }
  mark("shift", before);

  out.interval_index = out.route.size() - 1;
  const Vertex x = out.route.back();
  before = out.route.size();
  const std::pair<const Vertex*, bool> goals[] = {{&target, false}, {&target_mirror, true}};
  for (auto [g, flag] : goals) {
    if (x == *g) {
      out.mirror = flag;
      mark("final", before);
      return out;
    }
  }
  for (auto [g, flag] : goals) {
    if (adjacent(L, x, *g)) {
      out.route.push_back(*g);
      out.mirror = flag;
      mark("final", before);
      return out;
    }
  }
  // Two steps: an intermediate keeping one part of X and one of the goal in place.
  for (auto [g, flag] : goals) {
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        if (a == b) continue;
        const std::size_t c = 3 - a - b;
        std::vector<IndexSet> y(3);
        y[a] = x[a];
        y[b] = (*g)[b];
        if (y[a].intersects(y[b])) continue;
        y[c] = L.all() - (y[a] | y[b]);
        if (y[c].empty() || !L.is_short(y[0]) || !L.is_short(y[1]) || !L.is_short(y[2])) continue;
        Vertex mid_vertex = canonical_unchecked(std::move(y), n);
        if (adjacent(L, x, mid_vertex) && adjacent(L, mid_vertex, *g)) {
          out.route.push_back(std::move(mid_vertex));
          out.route.push_back(*g);
          out.mirror = flag;
          mark("final", before);
          return out;
        }
      }
    }
  }
  throw BoundViolation(ErrorCode::InternalBoundViolation,
                       "interval vertex " + x.to_string() + " is not within 2 steps of " + target.to_string() +
                           " or its mirror");
}

// From the interval vertex X, freeze C = maximal short extension of the two
// parts holding index 1, and cross the resulting bow.
std::optional<Route> hub_route(const Linkage& L, const Vertex& x, const Vertex& target) {
  const int b = L.longest();
  const IndexSet base = x[static_cast<std::size_t>(x.part_of(b))] | target[static_cast<std::size_t>(target.part_of(b))];
  if (!L.is_short(base)) return std::nullopt;
  const IndexSet c = grow_short(L, base, L.all());
  auto up = pull_into(L, x, c);
  auto down = pull_into(L, target, c);
  if (!up || !down) return std::nullopt;
  auto across = bow_route(L, c, up->back(), down->back());
  if (!across) return std::nullopt;
  Route r = *up;
  r.insert(r.end(), across->begin() + 1, across->end());
  for (std::size_t i = down->size() - 1; i-- > 0;) r.push_back((*down)[i]);
  if (!valid_route(L, r)) return std::nullopt;
  return r;
}

Route revert_route(const Relabeling& sigma, const Route& r) {
  Route out;
  out.reserve(r.size());
  for (const Vertex& v : r) out.push_back(sigma.revert(v));
  return out;
}

void require_vertex(const Linkage& L, const Vertex& v) { require_admissible(L, v, 3, ErrorCode::InadmissibleVertex); }

}  // namespace

// ---- Relabeling ---------------------------------------------------------------

Relabeling::Relabeling(std::vector<int> new_to_old) : new_to_old_(std::move(new_to_old)) {
  old_to_new_.assign(new_to_old_.size(), 0);
  for (std::size_t i = 0; i < new_to_old_.size(); ++i) {
    const int o = new_to_old_[i];
    if (o < 1 || o > static_cast<int>(new_to_old_.size()) || old_to_new_[static_cast<std::size_t>(o - 1)] != 0)
      throw InputError(ErrorCode::InvalidInput, "relabeling is not a permutation");
    old_to_new_[static_cast<std::size_t>(o - 1)] = static_cast<int>(i + 1);
  }
}

Relabeling Relabeling::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 1);
  return Relabeling(std::move(id));
}

Relabeling Relabeling::for_target(const Linkage& L, const Vertex& target) {
  const int b = L.longest();
  const long pos = target.part_of(b);
  std::vector<int> order{b};
  for (int x : (target.at_cyclic(pos) - IndexSet::single(b)).indices()) order.push_back(x);
  for (int x : target.at_cyclic(pos + 1).indices()) order.push_back(x);
  for (int x : target.at_cyclic(pos + 2).indices()) order.push_back(x);
  return Relabeling(std::move(order));
}

bool Relabeling::is_identity() const noexcept {
  for (std::size_t i = 0; i < new_to_old_.size(); ++i)
    if (new_to_old_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

CyclicPartition Relabeling::apply(const CyclicPartition& p) const {
  std::vector<IndexSet> parts;
  for (IndexSet s : p.parts()) {
    IndexSet m;
    s.for_each([&](int x) { m |= IndexSet::single(old_to_new_.at(static_cast<std::size_t>(x - 1))); });
    parts.push_back(m);
  }
  return canonical_unchecked(std::move(parts), p.n());
}

CyclicPartition Relabeling::revert(const CyclicPartition& p) const {
  std::vector<IndexSet> parts;
  for (IndexSet s : p.parts()) {
    IndexSet m;
    s.for_each([&](int x) { m |= IndexSet::single(new_to_old_.at(static_cast<std::size_t>(x - 1))); });
    parts.push_back(m);
  }
  return canonical_unchecked(std::move(parts), p.n());
}

// ---- public operations ----------------------------------------------------------

void validate_path(const Linkage& L, const Path& p) {
  if (!p.start.is_admissible(L) || p.start.size() != 3)
    throw InvalidStepError(0, "start " + p.start.to_string() + " is not an admissible vertex");
  Vertex cur = p.start;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const Step& s = p.steps[i];
    MoveResult r;
    try {
      r = apply_move(L, cur, s.move);
    } catch (const Error& e) {
      throw InvalidStepError(i + 1, e.what());
    }
    if (!(r.edge == s.edge))
      throw InvalidStepError(i + 1, "edge " + s.edge.to_string() + " should be " + r.edge.to_string());
    if (!(r.vertex == s.vertex))
      throw InvalidStepError(i + 1, "vertex " + s.vertex.to_string() + " should be " + r.vertex.to_string());
    cur = r.vertex;
  }
}

Path plan_bow(const Linkage& L, const Vertex& v, const Vertex& target) {
  require_vertex(L, v);
  require_vertex(L, target);
  if (!L.is_bow()) throw PlanningError(ErrorCode::NotABow, "every pair with the longest edge must be long");
  if (v == target) return Path{v, {}};
  const int n = L.size();
  if (n == 3) throw NoPathError(orientation_class(L, v), orientation_class(L, target), "the two triangles are not connected");
  const IndexSet c = IndexSet::single(L.longest());
  const int cu = v.part_of(L.longest()), ct = target.part_of(L.longest());
  const IndexSet a = v.at_cyclic(cu + 1), d = v.at_cyclic(cu + 2);
  const IndexSet t1 = target.at_cyclic(ct + 1), t2 = target.at_cyclic(ct + 2);
  auto mk = [&](IndexSet x, IndexSet y) { return tri(c, x, y, n); };

  // Reference order: bring x = min(first target part) into the first part, dump
  // the rest of that part into the second, pull the target's first part back.
  Route r{v};
  const int x = t1.lowest();
  const IndexSet xs = IndexSet::single(x);
  if (a.contains(x)) {
    if (!(a == xs)) push_distinct(r, mk(xs, d | (a - xs)));
  } else if (!(d == xs)) {
    push_distinct(r, mk(a | xs, d - xs));
    push_distinct(r, mk(xs, (d - xs) | a));
  } else {
    // x alone in the second part cannot move; use the hub (C, R∖y, {y}).
    const int y = t2.lowest();
    const IndexSet ys = IndexSet::single(y);
    if (d.contains(y)) {
      push_distinct(r, mk(a | (d - ys), ys));
    } else if (!(a == ys)) {
      push_distinct(r, mk(a - ys, d | ys));
      push_distinct(r, mk((a - ys) | d, ys));
    }
  }
  push_distinct(r, target);
  Path p = path_from_vertices(L, r);
  validate_path(L, p);
  if (p.length() > kBowBound)
    throw BoundViolation(ErrorCode::InternalBoundViolation, "bow path of length " + std::to_string(p.length()));
  return p;
}

Path turn_inside_out(const Linkage& L, const Vertex& v) {
  require_vertex(L, v);
  if (!L.is_connected())
    throw PlanningError(ErrorCode::Disconnected, v.to_string() + " and its mirror lie in different components");
  Path p = path_from_vertices(L, inside_out_route(L, v));
  validate_path(L, p);
  if (p.length() > kInsideOutBound)
    throw BoundViolation(ErrorCode::NormalizationFailed,
                         "inside-out path of length " + std::to_string(p.length()) + " for " + v.to_string());
  return p;
}

TargetOrMirror plan_to_target_or_mirror(const Linkage& L, const Vertex& v, const Vertex& target) {
  require_vertex(L, v);
  require_vertex(L, target);
  TargetOrMirror out;
  out.relabeling = Relabeling::for_target(L, target);
  const Linkage L2 = out.relabeling.apply(L);
  PhaseOne one = phase_one(L2, out.relabeling.apply(v), out.relabeling.apply(target));
  out.path = path_from_vertices(L, revert_route(out.relabeling, one.route));
  out.reached_mirror = one.mirror;
  out.phases = std::move(one.phases);
  validate_path(L, out.path);
  if (out.path.length() > kTargetOrMirrorBound)
    throw BoundViolation(ErrorCode::InternalBoundViolation,
                         "target-or-mirror path of length " + std::to_string(out.path.length()));
  return out;
}

PlanReport plan(const Linkage& L, const Vertex& v, const Vertex& target) {
  require_vertex(L, v);
  require_vertex(L, target);
  PlanReport report;
  report.relabeling = Relabeling::for_target(L, target);
  const bool connected = L.is_connected();
  if (!connected) {
    const auto from = orientation_class(L, v), to = orientation_class(L, target);
    if (from != to)
      throw NoPathError(from, to, v.to_string() + " and " + target.to_string() + " lie in different components");
  }
  if (v == target) {
    report.path = Path{v, {}};
    return report;
  }
  const Linkage L2 = report.relabeling.apply(L);
  const Vertex v2 = report.relabeling.apply(v), t2 = report.relabeling.apply(target);
  PhaseOne one = phase_one(L2, v2, t2);
  Route route = one.route;
  report.phases = one.phases;
  if (one.mirror) {
    report.reached_mirror = true;
    if (!connected)
      throw BoundViolation(ErrorCode::InternalBoundViolation, "mirror reached in a disconnected moduli space");
    // The literal composition: turn the mirror inside out.
    std::optional<Route> literal;
    try {
      Route tail = inside_out_route(L2, route.back());
      literal = route;
      literal->insert(literal->end(), tail.begin() + 1, tail.end());
    } catch (const BoundViolation&) {
    }
    // Alternative: leave phase one at the interval vertex and cross a bow.
    std::optional<Route> fused;
    if (auto tail = hub_route(L2, one.route[one.interval_index], t2)) {
      fused = Route(one.route.begin(), one.route.begin() + static_cast<long>(one.interval_index));
      fused->insert(fused->end(), tail->begin(), tail->end());
    }
    if (literal && (!fused || literal->size() <= fused->size())) {
      report.phases.push_back({"inside_out", literal->size() - route.size()});
      route = std::move(*literal);
    } else if (fused) {
      const std::size_t kept = one.interval_index + 1;
      report.phases.clear();
      for (const PhaseCount& p : one.phases) {
        if (p.name == "final") continue;
        report.phases.push_back(p);
      }
      report.phases.push_back({"bow_crossing", fused->size() - kept});
      route = std::move(*fused);
    } else {
      throw BoundViolation(ErrorCode::InternalBoundViolation, "no route from the mirror back to the target");
    }
  }
  report.path = path_from_vertices(L, revert_route(report.relabeling, route));
  validate_path(L, report.path);
  if (!(report.path.end() == target))
    throw BoundViolation(ErrorCode::InternalBoundViolation, "plan ended at " + report.path.end().to_string());
  const std::size_t bound = connected ? kConnectedPlanBound : kDisconnectedPlanBound;
  if (report.path.length() > bound)
    throw BoundViolation(ErrorCode::InternalBoundViolation,
                         "plan of length " + std::to_string(report.path.length()) + " exceeds " + std::to_string(bound));
  return report;
}

}  // namespace linknav
