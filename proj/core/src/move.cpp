#include "linknav/move.hpp"

#include "linknav/error.hpp"

namespace linknav {
namespace {

std::size_t destination(const Move& m) {
  return m.direction == Direction::ToNext ? static_cast<std::size_t>((m.source + 1) % 3)
                                          : static_cast<std::size_t>((m.source + 2) % 3);
}

}  // namespace

MoveResult apply_move(const Linkage& L, const Vertex& v, const Move& m) {
  require_admissible(L, v, 3, ErrorCode::InadmissibleVertex);
  if (m.source < 0 || m.source > 2)
    throw IllegalMoveError(ErrorCode::IllegalMoveMalformed, 0, "source position " + std::to_string(m.source) + " out of range");
  const auto s = static_cast<std::size_t>(m.source);
  const IndexSet src = v[s];
  if (m.shifted.empty() || !m.shifted.subset_of(src))
    throw IllegalMoveError(ErrorCode::IllegalMoveMalformed, 0,
                           m.shifted.to_string() + " is not a nonempty subset of " + src.to_string());
  if (m.shifted == src)
    throw IllegalMoveError(ErrorCode::IllegalMoveWouldEmptyPart, 0, "shifting all of " + src.to_string());
  const std::size_t d = destination(m);
  const std::size_t o = 3 - s - d;
  const IndexSet merged = v[d] | m.shifted;
  if (!L.is_short(merged)) {
    Rational ex = L.excess(merged);
    throw IllegalMoveError(ErrorCode::IllegalMoveDestinationLong, ex,
                           merged.to_string() + " exceeds half the perimeter by " + format_rational(ex));
  }
  const IndexSet rest = src - m.shifted;
  const int n = v.n();
  MoveResult r;
  if (m.direction == Direction::ToNext) {
    r.edge = canonical_unchecked({rest, m.shifted, v[d], v[o]}, n);
  } else {
    r.edge = canonical_unchecked({v[d], m.shifted, rest, v[o]}, n);
  }
  std::vector<IndexSet> parts(v.parts().begin(), v.parts().end());
  parts[s] = rest;
  parts[d] = merged;
  r.vertex = canonical_unchecked(std::move(parts), n);
  return r;
}

std::pair<Vertex, Vertex> edge_endpoints(const Linkage& L, const EdgeLabel& e) {
  require_admissible(L, e, 4, ErrorCode::InadmissibleEdge);
  const IndexSet a = e[0], b = e[1], c = e[2], d = e[3];
  const int n = e.n();
  Vertex v0 = L.is_short(a | b) ? canonical_unchecked({a | b, c, d}, n) : canonical_unchecked({a, b, c | d}, n);
  Vertex v1 = L.is_short(b | c) ? canonical_unchecked({a, b | c, d}, n) : canonical_unchecked({b, c, d | a}, n);
  return {std::move(v0), std::move(v1)};
}

std::optional<Move> move_between(const Linkage& L, const Vertex& u, const Vertex& w) {
  if (u.size() != 3 || w.size() != 3 || u.n() != w.n() || u == w) return std::nullopt;
  for (int s = 0; s < 3; ++s) {
    for (Direction dir : {Direction::ToNext, Direction::ToPrevious}) {
      Move m{s, dir, {}};
      const std::size_t d = destination(m);
      const int wp = w.part_of(u[d].lowest());
      if (wp < 0) continue;
      const IndexSet shifted = w[static_cast<std::size_t>(wp)] - u[d];
      if (shifted.empty() || !shifted.subset_of(u[static_cast<std::size_t>(s)]) || shifted == u[static_cast<std::size_t>(s)])
        continue;
      if (!L.is_short(u[d] | shifted)) continue;
      std::vector<IndexSet> parts(u.parts().begin(), u.parts().end());
      parts[static_cast<std::size_t>(s)] -= shifted;
      parts[d] |= shifted;
      if (canonical_unchecked(std::move(parts), u.n()) == w) {
        m.shifted = shifted;
        return m;
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> Path::vertices() const {
  std::vector<Vertex> out{start};
  for (const Step& s : steps) out.push_back(s.vertex);
  return out;
}

Path path_from_vertices(const Linkage& L, const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw InputError(ErrorCode::InvalidStep, "a path needs a start vertex");
  Path p{vertices.front(), {}};
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    auto m = move_between(L, vertices[i - 1], vertices[i]);
    if (!m)
      throw InputError(ErrorCode::InvalidStep, "step " + std::to_string(i) + ": " + vertices[i - 1].to_string() +
                                                   " and " + vertices[i].to_string() + " are not adjacent");
    MoveResult r = apply_move(L, vertices[i - 1], *m);
    p.steps.push_back(Step{*m, std::move(r.edge), std::move(r.vertex)});
  }
  return p;
}

void append_path(Path& path, const Path& tail) {
  if (!(tail.start == path.end()))
    throw InputError(ErrorCode::InvalidStep, "cannot join paths at " + path.end().to_string() + " and " + tail.start.to_string());
  path.steps.insert(path.steps.end(), tail.steps.begin(), tail.steps.end());
}

}  // namespace linknav
