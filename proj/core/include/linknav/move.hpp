#pragma once

#include "linknav/label.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace linknav {

enum class Direction { ToNext, ToPrevious };

/// Shift `shifted` out of the part at canonical position `source` into the
/// cyclically adjacent part.
struct Move {
  int source = 0;
  Direction direction = Direction::ToNext;
  IndexSet shifted;

  friend bool operator==(const Move&, const Move&) = default;
};

class IllegalMoveError : public InputError {
 public:
  IllegalMoveError(ErrorCode code, Rational excess, const std::string& what)
      : InputError(code, what), excess_(std::move(excess)) {}
  /// For DestinationLong: |destination ∪ S| - |L|/2 (positive). Zero otherwise.
  const Rational& excess() const noexcept { return excess_; }

 private:
  Rational excess_;
};

struct MoveResult {
  EdgeLabel edge;
  Vertex vertex;
};

/// Applies a move to an admissible vertex. The returned edge label splits the
/// source part into (P∖S, S) with S next to the destination.
MoveResult apply_move(const Linkage& L, const Vertex& v, const Move& m);

/// The two vertices of an admissible 4-part label. Endpoint 0 merges one of
/// {A∪B, C∪D}, endpoint 1 merges one of {B∪C, D∪A}.
std::pair<Vertex, Vertex> edge_endpoints(const Linkage& L, const EdgeLabel& e);

/// The move leading from u to an adjacent vertex w, if any.
std::optional<Move> move_between(const Linkage& L, const Vertex& u, const Vertex& w);

struct Step {
  Move move;
  EdgeLabel edge;
  Vertex vertex;

  friend bool operator==(const Step&, const Step&) = default;
};

/// An edge path in the vertex-edge graph.
struct Path {
  Vertex start;
  std::vector<Step> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const Vertex& end() const noexcept { return steps.empty() ? start : steps.back().vertex; }
  std::vector<Vertex> vertices() const;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Builds a path from consecutive adjacent vertices. Throws InputError
/// (InvalidStep) when two consecutive vertices are not adjacent.
Path path_from_vertices(const Linkage& L, const std::vector<Vertex>& vertices);

/// Appends `tail` (which must start at path.end()) to `path`.
void append_path(Path& path, const Path& tail);

}  // namespace linknav
