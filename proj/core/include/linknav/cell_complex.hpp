#pragma once

#include "linknav/label.hpp"
#include "linknav/linkage.hpp"
#include "linknav/move.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace linknav {

/// Guard against exponential enumeration.
struct EnumerationLimits {
  static constexpr int kDefaultMaxN = 14;
  int max_n = kDefaultMaxN;
  bool force = false;

  /// Default limits, with max_n taken from LINKNAV_MAX_N when set.
  static EnumerationLimits from_environment();
  void check(int n) const;
};

/// All admissible labels with k+3 parts, canonical and sorted.
std::vector<CyclicPartition> enumerate_cells(const Linkage& L, int k,
                                             const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Number of admissible labels with k+3 parts, by a subset dynamic program
/// (no materialization). Practical up to n around 16.
std::uint64_t count_cells(const Linkage& L, int k,
                          const EnumerationLimits& limits = EnumerationLimits::from_environment());

struct CellCensus {
  /// counts[k] = number of k-cells, k = 0..n-3.
  std::vector<std::uint64_t> counts;
  std::optional<std::vector<std::vector<CyclicPartition>>> labels;
};

CellCensus cell_census(const Linkage& L, bool materialize = false,
                       const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// The vertex-edge graph of the cell complex.
class Graph {
 public:
  struct Edge {
    EdgeLabel label;
    std::size_t a = 0;  // endpoint 0
    std::size_t b = 0;  // endpoint 1
  };
  struct Incidence {
    std::size_t neighbor;
    std::size_t edge;
  };

  const Linkage& linkage() const noexcept { return linkage_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Incidence>& incident(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  std::optional<std::size_t> index_of(const Vertex& v) const;

 private:
  friend Graph build_graph(const Linkage&, const EnumerationLimits&);
  explicit Graph(Linkage L) : linkage_(std::move(L)) {}

  Linkage linkage_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(const Linkage& L, const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// Number of nonempty short subsets of each cardinality: result[k] for k = 0..n
/// (result[0] counts the empty set).
std::vector<std::uint64_t> short_subset_counts(const Linkage& L);

/// Σ_{k=1}^n N_k 2^{n-k} - 2·3^{n-1} + 2^n. Requires n <= 40.
std::int64_t predicted_vertex_count(const Linkage& L);

/// 2^i + 2^j + 2^k - 6 for part sizes i, j, k.
std::int64_t valence(const Linkage& L, const Vertex& v);

/// a_i = number of short sets of size i+1 containing the longest edge.
std::vector<std::uint64_t> homology_counts(const Linkage& L);

/// rank H_k = a_k + a_{n-3-k}, k = 0..n-3.
std::vector<std::uint64_t> betti_numbers(const Linkage& L);

std::int64_t euler_from_betti(const Linkage& L);

/// Alternating sum of the cell census.
std::int64_t euler_characteristic(const Linkage& L,
                                  const EnumerationLimits& limits = EnumerationLimits::from_environment());

/// BFS distances from `source` (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, std::size_t source);

/// Shortest path with Moves; std::nullopt when v and w lie in different
/// components. Throws InputError(UnknownVertex) for vertices not in g.
std::optional<Path> shortest_path(const Graph& g, const Vertex& v, const Vertex& w);

/// Connected components as sorted vertex index lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const Graph& g);

/// Largest finite BFS distance.
int diameter(const Graph& g);

}  // namespace linknav
