#include "linknav/cell_complex.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace linknav {
namespace {

void check_dimension(const Linkage& L, int k) {
  if (k < 0 || k > L.size() - 3)
    throw InputError(ErrorCode::InvalidInput,
                     "cell dimension " + std::to_string(k) + " outside 0.." + std::to_string(L.size() - 3));
}

// Depth-first assignment of indices 2..n to parts 1..p-1 (index 1 sits in
// part 0), pruning long parts and branches that cannot fill every part.
class CellEnumerator {
 public:
  CellEnumerator(const Linkage& L, std::size_t parts) : L_(L), parts_(parts, IndexSet{}) { parts_[0] = IndexSet{1}; }

  std::vector<CyclicPartition> run() {
    empty_ = parts_.size() - 1;
    assign(2);
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  void assign(int index) {
    const int n = L_.size();
    const int remaining = n - index + 1;
    if (static_cast<std::size_t>(remaining) < empty_) return;
    if (index > n) {
      out_.push_back(canonical_unchecked(parts_, n));
      return;
    }
    const IndexSet bit = IndexSet::single(index);
    for (std::size_t p = 0; p < parts_.size(); ++p) {
      const IndexSet grown = parts_[p] | bit;
      if (!L_.is_short(grown)) continue;
      const bool was_empty = parts_[p].empty();
      parts_[p] = grown;
      if (was_empty) --empty_;
      assign(index + 1);
      if (was_empty) ++empty_;
      parts_[p] -= bit;
    }
  }

  const Linkage& L_;
  std::vector<IndexSet> parts_;
  std::size_t empty_ = 0;
  std::vector<CyclicPartition> out_;
};

// Number of subsets T of the given weights, by cardinality, with 2*sum(T) < bound.
// Meet in the middle: sorted half sums per cardinality.
std::vector<std::uint64_t> count_below_fast(const std::vector<std::int64_t>& w, std::int64_t bound) {
  const std::size_t n = w.size();
  const std::size_t h = n / 2;
  std::vector<std::int64_t> a(w.begin(), w.begin() + static_cast<long>(h)), b(w.begin() + static_cast<long>(h), w.end());
  std::vector<std::vector<std::int64_t>> by_size(h + 1);
  std::vector<std::int64_t> sums(std::size_t{1} << h, 0);
  for (std::size_t m = 0; m < sums.size(); ++m) {
    if (m) sums[m] = sums[m & (m - 1)] + a[static_cast<std::size_t>(std::countr_zero(m))];
    by_size[static_cast<std::size_t>(std::popcount(m))].push_back(2 * sums[m]);
  }
  for (auto& v : by_size) std::sort(v.begin(), v.end());
  std::vector<std::uint64_t> out(n + 1, 0);
  std::vector<std::int64_t> bsums(std::size_t{1} << b.size(), 0);
  for (std::size_t m = 0; m < bsums.size(); ++m) {
    if (m) bsums[m] = bsums[m & (m - 1)] + b[static_cast<std::size_t>(std::countr_zero(m))];
    const std::int64_t limit = bound - 2 * bsums[m];
    const auto bs = static_cast<std::size_t>(std::popcount(m));
    for (std::size_t s = 0; s <= h; ++s) {
      const auto& v = by_size[s];
      out[s + bs] += static_cast<std::uint64_t>(std::lower_bound(v.begin(), v.end(), limit) - v.begin());
    }
  }
  return out;
}

std::vector<std::uint64_t> count_below_big(const std::vector<BigInt>& w, const BigInt& bound) {
  const std::size_t n = w.size();
  if (n > 24) throw InputError(ErrorCode::TooLarge, "subset counting with huge weights limited to n <= 24");
  std::vector<std::uint64_t> out(n + 1, 0);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    BigInt s = 0;
    for (std::uint64_t b = m; b != 0; b &= b - 1) s += w[static_cast<std::size_t>(std::countr_zero(b))];
    if (2 * s < bound) ++out[static_cast<std::size_t>(std::popcount(m))];
  }
  return out;
}

// Subsets of the edges other than `skip` (0 for none) with 2*sum < total - 2*w_skip.
std::vector<std::uint64_t> short_counts_excluding(const Linkage& L, int skip) {
  if (L.has_fast_weights()) {
    std::vector<std::int64_t> w;
    std::int64_t bound = L.fast_total();
    for (int i = 1; i <= L.size(); ++i) {
      if (i == skip) bound -= 2 * L.fast_weights()[static_cast<std::size_t>(i - 1)];
      else w.push_back(L.fast_weights()[static_cast<std::size_t>(i - 1)]);
    }
    return count_below_fast(w, bound);
  }
  std::vector<BigInt> w;
  BigInt bound = L.total_weight();
  for (int i = 1; i <= L.size(); ++i) {
    if (i == skip) bound -= 2 * L.weights()[static_cast<std::size_t>(i - 1)];
    else w.push_back(L.weights()[static_cast<std::size_t>(i - 1)]);
  }
  return count_below_big(w, bound);
}

// levels[j][T] = number of sequences of j nonempty short sets partitioning T,
// for T ranging over subsets of {2..n} (bit i-2 for index i).
std::vector<std::vector<std::uint64_t>> sequence_table(const Linkage& L, int max_parts) {
  const int m = L.size() - 1;
  const std::size_t size = std::size_t{1} << m;
  std::vector<char> shorts(size);
  for (std::size_t t = 0; t < size; ++t) shorts[t] = L.is_short(IndexSet::from_bits(static_cast<std::uint64_t>(t) << 1));
  std::vector<std::vector<std::uint64_t>> levels;
  levels.emplace_back(size, 0);
  levels[0][0] = 1;
  for (int j = 1; j <= max_parts; ++j) {
    const auto& prev = levels.back();
    std::vector<std::uint64_t> cur(size, 0);
    for (std::size_t t = 1; t < size; ++t) {
      std::uint64_t acc = 0;
      for (std::size_t s = t; s != 0; s = (s - 1) & t) {
        if (shorts[s]) acc += prev[t & ~s];
      }
      cur[t] = acc;
    }
    levels.push_back(std::move(cur));
  }
  return levels;
}

std::vector<std::uint64_t> census_counts(const Linkage& L, const EnumerationLimits& limits) {
  limits.check(L.size());
  constexpr int kHardLimit = 18;
  if (L.size() > kHardLimit)
    throw InputError(ErrorCode::TooLarge, "cell census limited to n <= " + std::to_string(kHardLimit));
  const int n = L.size();
  const int m = n - 1;
  const std::size_t full = (std::size_t{1} << m) - 1;
  const auto levels = sequence_table(L, n - 1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n - 2), 0);
  for (std::size_t t = 0; t <= full; ++t) {
    if (!L.is_short(IndexSet::from_bits((static_cast<std::uint64_t>(t) << 1) | 1U))) continue;
    for (int k = 0; k <= n - 3; ++k) counts[static_cast<std::size_t>(k)] += levels[static_cast<std::size_t>(k + 2)][full & ~t];
  }
  return counts;
}

}  // namespace

EnumerationLimits EnumerationLimits::from_environment() {
  EnumerationLimits limits;
  if (const char* env = std::getenv("LINKNAV_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= IndexSet::kMaxIndex) limits.max_n = static_cast<int>(v);
  }
  return limits;
}

void EnumerationLimits::check(int n) const {
  if (n > max_n && !force)
    throw InputError(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                              std::to_string(max_n) + " (set LINKNAV_MAX_N or force)");
}

std::vector<CyclicPartition> enumerate_cells(const Linkage& L, int k, const EnumerationLimits& limits) {
  check_dimension(L, k);
  limits.check(L.size());
  return CellEnumerator(L, static_cast<std::size_t>(k + 3)).run();
}

std::uint64_t count_cells(const Linkage& L, int k, const EnumerationLimits& limits) {
  check_dimension(L, k);
  return census_counts(L, limits)[static_cast<std::size_t>(k)];
}

CellCensus cell_census(const Linkage& L, bool materialize, const EnumerationLimits& limits) {
  CellCensus c;
  if (materialize) {
    c.labels.emplace();
    for (int k = 0; k <= L.size() - 3; ++k) {
      c.labels->push_back(enumerate_cells(L, k, limits));
      c.counts.push_back(c.labels->back().size());
    }
  } else {
    c.counts = census_counts(L, limits);
  }
  return c;
}

std::optional<std::size_t> Graph::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Graph build_graph(const Linkage& L, const EnumerationLimits& limits) {
  Graph g(L);
  g.vertices_ = enumerate_cells(L, 0, limits);
  g.adjacency_.resize(g.vertices_.size());
  if (L.size() < 4) return g;
  for (EdgeLabel& e : enumerate_cells(L, 1, limits)) {
    auto [v0, v1] = edge_endpoints(L, e);
    const auto a = g.index_of(v0), b = g.index_of(v1);
    if (!a || !b) throw NumericError(ErrorCode::InternalBoundViolation, "edge " + e.to_string() + " has an unknown endpoint");
    const std::size_t id = g.edges_.size();
    g.edges_.push_back({std::move(e), *a, *b});
    g.adjacency_[*a].push_back({*b, id});
    g.adjacency_[*b].push_back({*a, id});
  }
  return g;
}

std::vector<std::uint64_t> short_subset_counts(const Linkage& L) { return short_counts_excluding(L, 0); }

__extension__ typedef __int128 wide_int;

std::int64_t predicted_vertex_count(const Linkage& L) {
  const int n = L.size();
  if (n > 40) throw InputError(ErrorCode::TooLarge, "vertex count formula evaluated for n <= 40");
  const auto N = short_subset_counts(L);
  wide_int total = 0;
  for (int k = 1; k <= n; ++k) total += static_cast<wide_int>(N[static_cast<std::size_t>(k)]) << (n - k);
  wide_int three = 1;
  for (int i = 0; i < n - 1; ++i) three *= 3;
  total += (static_cast<wide_int>(1) << n) - 2 * three;
  return static_cast<std::int64_t>(total);
}

std::int64_t valence(const Linkage& L, const Vertex& v) {
  require_admissible(L, v, 3, ErrorCode::InadmissibleVertex);
  std::int64_t s = -6;
  for (IndexSet p : v.parts()) s += std::int64_t{1} << p.size();
  return s;
}

std::vector<std::uint64_t> homology_counts(const Linkage& L) {
  // Sets of size i+1 containing the longest edge = sets of size i among the others.
  auto a = short_counts_excluding(L, L.longest());
  a.resize(static_cast<std::size_t>(L.size()));
  return a;
}

std::vector<std::uint64_t> betti_numbers(const Linkage& L) {
  const auto a = homology_counts(L);
  const int top = L.size() - 3;
  std::vector<std::uint64_t> ranks;
  for (int k = 0; k <= top; ++k) ranks.push_back(a[static_cast<std::size_t>(k)] + a[static_cast<std::size_t>(top - k)]);
  return ranks;
}

std::int64_t euler_from_betti(const Linkage& L) {
  std::int64_t chi = 0, sign = 1;
  for (std::uint64_t r : betti_numbers(L)) {
    chi += sign * static_cast<std::int64_t>(r);
    sign = -sign;
  }
  return chi;
}

std::int64_t euler_characteristic(const Linkage& L, const EnumerationLimits& limits) {
  std::int64_t chi = 0, sign = 1;
  for (std::uint64_t c : census_counts(L, limits)) {
    chi += sign * static_cast<std::int64_t>(c);
    sign = -sign;
  }
  return chi;
}

std::vector<int> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<int> dist(g.vertices().size(), -1);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (dist[inc.neighbor] < 0) {
        dist[inc.neighbor] = dist[u] + 1;
        queue.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

std::optional<Path> shortest_path(const Graph& g, const Vertex& v, const Vertex& w) {
  const auto s = g.index_of(v), t = g.index_of(w);
  if (!s) throw InputError(ErrorCode::UnknownVertex, v.to_string() + " is not a vertex of the graph");
  if (!t) throw InputError(ErrorCode::UnknownVertex, w.to_string() + " is not a vertex of the graph");
  std::vector<std::size_t> parent(g.vertices().size(), SIZE_MAX);
  std::deque<std::size_t> queue{*s};
  parent[*s] = *s;
  while (!queue.empty() && parent[*t] == SIZE_MAX) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(u)) {
      if (parent[inc.neighbor] == SIZE_MAX) {
        parent[inc.neighbor] = u;
        queue.push_back(inc.neighbor);
      }
    }
  }
  if (parent[*t] == SIZE_MAX) return std::nullopt;
  std::vector<Vertex> chain;
  for (std::size_t x = *t; x != *s; x = parent[x]) chain.push_back(g.vertices()[x]);
  chain.push_back(g.vertices()[*s]);
  std::reverse(chain.begin(), chain.end());
  return path_from_vertices(g.linkage(), chain);
}

std::vector<std::vector<std::size_t>> components(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(g.vertices().size(), 0);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    if (seen[v]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{v};
    seen[v] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (const auto& inc : g.incident(u)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          queue.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

int diameter(const Graph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

}  // namespace linknav
