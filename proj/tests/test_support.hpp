#pragma once

// Random linkage generators and brute-force oracles shared by the test suites.
// The oracles deliberately avoid the library's fast paths: sums are taken with
// plain rational arithmetic and cells are found by exhaustive assignment.

#include "linknav/linknav.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

namespace linknav::testing {

inline Rational oracle_sum(const Linkage& L, IndexSet s) {
  Rational total = 0;
  s.for_each([&](int i) { total += L.length(i); });
  return total;
}

inline bool oracle_short(const Linkage& L, IndexSet s) { return 2 * oracle_sum(L, s) < L.perimeter(); }

/// Integer lengths in [1, max_len] with an odd total, so no subset can sum to
/// half the perimeter. Retries until the triangle inequality holds.
inline Linkage random_generic(std::mt19937_64& rng, int n, long long max_len = 20) {
  std::uniform_int_distribution<long long> pick(1, max_len);
  for (;;) {
    std::vector<long long> l(static_cast<std::size_t>(n));
    long long total = 0;
    for (auto& x : l) total += (x = pick(rng));
    if (total % 2 == 0) {
      l[std::uniform_int_distribution<std::size_t>(0, l.size() - 1)(rng)] += 1;
      total += 1;
    }
    const long long biggest = *std::max_element(l.begin(), l.end());
    if (2 * biggest < total) return Linkage::from_integers(l);
  }
}

inline Linkage random_with_connectivity(std::mt19937_64& rng, int n, bool connected, long long max_len = 20) {
  for (;;) {
    Linkage L = random_generic(rng, n, max_len);
    if (L.is_connected() == connected) return L;
  }
}

/// (n - 3/2, 1, ..., 1): every pair containing edge 1 is long.
inline Linkage bow(int n) {
  std::vector<Rational> l(static_cast<std::size_t>(n), Rational(1));
  l[0] = Rational(2 * n - 3, 2);
  return Linkage::create(l);
}

/// All admissible cyclically ordered partitions into `parts` parts, by
/// assigning each index 2..n a part number with index 1 pinned to part 0.
inline std::set<CyclicPartition> oracle_cells(const Linkage& L, int parts) {
  const int n = L.size();
  std::set<CyclicPartition> out;
  std::vector<int> assign(static_cast<std::size_t>(n + 1), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      std::vector<IndexSet> p(static_cast<std::size_t>(parts));
      for (int j = 1; j <= n; ++j) p[static_cast<std::size_t>(assign[static_cast<std::size_t>(j)])] |= IndexSet::single(j);
      for (IndexSet s : p)
        if (s.empty() || !oracle_short(L, s)) return;
      out.insert(CyclicPartition(p));
      return;
    }
    for (int k = 0; k < parts; ++k) {
      assign[static_cast<std::size_t>(i)] = k;
      rec(i + 1);
    }
  };
  rec(2);
  return out;
}

/// Admissible coarsenings of a 4-part label obtained by merging two adjacent parts.
inline std::vector<CyclicPartition> oracle_coarsenings(const Linkage& L, const CyclicPartition& e) {
  std::vector<CyclicPartition> out;
  const std::size_t m = e.size();
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<IndexSet> p;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == (i + 1) % m) continue;
      p.push_back(j == i ? (e[i] | e[(i + 1) % m]) : e[j]);
    }
    CyclicPartition c(p);
    if (c.is_admissible(L)) out.push_back(c);
  }
  return out;
}

struct OracleGraph {
  std::vector<CyclicPartition> vertices;
  std::map<CyclicPartition, std::size_t> index;
  std::vector<std::set<std::size_t>> adj;
  std::size_t edge_count = 0;
};

inline OracleGraph oracle_graph(const Linkage& L) {
  OracleGraph g;
  for (const auto& v : oracle_cells(L, 3)) {
    g.index[v] = g.vertices.size();
    g.vertices.push_back(v);
  }
  g.adj.resize(g.vertices.size());
  for (const auto& e : oracle_cells(L, 4)) {
    auto ends = oracle_coarsenings(L, e);
    if (ends.size() != 2) throw std::logic_error("edge without exactly two endpoints: " + e.to_string());
    const std::size_t a = g.index.at(ends[0]), b = g.index.at(ends[1]);
    g.adj[a].insert(b);
    g.adj[b].insert(a);
    ++g.edge_count;
  }
  return g;
}

inline std::vector<int> oracle_bfs(const OracleGraph& g, std::size_t s) {
  std::vector<int> d(g.vertices.size(), -1);
  std::queue<std::size_t> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t w : g.adj[u])
      if (d[w] < 0) {
        d[w] = d[u] + 1;
        q.push(w);
      }
  }
  return d;
}

/// a_i by brute force: short sets of size i+1 containing the longest edge.
inline std::vector<std::int64_t> oracle_a(const Linkage& L) {
  const int n = L.size();
  std::vector<std::int64_t> a(static_cast<std::size_t>(n), 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    IndexSet s = IndexSet::from_bits(bits);
    if (s.contains(L.longest()) && oracle_short(L, s)) ++a[static_cast<std::size_t>(s.size() - 1)];
  }
  return a;
}

inline double oracle_length_residual(const Linkage& L, const Configuration& c) {
  double worst = 0;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point d = c.points[(i + 1) % n] - c.points[i];
    worst = std::max(worst, std::abs(std::hypot(d.x, d.y) - to_double(L.length(static_cast<int>(i + 1)))));
  }
  return worst;
}

/// Edge direction angles of a configuration.
inline std::vector<double> edge_angles(const Configuration& c) {
  std::vector<double> th;
  for (Point e : edge_vectors(c)) th.push_back(std::atan2(e.y, e.x));
  return th;
}

/// Closes the polygon with edge angles `theta` by Gauss-Newton steps on the two
/// closure equations (minimum-norm update), then builds the configuration.
inline Configuration close_by_newton(const Linkage& L, std::vector<double> theta) {
  const auto l = L.lengths_double();
  for (int it = 0; it < 100; ++it) {
    double rx = 0, ry = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      rx += l[i] * std::cos(theta[i]);
      ry += l[i] * std::sin(theta[i]);
    }
    if (std::hypot(rx, ry) < 1e-14 * L.perimeter_double()) break;
    // J = [[-l sin], [l cos]]; solve (J J^T) y = r, update theta -= J^T y.
    double a = 0, b = 0, d = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      const double js = -l[i] * std::sin(theta[i]), jc = l[i] * std::cos(theta[i]);
      a += js * js;
      b += js * jc;
      d += jc * jc;
    }
    const double det = a * d - b * b;
    const double y0 = (d * rx - b * ry) / det, y1 = (a * ry - b * rx) / det;
    for (std::size_t i = 0; i < l.size(); ++i)
      theta[i] -= -l[i] * std::sin(theta[i]) * y0 + l[i] * std::cos(theta[i]) * y1;
  }
  return regauge(from_angles(l, theta));
}

/// Adds independent uniform noise of size eps to every edge angle and recloses.
inline Configuration perturb(const Linkage& L, const Configuration& c, double eps, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> noise(-eps, eps);
  auto th = edge_angles(c);
  for (double& t : th) t += noise(rng);
  return close_by_newton(L, th);
}

/// Convex polygon with edges in index order, inscribed in a circle.
inline Configuration cyclic_polygon(const Linkage& L) {
  const auto l = L.lengths_double();
  const double lmax = *std::max_element(l.begin(), l.end());
  auto turn = [&](double R) {
    double s = 0;
    for (double x : l) s += 2 * std::asin(std::min(1.0, x / (2 * R)));
    return s;
  };
  double lo = lmax / 2, hi = L.perimeter_double();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (turn(mid) > 2 * M_PI ? lo : hi) = mid;
  }
  std::vector<double> th;
  double acc = 0;
  for (double x : l) {
    const double central = 2 * std::asin(std::min(1.0, x / (2 * hi)));
    th.push_back(acc + central / 2);
    acc += central;
  }
  return close_by_newton(L, th);
}

inline Linkage heptagon() { return Linkage::from_integers({10, 1, 9, 4, 9, 2, 4}); }

inline const Vertex& heptagon_v1() {
  static const Vertex v{{3, 6}, {1, 4, 7}, {2, 5}};
  return v;
}

inline const Vertex& heptagon_target() {
  static const Vertex v{{5, 6, 7}, {1, 2}, {3, 4}};
  return v;
}

/// V_1..V_10 of the worked heptagon example.
inline std::vector<Vertex> heptagon_trace() {
  return {heptagon_v1(),
          Vertex{{3, 6}, {1, 4}, {2, 5, 7}},
          Vertex{{3, 4, 6}, {1}, {2, 5, 7}},
          Vertex{{3, 4, 6}, {1, 2}, {5, 7}},
          Vertex{{3, 4}, {1, 2}, {5, 7, 6}},
          Vertex{{3, 4}, {1, 2, 7, 6}, {5}},
          Vertex{{3}, {1, 2, 7, 6}, {5, 4}},
          Vertex{{5, 3}, {1, 2, 7, 6}, {4}},
          Vertex{{5}, {1, 2, 7, 6}, {3, 4}},
          heptagon_target()};
}

/// The six hexagon vertices in cyclic order.
inline std::vector<Vertex> hexagon_list() {
  return {Vertex{{1}, {2, 3}, {4}}, Vertex{{1}, {2}, {4, 3}}, Vertex{{1}, {2, 4}, {3}},
          Vertex{{1}, {4}, {2, 3}}, Vertex{{1}, {4, 3}, {2}}, Vertex{{1}, {3}, {4, 2}}};
}

inline Linkage hexagon_linkage() { return Linkage::create({Rational(5, 2), 1, 1, 1}); }
inline Linkage two_circles() { return Linkage::create({1, 1, 1, Rational(1, 2)}); }
inline Linkage pentagon() { return Linkage::from_integers({1, 1, 1, 1, 1}); }

}  // namespace linknav::testing
