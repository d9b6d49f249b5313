#include "linknav/geometry.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

namespace linknav {
namespace {

constexpr double kPi = std::numbers::pi;

Point unit(Point p) {
  const double n = p.norm();
  return {p.x / n, p.y / n};
}

double clamp_sqrt(double v) { return std::sqrt(std::max(0.0, v)); }

// Gives every edge the direction of its part; parts[i] has direction dirs[i].
Configuration assemble(const Linkage& L, std::span<const IndexSet> parts, const std::vector<Point>& dirs) {
  std::vector<Point> edges(static_cast<std::size_t>(L.size()));
  const auto len = L.lengths_double();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    parts[p].for_each([&](int i) {
      edges[static_cast<std::size_t>(i - 1)] = len[static_cast<std::size_t>(i - 1)] * dirs[p];
    });
  }
  return from_edge_vectors(edges);
}

double sum_double(const Linkage& L, IndexSet s) { return to_double(L.sum(s)); }

}  // namespace

std::vector<Point> edge_vectors(const Configuration& c) {
  const std::size_t n = c.points.size();
  std::vector<Point> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = c.points[(i + 1) % n] - c.points[i];
  return e;
}

Configuration from_edge_vectors(const std::vector<Point>& edges) {
  if (edges.empty()) return {};
  const double l1 = edges[0].norm();
  if (l1 == 0.0) throw NumericError(ErrorCode::DegenerateDirection, "edge 1 has zero length");
  const double c = edges[0].x / l1, s = edges[0].y / l1;
  Configuration out;
  out.points.reserve(edges.size());
  Point p{0.0, 0.0};
  out.points.push_back(p);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    Point r = i == 0 ? Point{l1, 0.0} : Point{c * edges[i].x + s * edges[i].y, -s * edges[i].x + c * edges[i].y};
    p = p + r;
    out.points.push_back(p);
  }
  return out;
}

Configuration from_angles(const std::vector<double>& lengths, const std::vector<double>& theta) {
  std::vector<Point> e(lengths.size());
  for (std::size_t i = 0; i < lengths.size(); ++i) e[i] = {lengths[i] * std::cos(theta[i]), lengths[i] * std::sin(theta[i])};
  return from_edge_vectors(e);
}

Configuration regauge(const Configuration& c) { return from_edge_vectors(edge_vectors(c)); }

double length_residual(const Linkage& L, const Configuration& c) {
  if (static_cast<int>(c.size()) != L.size()) throw InputError(ErrorCode::LengthMismatch, "configuration has wrong size");
  const auto len = L.lengths_double();
  const auto e = edge_vectors(c);
  double worst = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) worst = std::max(worst, std::abs(e[i].norm() - len[i]));
  return worst;
}

double max_displacement(const Configuration& a, const Configuration& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.points.size() && i < b.points.size(); ++i)
    worst = std::max(worst, (a.points[i] - b.points[i]).norm());
  return worst;
}

bool in_gauge(const Configuration& c) {
  return c.points.size() >= 2 && c.points[0] == Point{0.0, 0.0} && c.points[1].y == 0.0 && c.points[1].x > 0.0;
}

Configuration realize_vertex(const Linkage& L, const Vertex& v) {
  require_admissible(L, v, 3, ErrorCode::InadmissibleVertex);
  const double a = sum_double(L, v[0]), b = sum_double(L, v[1]), c = sum_double(L, v[2]);
  // Q0 = origin, Q1 = (a, 0), apex Q2 above the axis: counterclockwise.
  const double x = (a * a + c * c - b * b) / (2.0 * a);
  const Point q1{a, 0.0}, q2{x, clamp_sqrt(c * c - x * x)};
  return assemble(L, v.parts(), {Point{1.0, 0.0}, unit(q2 - q1), unit(Point{0.0, 0.0} - q2)});
}

int quadrilateral_rotation(const Linkage& L, const EdgeLabel& e) {
  require_admissible(L, e, 4, ErrorCode::InadmissibleEdge);
  for (int r = 0; r < 4; ++r) {
    if (L.is_short(e.at_cyclic(r) | e.at_cyclic(r + 1)) && L.is_short(e.at_cyclic(r + 1) | e.at_cyclic(r + 2))) return r;
  }
  throw NumericError(ErrorCode::InadmissibleEdge, "no overlapping short merges in " + e.to_string());
}

namespace {

struct Quad {
  int r;
  double x, y, z, w;
  double longest;   // x + y: X and Y aligned
  double shortest;  // Y and Z aligned
  bool long_at_zero;  // whether t = 0 is the X∪Y endpoint
};

Quad quad_for(const Linkage& L, const EdgeLabel& e) {
  Quad q{};
  q.r = quadrilateral_rotation(L, e);
  q.x = sum_double(L, e.at_cyclic(q.r));
  q.y = sum_double(L, e.at_cyclic(q.r + 1));
  q.z = sum_double(L, e.at_cyclic(q.r + 2));
  q.w = sum_double(L, e.at_cyclic(q.r + 3));
  q.longest = q.x + q.y;
  const double yz = q.y + q.z;
  const double cos_theta = std::clamp((q.x * q.x + yz * yz - q.w * q.w) / (2.0 * q.x * yz), -1.0, 1.0);
  q.shortest = clamp_sqrt(q.x * q.x + q.y * q.y - 2.0 * q.x * q.y * cos_theta);
  // Endpoint 0 merges a pair from {A∪B, C∪D}: that is X∪Y exactly when r is even.
  q.long_at_zero = q.r % 2 == 0;
  return q;
}

}  // namespace

double flex_diagonal(const Linkage& L, const EdgeLabel& e, double t) {
  const Quad q = quad_for(L, e);
  return q.long_at_zero ? (1.0 - t) * q.longest + t * q.shortest : (1.0 - t) * q.shortest + t * q.longest;
}

Configuration realize_edge_point(const Linkage& L, const EdgeLabel& e, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InputError(ErrorCode::InvalidInput, "edge parameter outside [0,1]");
  const Quad q = quad_for(L, e);
  const double d = q.long_at_zero ? (1.0 - t) * q.longest + t * q.shortest : (1.0 - t) * q.shortest + t * q.longest;
  // Diagonal Q0Q2 on the x-axis, Q1 below it and Q3 above: counterclockwise.
  const double x1 = (d * d + q.x * q.x - q.y * q.y) / (2.0 * d);
  const double x3 = (d * d + q.w * q.w - q.z * q.z) / (2.0 * d);
  const Point q0{0.0, 0.0}, q1{x1, -clamp_sqrt(q.x * q.x - x1 * x1)}, q2{d, 0.0}, q3{x3, clamp_sqrt(q.w * q.w - x3 * x3)};
  const IndexSet parts[4] = {e.at_cyclic(q.r), e.at_cyclic(q.r + 1), e.at_cyclic(q.r + 2), e.at_cyclic(q.r + 3)};
  return assemble(L, parts, {unit(q1 - q0), unit(q2 - q1), unit(q3 - q2), unit(q0 - q3)});
}

Convexification convexify(const Configuration& c, double angle_tol) {
  const auto e = edge_vectors(c);
  const std::size_t n = e.size();
  std::vector<double> ang(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].norm() == 0.0) throw NumericError(ErrorCode::DegenerateDirection, "edge " + std::to_string(i + 1) + " has zero length");
    ang[i] = std::atan2(e[i].y, e[i].x);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    if (!groups.empty() && ang[i] - ang[groups.back().back()] <= angle_tol) groups.back().push_back(i);
    else groups.push_back({i});
  }
  // Directions just below +pi and just above -pi are the same direction.
  if (groups.size() > 1 && ang[groups.front().front()] + 2.0 * kPi - ang[groups.back().back()] <= angle_tol) {
    groups.back().insert(groups.back().end(), groups.front().begin(), groups.front().end());
    groups.erase(groups.begin());
  }
  if (groups.size() < 3)
    throw NumericError(ErrorCode::DegenerateDirection, "fewer than three edge directions");
  Convexification out;
  std::vector<IndexSet> parts;
  Point p{0.0, 0.0};
  for (const auto& g : groups) {
    out.polygon.push_back(p);
    Point sum{0.0, 0.0};
    IndexSet s;
    std::vector<int> ids;
    for (std::size_t i : g) {
      sum = sum + e[i];
      s |= IndexSet::single(static_cast<int>(i + 1));
      ids.push_back(static_cast<int>(i + 1));
    }
    std::sort(ids.begin(), ids.end());
    out.groups.push_back(std::move(ids));
    out.angles.push_back(std::atan2(sum.y, sum.x));
    parts.push_back(s);
    p = p + sum;
  }
  out.label = CyclicPartition(std::move(parts));
  return out;
}

CyclicPartition cell_label(const Configuration& c, double angle_tol) { return convexify(c, angle_tol).label; }

bool strictly_convex(const Convexification& cv, double eps) {
  const std::size_t m = cv.polygon.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point a = cv.polygon[(i + 1) % m] - cv.polygon[i];
    const Point b = cv.polygon[(i + 2) % m] - cv.polygon[(i + 1) % m];
    if (!(cross(a, b) > eps * a.norm() * b.norm())) return false;
  }
  return true;
}

Vertex entry_vertex(const Linkage& L, const CyclicPartition& cell) {
  require_admissible(L, cell, 0, ErrorCode::InadmissibleVertex);
  const int n = L.size();
  if (cell.size() == 3) return cell;
  const long p = static_cast<long>(cell.size());
  const long home = cell.part_of(L.longest());
  const IndexSet centre = cell.at_cyclic(home);
  IndexSet run;
  long j = 0;
  while (j < p - 2 && L.is_short(run | cell.at_cyclic(home + 1 + j))) run |= cell.at_cyclic(home + 1 + j++);
  const IndexSet rest = L.all() - centre - run;
  if (j >= 1 && L.is_short(rest)) return canonical_unchecked({centre, run, rest}, n);
  // The part with the longest edge is not a singleton and the maximal run
  // leaves a long remainder: any admissible coarsening into three runs works.
  for (long a = 0; a < p; ++a) {
    for (long b = 1; b < p - 1; ++b) {
      for (long c = b + 1; c < p; ++c) {
        IndexSet s0, s1, s2;
        for (long i = 0; i < b; ++i) s0 |= cell.at_cyclic(a + i);
        for (long i = b; i < c; ++i) s1 |= cell.at_cyclic(a + i);
        for (long i = c; i < p; ++i) s2 |= cell.at_cyclic(a + i);
        if (L.is_short(s0) && L.is_short(s1) && L.is_short(s2)) return canonical_unchecked({s0, s1, s2}, n);
      }
    }
  }
  throw NumericError(ErrorCode::NoCut, "no vertex in the closure of " + cell.to_string());
}

}  // namespace linknav
