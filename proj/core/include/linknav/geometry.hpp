#pragma once

#include "linknav/label.hpp"
#include "linknav/linkage.hpp"

#include <cmath>
#include <vector>

namespace linknav {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(Point, Point) = default;
  double norm() const { return std::hypot(x, y); }
};

inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }

/// Joint positions p_1..p_n; edge i runs from p_i to p_{i+1} (edge n closes
/// back to p_1).
struct Configuration {
  std::vector<Point> points;

  std::size_t size() const noexcept { return points.size(); }
  friend bool operator==(const Configuration&, const Configuration&) = default;
};

std::vector<Point> edge_vectors(const Configuration& c);

/// Chains edge vectors 1..n-1 from the origin after rotating edge 1 onto +x.
Configuration from_edge_vectors(const std::vector<Point>& edges);

/// Configuration with edge i pointing at angle theta[i-1].
Configuration from_angles(const std::vector<double>& lengths, const std::vector<double>& theta);

/// Translates p_1 to the origin and rotates edge 1 onto the positive x-axis.
Configuration regauge(const Configuration& c);

/// max_i | |p_{i+1} - p_i| - l_i |, closing edge included.
double length_residual(const Linkage& L, const Configuration& c);

/// Largest joint displacement between two configurations of equal size.
double max_displacement(const Configuration& a, const Configuration& b);

bool in_gauge(const Configuration& c);

/// Counterclockwise triangle with sides |I|, |J|, |K| for v = (I, J, K),
/// edges grouped by part and returned in index order, gauged.
Configuration realize_vertex(const Linkage& L, const Vertex& v);

/// Point at parameter t along the convex quadrilateral flex of an edge;
/// t = 0 and t = 1 realize the endpoints given by edge_endpoints.
Configuration realize_edge_point(const Linkage& L, const EdgeLabel& e, double t);

/// For an edge label: the rotation r such that parts r, r+1, r+2 (X, Y, Z)
/// have X∪Y and Y∪Z short.
int quadrilateral_rotation(const Linkage& L, const EdgeLabel& e);

/// Length of the diagonal that parametrizes realize_edge_point at t.
double flex_diagonal(const Linkage& L, const EdgeLabel& e, double t);

struct Convexification {
  /// Vertices of the convex polygon, starting at the origin.
  std::vector<Point> polygon;
  /// Edge indices of each group, in counterclockwise slope order.
  std::vector<std::vector<int>> groups;
  /// Direction angle of each group, in (-pi, pi].
  std::vector<double> angles;
  CyclicPartition label;
};

inline constexpr double kDefaultAngleTolerance = 1e-7;

/// Sorts edges by direction and merges directions equal within `angle_tol`.
Convexification convexify(const Configuration& c, double angle_tol = kDefaultAngleTolerance);

CyclicPartition cell_label(const Configuration& c, double angle_tol = kDefaultAngleTolerance);

/// True when consecutive group edge vectors of the convexification all turn
/// strictly left (positive cross products) by more than `eps`.
bool strictly_convex(const Convexification& cv, double eps = 0.0);

/// A vertex (I, P, J) in the closure of `cell`, where P is the part with the
/// longest edge, J the maximal short run of parts following P and I the rest.
Vertex entry_vertex(const Linkage& L, const CyclicPartition& cell);

}  // namespace linknav
