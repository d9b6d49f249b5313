#include "linknav/flex.hpp"

#include "linknav/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace linknav {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Newton projection of angles onto Σ w_k (cos φ_k, sin φ_k) = 0, minimum norm
// in the metric Σ w_k δ_k². The update is then the same smooth function of the
// angle for every k, so equal angles stay equal and small steps keep the order.
bool close_angles(std::vector<double>& phi, const std::vector<double>& w, double tol, int max_iter) {
  for (int it = 0; it <= max_iter; ++it) {
    double rx = 0, ry = 0, a = 0, b = 0, d = 0;
    for (std::size_t k = 0; k < phi.size(); ++k) {
      const double c = std::cos(phi[k]), s = std::sin(phi[k]);
      rx += w[k] * c;
      ry += w[k] * s;
      // J W⁻¹ Jᵀ with J_k = w_k (-sin, cos).
      a += w[k] * s * s;
      b -= w[k] * s * c;
      d += w[k] * c * c;
    }
    if (std::hypot(rx, ry) <= tol) return true;
    if (it == max_iter) break;
    const double det = a * d - b * b;
    if (!(std::abs(det) > 1e-300)) return false;
    const double lx = (d * rx - b * ry) / det, ly = (-b * rx + a * ry) / det;
    for (std::size_t k = 0; k < phi.size(); ++k) phi[k] -= -std::sin(phi[k]) * lx + std::cos(phi[k]) * ly;
  }
  return false;
}

double lifted(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

}  // namespace

std::string to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::Edge: return "edge";
    case Provenance::Kind::Cell: return "cell";
    case Provenance::Kind::Connector: return "connector";
  }
  return "edge";
}

MotionSegment reversed(MotionSegment s) {
  std::reverse(s.frames.begin(), s.frames.end());
  std::reverse(s.params.begin(), s.params.end());
  for (double& t : s.params) t = 1.0 - t;
  return s;
}

Configuration snap_configuration(const Linkage& L, const Configuration& c, const FlexOptions& opts) {
  if (static_cast<int>(c.size()) != L.size())
    throw InputError(ErrorCode::LengthMismatch, "configuration has " + std::to_string(c.size()) + " joints, linkage has " +
                                                    std::to_string(L.size()) + " edges");
  const auto len = L.lengths_double();
  const auto e = edge_vectors(c);
  std::vector<double> theta(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double got = e[i].norm();
    if (!(std::abs(got - len[i]) <= opts.snap_tolerance * len[i]))
      throw InputError(ErrorCode::LengthMismatch, "edge " + std::to_string(i + 1) + " has length " + std::to_string(got) +
                                                      ", expected " + std::to_string(len[i]));
    theta[i] = std::atan2(e[i].y, e[i].x);
  }
  const double tol = 1e-3 * opts.length_tolerance * L.perimeter_double();
  if (!close_angles(theta, len, tol, opts.newton_iterations))
    throw NumericError(ErrorCode::LengthMismatch, "could not restore closure of the input configuration");
  return from_angles(len, theta);
}

MotionSegment edge_flex(const Linkage& L, const EdgeLabel& e, const FlexOptions& opts) {
  require_admissible(L, e, 4, ErrorCode::InadmissibleEdge);
  const double scale = L.perimeter_double();
  const double len_tol = opts.length_tolerance * scale, jump = opts.continuity * scale;
  const int m = std::max(1, opts.samples);
  MotionSegment seg;
  seg.provenance = {Provenance::Kind::Edge, e};
  for (int i = 0; i <= m; ++i) {
    const double t = static_cast<double>(i) / m;
    seg.params.push_back(t);
    seg.frames.push_back(realize_edge_point(L, e, t));
  }
  // Refine intervals whose frames jump too far.
  for (std::size_t i = 0; i + 1 < seg.frames.size();) {
    if (max_displacement(seg.frames[i], seg.frames[i + 1]) > jump && seg.params[i + 1] - seg.params[i] > opts.min_step) {
      const double t = 0.5 * (seg.params[i] + seg.params[i + 1]);
      seg.params.insert(seg.params.begin() + static_cast<long>(i) + 1, t);
      seg.frames.insert(seg.frames.begin() + static_cast<long>(i) + 1, realize_edge_point(L, e, t));
    } else {
      ++i;
    }
  }
  double prev_diag = flex_diagonal(L, e, 0.0);
  const double direction = flex_diagonal(L, e, 1.0) - prev_diag;
  for (std::size_t i = 0; i < seg.frames.size(); ++i) {
    const Configuration& f = seg.frames[i];
    if (length_residual(L, f) > len_tol)
      throw NumericError(ErrorCode::LengthMismatch, "edge flex frame violates edge lengths");
    const double t = seg.params[i];
    if (i > 0) {
      if (max_displacement(seg.frames[i - 1], f) > jump)
        throw NumericError(ErrorCode::ConvexityLost, "edge flex frames are not continuous");
      const double diag = flex_diagonal(L, e, t);
      if (!((diag - prev_diag) * direction > 0))
        throw NumericError(ErrorCode::ConvexityLost, "flex diagonal is not monotone");
      prev_diag = diag;
    }
    if (t > 0.0 && t < 1.0) {
      const Convexification cv = convexify(f, opts.angle_tolerance);
      if (!(cv.label == e) || !strictly_convex(cv))
        throw NumericError(ErrorCode::ConvexityLost, "quadrilateral at t=" + std::to_string(t) + " is not strictly convex");
    }
  }
  return seg;
}

MotionSegment intra_cell_flex(const Linkage& L, const Configuration& c, const Vertex& v, const FlexOptions& opts) {
  require_admissible(L, v, 3, ErrorCode::InadmissibleVertex);
  const double scale = L.perimeter_double();
  const double len_tol = opts.length_tolerance * scale, jump = opts.continuity * scale;
  const Configuration start = regauge(c);
  if (length_residual(L, start) > len_tol)
    throw InputError(ErrorCode::LengthMismatch, "start configuration violates edge lengths; snap it first");
  const Convexification cv = convexify(start, opts.angle_tolerance);
  if (!refines(cv.label, v))
    throw InputError(ErrorCode::InvalidInput, v.to_string() + " is not in the closure of cell " + cv.label.to_string());
  const Configuration target = realize_vertex(L, v);

  MotionSegment seg;
  seg.provenance = {Provenance::Kind::Cell, cv.label};
  seg.params.push_back(0.0);
  seg.frames.push_back(start);
  if (max_displacement(start, target) <= len_tol) return seg;

  // Groups in slope order starting at the first group of v's first part.
  const std::size_t m = cv.groups.size();
  auto in_first = [&](std::size_t g) { return v[0].contains(cv.groups[g].front()); };
  std::size_t s = 0;
  while (!(in_first(s) && !in_first((s + m - 1) % m))) ++s;
  const auto len = L.lengths_double();
  std::vector<std::size_t> order(m);
  std::vector<double> weight(m), phi(m), psi(m);
  for (std::size_t k = 0; k < m; ++k) {
    order[k] = (s + k) % m;
    for (int i : cv.groups[order[k]]) weight[k] += len[static_cast<std::size_t>(i - 1)];
  }
  phi[0] = cv.angles[order[0]];
  for (std::size_t k = 1; k < m; ++k) phi[k] = phi[k - 1] + lifted(cv.angles[order[k]] - cv.angles[order[k - 1]]);

  // Target directions: part q of v points at alpha[q], lifted counterclockwise.
  const auto te = edge_vectors(target);
  double alpha[3];
  for (std::size_t q = 0; q < 3; ++q) {
    const Point d = te[static_cast<std::size_t>(v[q].lowest() - 1)];
    alpha[q] = std::atan2(d.y, d.x);
  }
  alpha[1] = alpha[0] + lifted(alpha[1] - alpha[0]);
  alpha[2] = alpha[1] + lifted(alpha[2] - alpha[1]);
  // Anchor: the group holding edge 1 keeps its lifted angle.
  std::size_t g1 = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (std::find(cv.groups[order[k]].begin(), cv.groups[order[k]].end(), 1) != cv.groups[order[k]].end()) g1 = k;
  const double offset = phi[g1] - alpha[0];
  for (std::size_t k = 0; k < m; ++k) psi[k] = alpha[v.part_of(cv.groups[order[k]].front())] + offset;

  auto lerp = [&](double tau) {
    std::vector<double> out(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = (1.0 - tau) * phi[k] + tau * psi[k];
    return out;
  };
  auto to_config = [&](const std::vector<double>& g) {
    std::vector<double> theta(len.size());
    for (std::size_t k = 0; k < m; ++k)
      for (int i : cv.groups[order[k]]) theta[static_cast<std::size_t>(i - 1)] = g[k];
    return from_angles(len, theta);
  };
  const double close_tol = 1e-3 * len_tol;
  const double h_max = 1.0 / std::max(1, opts.samples);
  std::vector<double> cur = phi;
  double tau = 0.0, h = h_max;
  while (tau < 1.0) {
    const double next = std::min(1.0, tau + h);
    // Interpolated angles plus the current deviation, decaying to zero at 1.
    std::vector<double> guess = lerp(next);
    const std::vector<double> here = lerp(tau);
    const double keep = next >= 1.0 ? 0.0 : (1.0 - next) / (1.0 - tau);
    for (std::size_t k = 0; k < m; ++k) guess[k] += keep * (cur[k] - here[k]);
    bool ok = close_angles(guess, weight, close_tol, opts.newton_iterations);
    if (ok) {
      for (std::size_t k = 0; k + 1 < m && ok; ++k) ok = guess[k + 1] - guess[k] >= -opts.angle_tolerance;
      ok = ok && guess[m - 1] - guess[0] <= kTwoPi + opts.angle_tolerance;
    }
    Configuration frame;
    if (ok) {
      frame = to_config(guess);
      ok = max_displacement(seg.frames.back(), frame) <= jump && length_residual(L, frame) <= len_tol;
    }
    if (!ok) {
      h *= 0.5;
      if (h < opts.min_step)
        throw HomotopyStalled(seg, tau, "intra-cell flex stalled at parameter " + std::to_string(tau));
      continue;
    }
    cur = std::move(guess);
    tau = next;
    seg.params.push_back(tau);
    seg.frames.push_back(std::move(frame));
    h = std::min(h_max, 2.0 * h);
  }
  if (max_displacement(seg.frames.back(), target) > len_tol)
    throw HomotopyStalled(seg, 1.0, "intra-cell flex ended away from " + v.to_string());
  seg.frames.back() = target;
  return seg;
}

}  // namespace linknav
