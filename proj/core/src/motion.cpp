#include "linknav/motion.hpp"

#include "linknav/error.hpp"
#include "linknav/navigator.hpp"

#include <algorithm>

namespace linknav {

std::size_t Motion::frame_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.frames.size();
  return n;
}

MotionStats motion_stats(const Linkage& L, const Motion& m) {
  MotionStats st;
  st.segments = m.segments.size();
  const Configuration* last = nullptr;
  for (const auto& seg : m.segments) {
    for (std::size_t i = 0; i < seg.frames.size(); ++i) {
      const Configuration& f = seg.frames[i];
      ++st.frames;
      st.max_length_residual = std::max(st.max_length_residual, length_residual(L, f));
      st.gauge_ok = st.gauge_ok && in_gauge(f);
      if (i > 0) st.max_step = std::max(st.max_step, max_displacement(seg.frames[i - 1], f));
    }
    if (last && !seg.frames.empty()) st.max_junction_gap = std::max(st.max_junction_gap, max_displacement(*last, seg.frames.front()));
    if (!seg.frames.empty()) last = &seg.frames.back();
  }
  return st;
}

Motion synthesize_motion(const Linkage& L, const Configuration& s, const Configuration& t, const FlexOptions& opts) {
  const Configuration s0 = snap_configuration(L, s, opts);
  const Configuration t0 = snap_configuration(L, t, opts);
  const double len_tol = opts.length_tolerance * L.perimeter_double();
  Motion motion;
  const CyclicPartition s_cell = cell_label(s0, opts.angle_tolerance);
  if (max_displacement(s0, t0) <= len_tol) {
    MotionSegment only;
    only.provenance = {Provenance::Kind::Connector, s_cell};
    only.params = {0.0};
    only.frames = {s0};
    motion.segments.push_back(std::move(only));
    motion.plan = Path{entry_vertex(L, s_cell), {}};
    return motion;
  }
  const CyclicPartition t_cell = cell_label(t0, opts.angle_tolerance);
  const Vertex vs = entry_vertex(L, s_cell), vt = entry_vertex(L, t_cell);
  const PlanReport report = plan(L, vs, vt);
  motion.plan = report.path;

  MotionSegment enter = intra_cell_flex(L, s0, vs, opts);
  enter.provenance.kind = Provenance::Kind::Connector;
  motion.segments.push_back(std::move(enter));

  Vertex at = vs;
  for (const Step& step : report.path.steps) {
    MotionSegment seg = edge_flex(L, step.edge, opts);
    const auto ends = edge_endpoints(L, step.edge);
    if (!(ends.first == at)) seg = reversed(std::move(seg));
    motion.segments.push_back(std::move(seg));
    at = step.vertex;
  }

  MotionSegment leave = reversed(intra_cell_flex(L, t0, vt, opts));
  leave.provenance.kind = Provenance::Kind::Connector;
  motion.segments.push_back(std::move(leave));

  const MotionStats st = motion_stats(L, motion);
  if (st.max_junction_gap > len_tol)
    throw NumericError(ErrorCode::HomotopyStalled, "segment junctions do not match");
  return motion;
}

}  // namespace linknav
