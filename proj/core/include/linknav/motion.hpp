#pragma once

#include "linknav/flex.hpp"
#include "linknav/move.hpp"

#include <vector>

namespace linknav {

struct Motion {
  std::vector<MotionSegment> segments;
  /// The graph path whose edges produced the edge segments.
  Path plan;

  std::size_t frame_count() const;
};

struct MotionStats {
  std::size_t segments = 0;
  std::size_t frames = 0;
  double max_length_residual = 0.0;
  double max_step = 0.0;           ///< inside segments
  double max_junction_gap = 0.0;   ///< between consecutive segments
  bool gauge_ok = true;
};

MotionStats motion_stats(const Linkage& L, const Motion& m);

/// Connector into the cell's entry vertex, one edge flex per planned step,
/// and the reversed connector out to T.
Motion synthesize_motion(const Linkage& L, const Configuration& s, const Configuration& t, const FlexOptions& opts = {});

}  // namespace linknav
