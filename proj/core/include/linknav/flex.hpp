#pragma once

#include "linknav/geometry.hpp"
#include "linknav/label.hpp"
#include "linknav/linkage.hpp"

#include <string>
#include <vector>

namespace linknav {

struct FlexOptions {
  double length_tolerance = 1e-9;  ///< relative to |L|
  double angle_tolerance = kDefaultAngleTolerance;
  double continuity = 0.05;  ///< max joint displacement between frames, relative to |L|
  int samples = 64;
  double snap_tolerance = 1e-6;  ///< relative per-edge length error accepted on input
  double min_step = 1e-6;
  int newton_iterations = 60;
};

struct Provenance {
  enum class Kind { Edge, Cell, Connector };
  Kind kind = Kind::Edge;
  CyclicPartition label;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

std::string to_string(Provenance::Kind kind);

struct MotionSegment {
  Provenance provenance;
  std::vector<double> params;
  std::vector<Configuration> frames;
};

MotionSegment reversed(MotionSegment s);

class HomotopyStalled : public NumericError {
 public:
  HomotopyStalled(MotionSegment partial, double reached, const std::string& what)
      : NumericError(ErrorCode::HomotopyStalled, what), partial_(std::move(partial)), reached_(reached) {}
  const MotionSegment& partial() const noexcept { return partial_; }
  double reached() const noexcept { return reached_; }

 private:
  MotionSegment partial_;
  double reached_;
};

/// Samples realize_edge_point on a uniform grid (refined where frames jump
/// more than the continuity bound) and checks closure and strict convexity.
MotionSegment edge_flex(const Linkage& L, const EdgeLabel& e, const FlexOptions& opts = {});

/// Continuous motion inside the cell of c to the vertex v in its closure by
/// angle interpolation with minimum-norm closure correction.
MotionSegment intra_cell_flex(const Linkage& L, const Configuration& c, const Vertex& v, const FlexOptions& opts = {});

/// Rescales edges to the exact lengths and restores closure. Throws
/// InputError(LengthMismatch) above the snap tolerance.
Configuration snap_configuration(const Linkage& L, const Configuration& c, const FlexOptions& opts = {});

}  // namespace linknav
