#pragma once

#include "linknav/geometry.hpp"
#include "linknav/motion.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace linknav {

/// SVG user-space box (y already flipped so that y points up on screen).
struct ViewBox {
  double x = 0, y = 0, width = 1, height = 1;
};

/// Bounding box of all joints of all frames plus 5% padding.
ViewBox common_viewbox(const std::vector<const Configuration*>& frames);

std::string render_frame_svg(const Configuration& c, const ViewBox& box);

/// One SVG whose bars and joints move with SMIL animation.
std::string render_animated_svg(const std::vector<const Configuration*>& frames, const ViewBox& box, double fps);

struct RenderResult {
  std::vector<std::filesystem::path> files;
  ViewBox box;
};

/// Writes frame_00000.svg, ... (and motion.svg when animated) into `dir`.
RenderResult render_motion(const Motion& m, const std::filesystem::path& dir, double fps, bool animated);

}  // namespace linknav
