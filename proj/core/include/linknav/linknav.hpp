#pragma once

#include "linknav/cell_complex.hpp"
#include "linknav/error.hpp"
#include "linknav/flex.hpp"
#include "linknav/geometry.hpp"
#include "linknav/index_set.hpp"
#include "linknav/json_io.hpp"
#include "linknav/label.hpp"
#include "linknav/linkage.hpp"
#include "linknav/motion.hpp"
#include "linknav/move.hpp"
#include "linknav/navigator.hpp"
#include "linknav/rational.hpp"
#include "linknav/svg.hpp"

namespace linknav {

inline constexpr const char* kVersion = LINKNAV_VERSION;

}  // namespace linknav
