#pragma once

#include "linknav/geometry.hpp"
#include "linknav/label.hpp"
#include "linknav/linkage.hpp"
#include "linknav/motion.hpp"
#include "linknav/move.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <utility>

namespace linknav {

using Json = nlohmann::json;

/// Rounds to 12 significant digits; negative zero becomes zero.
double round12(double v);

/// Objects are emitted with sorted keys, so equal values give equal text.
std::string dump_json(const Json& j, bool pretty = true);
Json parse_json(std::string_view text);

Json linkage_to_json(const Linkage& L);
/// Accepts {"lengths": [...]} with "p", "p/q", decimal strings or integers.
Linkage linkage_from_json(const Json& j);

Json label_to_json(const CyclicPartition& p);
CyclicPartition label_from_json(const Json& j);
/// "[[1,4,7],[2,5],[3,6]]" or "1,4,7|2,5|3,6".
CyclicPartition parse_label(std::string_view text);

Json path_to_json(const Path& p);
/// Rebuilds the path from the listed moves and checks the listed labels.
Path path_from_json(const Linkage& L, const Json& j);

Json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const Json& j);

Json motion_to_json(const Linkage& L, const Motion& m);
std::pair<Linkage, Motion> motion_from_json(const Json& j);

}  // namespace linknav
