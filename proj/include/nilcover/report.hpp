#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "nilcover/pair_graph.hpp"
#include "nilcover/structure.hpp"

namespace nilcover {

/// {group, kind, elements, size, verified}
nlohmann::ordered_json to_json(const WitnessCertificate& cert);
/// {group, kind, parts: [[cycles...]...], coversGroup}
nlohmann::ordered_json cover_to_json(const FiniteGroup& g, std::span<const Subgroup> parts, ClassKind kind);
/// {order, generators}
nlohmann::ordered_json to_json(const Subgroup& h);
nlohmann::ordered_json to_json(const SylowReport& report);
nlohmann::ordered_json to_json(const StructureReport& report);

/// Two-space indented JSON followed by a newline.
std::string dump(const nlohmann::ordered_json& j);

}  // namespace nilcover
