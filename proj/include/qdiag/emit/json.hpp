#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::emit {

nlohmann::ordered_json diagram_to_json(const diagram::Diagram& d);

/// Pretty-printed diagram_to_json with a trailing newline.
std::string emit_json(const diagram::Diagram& d);

/// Inverse of diagram_to_json. Throws InvalidDiagram (stage "load") on
/// malformed input, including anything check_well_formed rejects.
diagram::Diagram diagram_from_json(const nlohmann::ordered_json& j);
diagram::Diagram load_diagram(std::string_view json_text);

}  // namespace qdiag::emit
