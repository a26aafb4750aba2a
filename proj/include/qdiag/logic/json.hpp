#pragma once

#include <json.hpp>

#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

/// Canonical JSON: node = {tables, predicates, quantifier, children}, the
/// root additionally carries select_list. Input is canonicalized first.
nlohmann::ordered_json to_json(const LogicTree& lt);

/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument on bad input.
LogicTree logic_tree_from_json(const nlohmann::ordered_json& j);

}  // namespace qdiag::logic
