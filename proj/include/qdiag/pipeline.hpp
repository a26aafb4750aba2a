#pragma once

#include <string_view>

#include "qdiag/logic/logic_tree.hpp"
#include "qdiag/sql/scope.hpp"

namespace qdiag {

/// parse, resolve_scopes and build_logic_tree. The tree is not simplified.
logic::LogicTree compile(std::string_view sql_text);

/// As compile, also returning the resolved query with its alias renames.
logic::LogicTree compile(std::string_view sql_text, sql::ResolvedQuery& resolved);

}  // namespace qdiag
