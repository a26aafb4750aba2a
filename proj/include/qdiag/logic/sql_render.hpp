#pragma once

#include <string>

#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

/// SQL text whose logic tree is `lt` again (up to canonical form). EXISTS and
/// NOT_EXISTS nodes print as [NOT] EXISTS subqueries; a FOR_ALL node and its
/// EXISTS child print as the equivalent pair of NOT EXISTS subqueries.
std::string render_sql(const LogicTree& lt);

}  // namespace qdiag::logic
