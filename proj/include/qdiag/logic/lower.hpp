#pragma once

#include "qdiag/logic/logic_tree.hpp"
#include "qdiag/sql/ast.hpp"

namespace qdiag::logic {

/// Lowers a scope-resolved AST to its logic tree.
///
/// Every query block becomes one node. EXISTS gives an EXISTS child and NOT
/// EXISTS a NOT_EXISTS child. `c IN (q)` becomes an EXISTS child that also
/// carries `c = sel(q)`; `c op ANY (q)` carries `c op sel(q)`; `c op ALL (q)`
/// becomes NOT_EXISTS carrying the complemented comparison. NOT IN and a NOT
/// prefix swap EXISTS and NOT_EXISTS. The result never contains FOR_ALL and
/// is canonical.
///
/// Throws MalformedSubquery when an IN/ANY/ALL subquery does not select
/// exactly one column.
LogicTree build_logic_tree(const sql::Query& resolved);

}  // namespace qdiag::logic
