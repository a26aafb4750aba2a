#pragma once

#include <string>

#include "qdiag/sql/ast.hpp"

namespace qdiag::sql {

/// Canonical single-line SQL for an AST. `parse(print(q)) == q` for every
/// query the parser accepts.
std::string print(const Query& q);

}  // namespace qdiag::sql
