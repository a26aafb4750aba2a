#pragma once

#include <string_view>

#include "qdiag/sql/ast.hpp"

namespace qdiag::sql {

/// Parses one SELECT statement of the supported fragment.
///
/// Accepted: SELECT column list (or `*` inside subqueries), comma-separated
/// FROM list with optional aliases, and a WHERE clause that is a conjunction
/// of comparisons, [NOT] EXISTS, [NOT] IN and ANY/ALL subqueries, each
/// optionally prefixed by NOT. A leading constant in a comparison is moved to
/// the right-hand side with the operator swapped.
///
/// Rejected with UnsupportedFeature: OR, GROUP BY, HAVING, ORDER BY, LIMIT,
/// DISTINCT, UNION/INTERSECT/EXCEPT, outer joins, aggregates, arithmetic and
/// `SELECT *` at the outermost level. Anything else outside the grammar is a
/// SyntaxError.
Query parse(std::string_view sql_text);

}  // namespace qdiag::sql
