#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdiag/sql/ast.hpp"

namespace qdiag::sql {

struct AliasRename {
  std::size_t block = 0;  ///< query block index in document order, root = 0
  std::string original;
  std::string renamed;
  bool operator==(const AliasRename&) const = default;
};

struct ResolvedQuery {
  Query query;
  std::vector<AliasRename> renames;
};

/// Qualifies every column reference with the alias it binds to and makes
/// table aliases unique across the whole query.
///
/// Qualified references bind to the innermost enclosing block declaring the
/// alias; sibling blocks are not visible. An unqualified attribute binds to
/// the table of its own block when that block has exactly one table and is
/// ambiguous otherwise (there is no catalog to consult). A repeated alias
/// keeps its name at its first occurrence in document order; later
/// occurrences get the smallest numeric suffix (from 2) that is not an alias
/// anywhere in the query.
///
/// Throws UnknownAlias, AmbiguousColumn, or SyntaxError for an alias
/// declared twice in one FROM list.
ResolvedQuery resolve_scopes(const Query& ast);

}  // namespace qdiag::sql
