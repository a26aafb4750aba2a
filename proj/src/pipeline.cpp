#include "qdiag/pipeline.hpp"

#include "qdiag/logic/lower.hpp"
#include "qdiag/sql/parser.hpp"

namespace qdiag {

logic::LogicTree compile(std::string_view sql_text, sql::ResolvedQuery& resolved) {
  resolved = sql::resolve_scopes(sql::parse(sql_text));
  return logic::build_logic_tree(resolved.query);
}

logic::LogicTree compile(std::string_view sql_text) {
  sql::ResolvedQuery resolved;
  return compile(sql_text, resolved);
}

}  // namespace qdiag
