#include "qdiag/logic/json.hpp"

#include <stdexcept>

namespace qdiag::logic {

using nlohmann::ordered_json;

namespace {

ordered_json column_json(const ColumnRef& c) { return {{"alias", c.alias}, {"attribute", c.attribute}}; }

ordered_json operand_json(const Operand& o) {
  if (const auto* c = std::get_if<ColumnRef>(&o)) return column_json(*c);
  const Constant& k = std::get<Constant>(o);
  return {{"kind", k.kind == Constant::Kind::String ? "string" : "number"}, {"literal", k.literal}};
}

ordered_json node_json(const LtNode& n) {
  ordered_json j;
  j["tables"] = ordered_json::array();
  for (const TableDecl& t : n.tables) j["tables"].push_back({{"alias", t.alias}, {"table", t.table}});
  j["predicates"] = ordered_json::array();
  for (const Predicate& p : n.predicates)
    j["predicates"].push_back(
        {{"lhs", column_json(p.lhs)}, {"op", std::string(to_string(p.op))}, {"rhs", operand_json(p.rhs)}});
  j["quantifier"] = std::string(to_string(n.quantifier));
  j["children"] = ordered_json::array();
  for (const LtNode& c : n.children) j["children"].push_back(node_json(c));
  return j;
}

ColumnRef column_from(const ordered_json& j) {
  return {j.at("alias").get<std::string>(), j.at("attribute").get<std::string>()};
}

Operand operand_from(const ordered_json& j) {
  if (!j.contains("kind")) return column_from(j);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "string" && kind != "number") throw std::invalid_argument("bad constant kind: " + kind);
  return Constant{kind == "string" ? Constant::Kind::String : Constant::Kind::Number,
                  j.at("literal").get<std::string>()};
}

LtNode node_from(const ordered_json& j) {
  LtNode n;
  for (const auto& t : j.at("tables")) n.tables.push_back({t.at("alias"), t.at("table")});
  for (const auto& p : j.at("predicates")) {
    auto op = parse_compare_op(p.at("op").get<std::string>());
    if (!op) throw std::invalid_argument("bad operator: " + p.at("op").get<std::string>());
    n.predicates.push_back({column_from(p.at("lhs")), *op, operand_from(p.at("rhs"))});
  }
  auto q = parse_quantifier(j.at("quantifier").get<std::string>());
  if (!q) throw std::invalid_argument("bad quantifier: " + j.at("quantifier").get<std::string>());
  n.quantifier = *q;
  for (const auto& c : j.at("children")) n.children.push_back(node_from(c));
  return n;
}

}  // namespace

ordered_json to_json(const LogicTree& lt) {
  LogicTree c = lt;
  canonicalize(c);
  ordered_json j = node_json(c.root);
  j["select_list"] = ordered_json::array();
  for (const ColumnRef& s : c.select_list) j["select_list"].push_back(column_json(s));
  return j;
}

LogicTree logic_tree_from_json(const ordered_json& j) {
  LogicTree lt;
  lt.root = node_from(j);
  for (const auto& s : j.at("select_list")) lt.select_list.push_back(column_from(s));
  canonicalize(lt);
  return lt;
}

}  // namespace qdiag::logic
