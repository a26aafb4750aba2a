#include "qdiag/logic/sql_render.hpp"

#include <stdexcept>

namespace qdiag::logic {

namespace {

void block(const LtNode& n, const std::vector<ColumnRef>* select, std::string& out);

std::string predicate_sql(const Predicate& p) {
  std::string out = to_string(p.lhs) + " " + std::string(to_string(p.op)) + " ";
  out += p.is_join() ? to_string(p.rhs_column()) : to_sql(p.rhs_constant());
  return out;
}

// Under a FOR_ALL parent the child's sense flips:
//   for all S (p -> exists T q)  ==  not exists S (p and not exists T q)
bool prints_negated(const LtNode& n, bool parent_is_forall) {
  switch (n.quantifier) {
    case Quantifier::Exists: return parent_is_forall;
    case Quantifier::NotExists: return !parent_is_forall;
    case Quantifier::ForAll:
      if (n.children.size() != 1)
        throw std::invalid_argument("FOR_ALL node needs exactly one child to be written without disjunction");
      return !parent_is_forall;
    case Quantifier::Root: break;
  }
  throw std::invalid_argument("ROOT quantifier below the root");
}

void block(const LtNode& n, const std::vector<ColumnRef>* select, std::string& out) {
  out += "SELECT ";
  if (select == nullptr) {
    out += '*';
  } else {
    for (std::size_t i = 0; i < select->size(); ++i) {
      if (i) out += ", ";
      out += to_string((*select)[i]);
    }
  }
  out += " FROM ";
  for (std::size_t i = 0; i < n.tables.size(); ++i) {
    if (i) out += ", ";
    out += n.tables[i].table;
    if (n.tables[i].alias != n.tables[i].table) out += " " + n.tables[i].alias;
  }
  std::vector<std::string> parts;
  for (const Predicate& p : n.predicates) parts.push_back(predicate_sql(p));
  const bool forall = n.quantifier == Quantifier::ForAll;
  for (const LtNode& c : n.children) {
    std::string sub = prints_negated(c, forall) ? "NOT EXISTS (" : "EXISTS (";
    block(c, nullptr, sub);
    sub += ')';
    parts.push_back(std::move(sub));
  }
  if (parts.empty()) return;
  out += " WHERE ";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " AND ";
    out += parts[i];
  }
}

}  // namespace

std::string render_sql(const LogicTree& lt) {
  std::string out;
  block(lt.root, &lt.select_list, out);
  return out;
}

}  // namespace qdiag::logic
