#include "qdiag/logic/lower.hpp"

#include "qdiag/error.hpp"

namespace qdiag::logic {

namespace {

ColumnRef single_select_column(const sql::Query& sub) {
  if (sub.select_star || sub.select_list.size() != 1)
    throw MalformedSubquery("IN/ANY/ALL subquery must select exactly one column", sub.loc.at);
  return sub.select_list.front().ref;
}

Quantifier exists_or_not(bool negated) {
  return negated ? Quantifier::NotExists : Quantifier::Exists;
}

LtNode lower_block(const sql::Query& q, Quantifier quantifier) {
  LtNode node;
  node.quantifier = quantifier;
  for (const sql::TableRef& t : q.from_list) node.tables.push_back({t.alias, t.table_name});
  if (!q.where_clause) return node;

  for (const sql::Predicate& part : q.where_clause->parts) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, sql::Comparison>) {
            Predicate pred;
            pred.lhs = p.lhs.ref;
            pred.op = p.op;
            if (const auto* c = std::get_if<sql::Column>(&p.rhs))
              pred.rhs = c->ref;
            else
              pred.rhs = std::get<Constant>(p.rhs);
            node.predicates.push_back(std::move(pred));
          } else if constexpr (std::is_same_v<T, sql::Exists>) {
            node.children.push_back(lower_block(*p.subquery, exists_or_not(p.negated)));
          } else if constexpr (std::is_same_v<T, sql::In>) {
            ColumnRef sel = single_select_column(*p.subquery);
            LtNode child = lower_block(*p.subquery, exists_or_not(p.negated));
            child.predicates.push_back({p.column.ref, CompareOp::Equal, sel});
            node.children.push_back(std::move(child));
          } else {
            ColumnRef sel = single_select_column(*p.subquery);
            const bool all = p.mode == sql::QuantifierMode::All;
            // c op ALL (q)  ==  not exists row in q with (c complement(op) sel)
            LtNode child = lower_block(*p.subquery, exists_or_not(all != p.negated));
            child.predicates.push_back({p.column.ref, all ? complement(p.op) : p.op, sel});
            node.children.push_back(std::move(child));
          }
        },
        part.node);
  }
  return node;
}

}  // namespace

LogicTree build_logic_tree(const sql::Query& resolved) {
  LogicTree lt;
  lt.root = lower_block(resolved, Quantifier::Root);
  for (const sql::Column& c : resolved.select_list) lt.select_list.push_back(c.ref);
  canonicalize(lt);
  return lt;
}

}  // namespace qdiag::logic
