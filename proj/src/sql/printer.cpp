#include "qdiag/sql/printer.hpp"

namespace qdiag::sql {

namespace {

void print_query(const Query& q, std::string& out);

std::string column(const Column& c) { return to_string(c.ref); }

void print_predicate(const Predicate& p, std::string& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Comparison>) {
          out += column(node.lhs);
          out += ' ';
          out += to_string(node.op);
          out += ' ';
          if (const auto* c = std::get_if<Column>(&node.rhs))
            out += column(*c);
          else
            out += to_sql(std::get<Constant>(node.rhs));
        } else if constexpr (std::is_same_v<T, Exists>) {
          out += node.negated ? "NOT EXISTS (" : "EXISTS (";
          print_query(*node.subquery, out);
          out += ')';
        } else if constexpr (std::is_same_v<T, In>) {
          out += column(node.column);
          out += node.negated ? " NOT IN (" : " IN (";
          print_query(*node.subquery, out);
          out += ')';
        } else {
          if (node.negated) out += "NOT ";
          out += column(node.column);
          out += ' ';
          out += to_string(node.op);
          out += node.mode == QuantifierMode::All ? " ALL (" : " ANY (";
          print_query(*node.subquery, out);
          out += ')';
        }
      },
      p.node);
}

void print_query(const Query& q, std::string& out) {
  out += "SELECT ";
  if (q.select_star) {
    out += '*';
  } else {
    for (std::size_t i = 0; i < q.select_list.size(); ++i) {
      if (i) out += ", ";
      out += column(q.select_list[i]);
    }
  }
  out += " FROM ";
  for (std::size_t i = 0; i < q.from_list.size(); ++i) {
    if (i) out += ", ";
    const TableRef& t = q.from_list[i];
    out += t.table_name;
    if (t.alias != t.table_name) {
      out += ' ';
      out += t.alias;
    }
  }
  if (q.where_clause) {
    out += " WHERE ";
    for (std::size_t i = 0; i < q.where_clause->parts.size(); ++i) {
      if (i) out += " AND ";
      print_predicate(q.where_clause->parts[i], out);
    }
  }
}

}  // namespace

std::string print(const Query& q) {
  std::string out;
  print_query(q, out);
  return out;
}

}  // namespace qdiag::sql
