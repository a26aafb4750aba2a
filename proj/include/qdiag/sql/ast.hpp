#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "qdiag/common.hpp"
#include "qdiag/util/box.hpp"

namespace qdiag::sql {

/// Source position of an AST node. Never participates in structural equality,
/// so a re-parsed printout compares equal to the original tree.
struct NodeLocation {
  SourceLocation at;
  bool operator==(const NodeLocation&) const { return true; }
};

struct Column {
  ColumnRef ref;
  NodeLocation loc;
  bool operator==(const Column&) const = default;
};

struct TableRef {
  std::string table_name;
  std::string alias;  ///< equals table_name when there was no alias
  NodeLocation loc;
  bool operator==(const TableRef&) const = default;
};

struct Query;

enum class QuantifierMode { Any, All };

struct Comparison {
  Column lhs;
  CompareOp op = CompareOp::Equal;
  std::variant<Column, Constant> rhs;
  bool operator==(const Comparison&) const = default;
};

struct Exists {
  bool negated = false;
  Box<Query> subquery;
  bool operator==(const Exists&) const = default;
};

struct In {
  bool negated = false;
  Column column;
  Box<Query> subquery;
  bool operator==(const In&) const = default;
};

struct Quantified {
  bool negated = false;
  Column column;
  CompareOp op = CompareOp::Equal;
  QuantifierMode mode = QuantifierMode::Any;
  Box<Query> subquery;
  bool operator==(const Quantified&) const = default;
};

/// One conjunct of a WHERE clause. Nested conjunctions are flattened by the
/// parser, so a Predicate is never itself a conjunction.
struct Predicate {
  std::variant<Comparison, Exists, In, Quantified> node;
  NodeLocation loc;
  bool operator==(const Predicate&) const = default;
};

struct Conjunction {
  std::vector<Predicate> parts;
  bool operator==(const Conjunction&) const = default;
};

struct Query {
  /// Empty together with `select_star` for `SELECT *`.
  std::vector<Column> select_list;
  bool select_star = false;
  std::vector<TableRef> from_list;
  std::optional<Conjunction> where_clause;
  NodeLocation loc;
  bool operator==(const Query&) const = default;
};

/// Visits `q` and every nested subquery in document order.
template <class F>
void for_each_block(const Query& q, F&& fn) {
  fn(q);
  if (!q.where_clause) return;
  for (const Predicate& p : q.where_clause->parts) {
    std::visit(
        [&](const auto& node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (!std::is_same_v<T, Comparison>) for_each_block(*node.subquery, fn);
        },
        p.node);
  }
}

}  // namespace qdiag::sql
