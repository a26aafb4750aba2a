#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdiag/common.hpp"

namespace qdiag::logic {

/// Quantifier of a logic-tree node. `Root` marks the outermost block.
enum class Quantifier { Root, Exists, NotExists, ForAll };

/// "ROOT", "EXISTS", "NOT_EXISTS", "FOR_ALL" (the JSON spelling).
std::string_view to_string(Quantifier q);
std::optional<Quantifier> parse_quantifier(std::string_view text);

struct TableDecl {
  std::string alias;
  std::string table;
  auto operator<=>(const TableDecl&) const = default;
  bool operator==(const TableDecl&) const = default;
};

/// `lhs op rhs`; a selection predicate when rhs is a constant, a join
/// predicate otherwise.
struct Predicate {
  ColumnRef lhs;
  CompareOp op = CompareOp::Equal;
  Operand rhs;

  bool is_join() const { return std::holds_alternative<ColumnRef>(rhs); }
  bool is_selection() const { return !is_join(); }
  const ColumnRef& rhs_column() const { return std::get<ColumnRef>(rhs); }
  const Constant& rhs_constant() const { return std::get<Constant>(rhs); }
  bool references(const std::string& alias) const;

  auto operator<=>(const Predicate&) const = default;
  bool operator==(const Predicate&) const = default;
};

/// Orders the operands of a join predicate by (alias, attribute), swapping
/// the operator when the operands trade places. Selection predicates are
/// returned unchanged (the column is always on the left).
Predicate normalize(Predicate p);

/// Text form "L1.drinker <> L2.drinker", "B.color = 'red'".
std::string to_string(const Predicate& p);

struct LtNode {
  std::vector<TableDecl> tables;
  std::vector<Predicate> predicates;
  Quantifier quantifier = Quantifier::Exists;
  std::vector<LtNode> children;

  bool operator==(const LtNode&) const = default;
};

struct LogicTree {
  std::vector<ColumnRef> select_list;
  LtNode root{{}, {}, Quantifier::Root, {}};

  bool operator==(const LogicTree&) const = default;
};

/// Child indices from the root; the root itself has an empty path.
using NodePath = std::vector<std::size_t>;

/// Puts a tree into canonical form: predicates normalized, sorted and
/// deduplicated; tables sorted by alias; children sorted by their canonical
/// key. Two trees that differ only in child, table or predicate order become
/// identical.
void canonicalize(LogicTree& lt);

/// Deterministic compact serialization of a subtree, used as a sort key.
std::string canonical_key(const LtNode& node);

/// Depth of the deepest node; the root has depth 0.
int max_depth(const LogicTree& lt);

std::size_t node_count(const LogicTree& lt);

/// Pre-order walk with each node's path and depth.
void for_each_node(const LogicTree& lt,
                   const std::function<void(const LtNode&, const NodePath&)>& fn);

/// Node at `path`, or nullptr.
const LtNode* find_node(const LogicTree& lt, const NodePath& path);

std::string to_string(const NodePath& path);

}  // namespace qdiag::logic
