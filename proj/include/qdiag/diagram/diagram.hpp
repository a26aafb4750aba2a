#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdiag/common.hpp"
#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::diagram {

using logic::Quantifier;

/// Alias used for the SELECT box in edge endpoints.
inline constexpr std::string_view kSelectAlias = "SELECT";

/// One line of a table box: a plain attribute, or a selection predicate
/// `attribute op constant` written in place.
struct Row {
  enum class Kind { Attribute, Selection };
  Kind kind = Kind::Attribute;
  std::string attribute;
  CompareOp op = CompareOp::Equal;  // selection rows only
  Constant constant;                // selection rows only

  static Row plain(std::string attribute) { return {Kind::Attribute, std::move(attribute), {}, {}}; }
  static Row selection(std::string attribute, CompareOp op, Constant c) {
    return {Kind::Selection, std::move(attribute), op, std::move(c)};
  }
  bool is_selection() const { return kind == Kind::Selection; }
  /// "drinker" or "color = 'red'".
  std::string text() const;

  bool operator==(const Row&) const = default;
};

struct TableBox {
  std::string alias;
  std::string table_name;
  std::vector<Row> rows;

  /// Index of the attribute row named `attribute`, if any.
  std::optional<std::size_t> attribute_row(const std::string& attribute) const;

  bool operator==(const TableBox&) const = default;
};

struct TableGroup {
  int id = 0;
  Quantifier quantifier = Quantifier::Root;
  int depth = 0;
  std::optional<int> parent;
  std::vector<TableBox> tables;

  bool operator==(const TableGroup&) const = default;
};

/// Edge endpoint. For the SELECT box `alias` is kSelectAlias and `attribute`
/// is the SELECT row label.
struct Endpoint {
  std::string alias;
  std::string attribute;

  auto operator<=>(const Endpoint&) const = default;
  bool operator==(const Endpoint&) const = default;
};

struct Edge {
  Endpoint from;
  Endpoint to;
  bool directed = false;
  /// Operator read from `from` to `to`; absent for equijoins.
  std::optional<CompareOp> label;
  bool select_link = false;

  /// The comparison the edge stands for (label or `=`).
  CompareOp op() const { return label.value_or(CompareOp::Equal); }

  bool operator==(const Edge&) const = default;
};

struct SelectBox {
  /// Attribute labels in select-list order. Links are the select_link edges.
  std::vector<std::string> rows;

  bool operator==(const SelectBox&) const = default;
};

/// Groups are listed breadth-first and `groups[i].id == i`; join edges come
/// first in canonical order, followed by one select link per SELECT row.
struct Diagram {
  std::vector<TableGroup> groups;
  std::vector<Edge> edges;
  SelectBox select_box;

  /// Group holding the table `alias`, or nullptr.
  const TableGroup* group_of(const std::string& alias) const;
  const TableBox* box(const std::string& alias) const;

  bool operator==(const Diagram&) const = default;
};

/// "L1" for a single table, "F+L+S" for several.
std::string group_name(const TableGroup& g);

/// Structural sanity checks on a (possibly hand-written) diagram: ids,
/// unique aliases, edge endpoints naming existing rows, select links. Throws
/// InvalidDiagram with stage "load".
void check_well_formed(const Diagram& d);

}  // namespace qdiag::diagram
