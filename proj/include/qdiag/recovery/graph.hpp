#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::recovery {

using logic::Quantifier;

struct GroupNode {
  int id = 0;
  Quantifier quantifier = Quantifier::Exists;
  std::vector<logic::TableDecl> tables;
  std::string name;  ///< group_name of the diagram group

  bool operator==(const GroupNode&) const = default;
};

/// Group-level view of a diagram: one node per table group and one directed
/// edge per ordered pair of groups joined by at least one line.
struct DiagramGraph {
  std::map<int, GroupNode> nodes;
  std::set<std::pair<int, int>> edges;
  int root_id = 0;

  std::size_t size() const { return nodes.size(); }
  bool contains(int id) const { return nodes.count(id) != 0; }
  bool has_edge(int from, int to) const { return edges.count({from, to}) != 0; }
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }
  std::vector<int> ids() const;
  std::vector<int> out_neighbours(int id) const;
  std::vector<int> in_neighbours(int id) const;

  /// Subgraph induced by `keep` (the root id is kept as is even if dropped).
  DiagramGraph induced(const std::set<int>& keep) const;
  /// Weakly connected components of the subgraph induced by `among`, each
  /// sorted, ordered by smallest id.
  std::vector<std::set<int>> components(const std::set<int>& among) const;

  bool operator==(const DiagramGraph&) const = default;
};

/// Builds the group graph, rejecting diagrams whose lines cannot come from
/// a logic tree: undirected lines between groups, directed lines inside a
/// group, select links into a non-root group. Group depths and parents
/// stored in the diagram are ignored. Throws InvalidDiagram (stage "graph").
DiagramGraph graph_of(const diagram::Diagram& d);

}  // namespace qdiag::recovery
