#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qdiag/logic/logic_tree.hpp"
#include "qdiag/logic/validate.hpp"
#include "qdiag/recovery/graph.hpp"

namespace qdiag::recovery {

/// Group-level edge types of a depth-3 path, by endpoint depths.
enum class EdgeClass {
  A,  ///< 0 -> 1
  B,  ///< 1 -> 2
  C,  ///< 2 -> 0
  D,  ///< 2 -> 3
  E,  ///< 3 -> 1
  F,  ///< 3 -> 0
};

std::string_view to_string(EdgeClass c);

/// Class of an edge from a group at `from_depth` to one at `to_depth`, if it
/// is one of the six legal kinds.
std::optional<EdgeClass> classify_edge(int from_depth, int to_depth);

/// Families of path diagrams, by presence of the A and B edges.
enum class PathFamily { AB, ANotB, NotA };

/// "<A,B>", "<A,not B>", "<not A>".
std::string_view to_string(PathFamily f);

struct DepthAssignment {
  std::map<int, int> depth;
  std::map<int, int> parent;  ///< every group except the root

  bool operator==(const DepthAssignment&) const = default;
  auto operator<=>(const DepthAssignment&) const = default;
};

struct PathClassification {
  /// Empty for a lone root.
  std::optional<PathFamily> family;
  DepthAssignment depths;
};

/// Depths of a graph with at most four groups whose tree is a path. Throws
/// InvalidDiagram (stage "classify") when the edges fit no labeling.
PathClassification classify_path_pattern(const DiagramGraph& g);

/// Splits the graph at the root: one subgraph per weakly connected
/// component of the non-root groups, each with the root and its edges
/// re-attached. Ordered by smallest group id.
std::vector<DiagramGraph> decompose_depth0(const DiagramGraph& g);

/// The depth-1 group of a graph whose non-root groups form one root subtree.
/// Throws InvalidDiagram (stage "depth1").
int identify_depth1(const DiagramGraph& g);

/// The depth-2 group of a graph made of the root, a depth-1 group and a
/// single depth-2 subtree with several leaves: the group of highest
/// out-degree once the root is removed. Throws InvalidDiagram (stage
/// "depth2") on a tie.
int identify_depth2(const DiagramGraph& g);

/// The unique depth and parent assignment of a diagram graph. Throws
/// InvalidDiagram naming the failing stage.
DepthAssignment recover_depths(const DiagramGraph& g);

/// Empty when `a` is a valid assignment for `g`: every edge joins a group to
/// one of its ancestors in the direction the arrow rule prescribes, every
/// nested group is tied to its parent, and no group is deeper than
/// `max_depth`. Otherwise the reason.
std::optional<std::string> check_assignment(const DiagramGraph& g, const DepthAssignment& a,
                                            int max_depth = logic::kDefaultMaxDepth);

/// Every valid assignment, by exhaustive search. Meant for small graphs.
std::vector<DepthAssignment> brute_force_depths(const DiagramGraph& g, int max_depth = logic::kDefaultMaxDepth);

/// Logic tree described by a diagram under the given assignment. A line
/// between groups becomes a predicate of the deeper group.
logic::LogicTree recover_logic_tree(const diagram::Diagram& d, const DepthAssignment& a);

/// graph_of, recover_depths and recover_logic_tree in sequence.
logic::LogicTree recover_logic_tree(const diagram::Diagram& d);

/// {"depths": {"L1": 0, ...}, "parents": {"L2": "L1", ...}} keyed by group
/// name, in group id order.
nlohmann::ordered_json to_json(const DepthAssignment& a, const DiagramGraph& g);

}  // namespace qdiag::recovery
