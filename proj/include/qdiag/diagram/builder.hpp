#pragma once

#include "qdiag/diagram/diagram.hpp"
#include "qdiag/logic/logic_tree.hpp"
#include "qdiag/logic/validate.hpp"

namespace qdiag::diagram {

enum class Arrow { Undirected, LowToHigh, HighToLow };

std::string_view to_string(Arrow a);

/// Direction of a join between tables at the given nesting depths: same
/// depth is undirected, a difference of one points from the shallower to
/// the deeper table, a larger difference points back up.
Arrow resolve_arrow(int depth_from, int depth_to);

/// Edge for join predicate `pred` whose lhs table sits at `lhs_depth` and rhs
/// table at `rhs_depth`. Endpoints follow `direction`; when that puts the rhs
/// first the operator is mirrored so the label still reads from -> to.
/// Undirected edges keep the predicate's own operand order.
Edge orient_inequality(const logic::Predicate& pred, Arrow direction, int lhs_depth, int rhs_depth);

struct BuildOptions {
  bool simplify = true;
  /// Build even when the tree fails the non-degeneracy check.
  bool allow_degenerate = false;
  int max_depth = logic::kDefaultMaxDepth;
};

/// Diagram for `lt`. Throws logic::DegenerateQuery unless the tree passes
/// check_nondegenerate or `allow_degenerate` is set.
Diagram build_diagram(const logic::LogicTree& lt, const BuildOptions& options = {});

}  // namespace qdiag::diagram
