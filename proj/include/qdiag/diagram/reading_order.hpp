#pragma once

#include <string>
#include <vector>

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::diagram {

struct ReadingStep {
  enum class Kind { Start, Follow, Restart };
  Kind kind;
  int group;
  /// Group the edge was followed from (Follow only).
  int from = -1;

  bool operator==(const ReadingStep&) const = default;
};

using ReadingOrder = std::vector<ReadingStep>;

/// Depth-first walk over groups along directed edges, starting at the group
/// linked to the SELECT box. When stuck it restarts at the first unvisited
/// group (by id) with no incoming edge from another unvisited group, or at
/// the first unvisited group if every one has such an edge.
ReadingOrder reading_order(const Diagram& d);

/// Group names in visiting order.
std::vector<std::string> visit_sequence(const Diagram& d, const ReadingOrder& order);

/// "L1 -> L2 -> L3 | restart L5 -> L6".
std::string to_text(const Diagram& d, const ReadingOrder& order);

}  // namespace qdiag::diagram
