#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdiag/error.hpp"
#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

inline constexpr int kDefaultMaxDepth = 3;

enum class ViolationKind {
  LocalAttributes,      ///< predicate mentions no table of its own block
  ConnectedSubqueries,  ///< block is not tied to its parent
  DepthExceeded,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  NodePath node_path;
  std::optional<Predicate> predicate;
  std::string message;
};

struct ValidationReport {
  bool depth_ok = true;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the two non-degeneracy conditions and the nesting bound:
///  - every predicate references at least one table of its own block;
///  - every nested block either references its parent, or has children and
///    each child references both that block and its parent;
///  - no node is deeper than `max_depth`.
ValidationReport check_nondegenerate(const LogicTree& lt, int max_depth = kDefaultMaxDepth);

std::string to_text(const ValidationReport& report);

/// Raised by stages that require a non-degenerate tree.
class DegenerateQuery : public Error {
 public:
  explicit DegenerateQuery(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace qdiag::logic
