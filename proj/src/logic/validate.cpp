#include "qdiag/logic/validate.hpp"

#include <algorithm>

namespace qdiag::logic {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::LocalAttributes: return "local-attributes";
    case ViolationKind::ConnectedSubqueries: return "connected-subqueries";
    case ViolationKind::DepthExceeded: return "depth-exceeded";
  }
  return "?";
}

namespace {

bool references_any(const LtNode& node, const LtNode& tables_of) {
  return std::any_of(node.predicates.begin(), node.predicates.end(), [&](const Predicate& p) {
    return std::any_of(tables_of.tables.begin(), tables_of.tables.end(),
                       [&](const TableDecl& t) { return p.references(t.alias); });
  });
}

class Checker {
 public:
  Checker(ValidationReport& report, int max_depth) : report_(report), max_depth_(max_depth) {}

  void visit(const LtNode& node, const LtNode* parent, NodePath& path) {
    const int depth = static_cast<int>(path.size());
    if (depth > max_depth_) {
      report_.depth_ok = false;
      report_.violations.push_back({ViolationKind::DepthExceeded, path, std::nullopt,
                                    "block " + to_string(path) + " is at nesting depth " +
                                        std::to_string(depth) + ", above the limit of " +
                                        std::to_string(max_depth_)});
    }

    for (const Predicate& p : node.predicates) {
      const bool local = std::any_of(node.tables.begin(), node.tables.end(),
                                     [&](const TableDecl& t) { return p.references(t.alias); });
      if (!local)
        report_.violations.push_back(
            {ViolationKind::LocalAttributes, path, p,
             "predicate " + to_string(p) + " in block " + to_string(path) +
                 " references no table of its own block; it belongs to an enclosing block"});
    }

    if (parent != nullptr && !references_any(node, *parent)) {
      const bool children_bridge =
          !node.children.empty() &&
          std::all_of(node.children.begin(), node.children.end(), [&](const LtNode& c) {
            return references_any(c, node) && references_any(c, *parent);
          });
      if (!children_bridge)
        report_.violations.push_back(
            {ViolationKind::ConnectedSubqueries, path, std::nullopt,
             "block " + to_string(path) +
                 " references no table of its parent block, and not every nested block "
                 "references both it and its parent"});
    }

    for (std::size_t i = 0; i < node.children.size(); ++i) {
      path.push_back(i);
      visit(node.children[i], &node, path);
      path.pop_back();
    }
  }

 private:
  ValidationReport& report_;
  int max_depth_;
};

}  // namespace

ValidationReport check_nondegenerate(const LogicTree& lt, int max_depth) {
  ValidationReport report;
  NodePath path;
  Checker(report, max_depth).visit(lt.root, nullptr, path);
  return report;
}

std::string to_text(const ValidationReport& report) {
  if (report.ok()) return "ok: query is non-degenerate\n";
  std::string out;
  for (const Violation& v : report.violations) {
    out += "violation [";
    out += to_string(v.kind);
    out += "] ";
    out += v.message;
    out += '\n';
  }
  return out;
}

DegenerateQuery::DegenerateQuery(ValidationReport report)
    : Error("degenerate query:\n" + to_text(report)), report_(std::move(report)) {}

}  // namespace qdiag::logic
