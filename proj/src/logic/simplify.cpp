#include "qdiag/logic/simplify.hpp"

namespace qdiag::logic {

namespace {

bool rewrite_top_down(LtNode& node) {
  bool changed = false;
  if (node.quantifier == Quantifier::NotExists && node.children.size() == 1 &&
      node.children.front().quantifier == Quantifier::NotExists) {
    node.quantifier = Quantifier::ForAll;
    node.children.front().quantifier = Quantifier::Exists;
    changed = true;
  }
  for (LtNode& c : node.children) changed |= rewrite_top_down(c);
  return changed;
}

}  // namespace

LogicTree simplify_forall(LogicTree lt) {
  while (rewrite_top_down(lt.root)) {
  }
  return lt;
}

}  // namespace qdiag::logic
