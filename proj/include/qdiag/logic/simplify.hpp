#pragma once

#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

/// Rewrites NOT_EXISTS chains into universal quantification.
///
/// A NOT_EXISTS node whose only child is also NOT_EXISTS becomes FOR_ALL and
/// its child becomes EXISTS:
///
///     not exists S (p and not exists T (q))  ==  for all S (p -> exists T (q))
///
/// The node's own predicates may be arbitrary. Nodes are visited top-down and
/// the pass repeats until nothing changes, so in a chain the outermost pair
/// rewrites first. Only quantifier labels change.
LogicTree simplify_forall(LogicTree lt);

}  // namespace qdiag::logic
