#pragma once

#include <string>

#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

/// Tuple relational calculus text for a logic tree, e.g.
///
///     {Q | ∃F ∈ Frequents [F.person = Q.person ∧ ¬∃S ∈ Serves [S.bar = F.bar]]}
///
/// FOR_ALL nodes print as `∀S ∈ T [p ∧ ... → body]`.
std::string render_trc(const LogicTree& lt);

}  // namespace qdiag::logic
