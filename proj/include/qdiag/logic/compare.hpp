#pragma once

#include "qdiag/logic/logic_tree.hpp"

namespace qdiag::logic {

/// Structural equality: children are an unordered multiset, predicates a set
/// after normalization. With `modulo_renaming`, the trees only need to agree
/// up to a bijective renaming of aliases, table names, attributes and
/// constants.
bool lt_equal(const LogicTree& a, const LogicTree& b, bool modulo_renaming);

}  // namespace qdiag::logic
