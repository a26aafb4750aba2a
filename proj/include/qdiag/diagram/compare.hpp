#pragma once

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::diagram {

/// True when the diagrams differ only by a renaming of aliases, table names,
/// attributes and constants (each renamed consistently), plus group ids.
bool diagram_isomorphic(const Diagram& a, const Diagram& b);

}  // namespace qdiag::diagram
