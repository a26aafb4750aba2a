#pragma once

#include <cstddef>
#include <string_view>

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::diagram {

struct ElementCounts {
  std::size_t table_boxes = 0;
  std::size_t rows = 0;        ///< including SELECT rows
  std::size_t edges = 0;       ///< including select links
  std::size_t edge_labels = 0;
  std::size_t quantifier_boxes = 0;
  std::size_t select_boxes = 1;

  std::size_t total() const {
    return table_boxes + rows + edges + edge_labels + quantifier_boxes + select_boxes;
  }
};

/// Visible elements: boxes, rows, lines, line labels, quantifier boxes and
/// the SELECT box. EXISTS groups draw no box and add nothing.
ElementCounts count_elements(const Diagram& d);

/// Whitespace-delimited tokens.
std::size_t count_words(std::string_view sql_text);

}  // namespace qdiag::diagram
