#include "qdiag/diagram/metrics.hpp"

#include <cctype>

namespace qdiag::diagram {

ElementCounts count_elements(const Diagram& d) {
  ElementCounts c;
  for (const TableGroup& g : d.groups) {
    if (g.quantifier == Quantifier::NotExists || g.quantifier == Quantifier::ForAll) ++c.quantifier_boxes;
    for (const TableBox& b : g.tables) {
      ++c.table_boxes;
      c.rows += b.rows.size();
    }
  }
  c.rows += d.select_box.rows.size();
  for (const Edge& e : d.edges) {
    ++c.edges;
    if (e.label) ++c.edge_labels;
  }
  return c;
}

std::size_t count_words(std::string_view text) {
  std::size_t words = 0;
  bool in_word = false;
  for (char ch : text) {
    const bool space = std::isspace(static_cast<unsigned char>(ch)) != 0;
    if (!space && !in_word) ++words;
    in_word = !space;
  }
  return words;
}

}  // namespace qdiag::diagram
