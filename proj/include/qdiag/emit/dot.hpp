#pragma once

#include <string>

#include "qdiag/diagram/diagram.hpp"

namespace qdiag::emit {

/// Colors and fonts of the DOT output.
struct StyleOptions {
  std::string font = "Helvetica";
  std::string header_background = "black";
  std::string header_text = "white";
  std::string select_header_background = "#d3d3d3";
  std::string select_header_text = "black";
  std::string selection_row_fill = "#ffff99";
  std::string rankdir = "LR";
};

/// DOT source for a diagram. Table boxes are HTML-like labelled nodes
/// `t_<alias>` with one port `p_<row>` per row; the SELECT box is
/// `select_box`. NOT_EXISTS groups become dashed rounded clusters; FOR_ALL
/// groups become a rounded cluster holding a second rounded cluster
/// (`..._inner`), which draws the double border since cluster borders are
/// single lines. EXISTS and ROOT groups add no cluster.
std::string emit_dot(const diagram::Diagram& d, const StyleOptions& style = {});

}  // namespace qdiag::emit
