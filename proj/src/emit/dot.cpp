#include "qdiag/emit/dot.hpp"

#include <sstream>

namespace qdiag::emit {

namespace {

using diagram::Diagram;
using diagram::Edge;
using diagram::Endpoint;
using diagram::TableBox;
using diagram::TableGroup;

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string node_id(const std::string& alias) {
  return alias == diagram::kSelectAlias ? "select_box" : "t_" + alias;
}

std::string port_of(const Diagram& d, const Endpoint& p) {
  std::size_t index = 0;
  if (p.alias == diagram::kSelectAlias) {
    for (std::size_t i = 0; i < d.select_box.rows.size(); ++i)
      if (d.select_box.rows[i] == p.attribute) index = i;
  } else if (const TableBox* b = d.box(p.alias)) {
    index = b->attribute_row(p.attribute).value_or(0);
  }
  return quoted(node_id(p.alias)) + ":" + quoted("p_" + std::to_string(index));
}

std::string table_label(const TableBox& b, const StyleOptions& s) {
  std::ostringstream out;
  out << "<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\" CELLPADDING=\"4\">"
      << "<TR><TD BGCOLOR=\"" << html_escape(s.header_background) << "\"><FONT COLOR=\""
      << html_escape(s.header_text) << "\">" << html_escape(b.alias + ":" + b.table_name) << "</FONT></TD></TR>";
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    out << "<TR><TD PORT=\"p_" << i << "\"";
    if (b.rows[i].is_selection()) out << " BGCOLOR=\"" << html_escape(s.selection_row_fill) << "\"";
    out << ">" << html_escape(b.rows[i].text()) << "</TD></TR>";
  }
  out << "</TABLE>>";
  return out.str();
}

std::string select_label(const Diagram& d, const StyleOptions& s) {
  std::ostringstream out;
  out << "<<TABLE BORDER=\"0\" CELLBORDER=\"1\" CELLSPACING=\"0\" CELLPADDING=\"4\">"
      << "<TR><TD BGCOLOR=\"" << html_escape(s.select_header_background) << "\"><FONT COLOR=\""
      << html_escape(s.select_header_text) << "\">SELECT</FONT></TD></TR>";
  for (std::size_t i = 0; i < d.select_box.rows.size(); ++i)
    out << "<TR><TD PORT=\"p_" << i << "\">" << html_escape(d.select_box.rows[i]) << "</TD></TR>";
  out << "</TABLE>>";
  return out.str();
}

void emit_nodes(std::ostream& out, const TableGroup& g, const StyleOptions& s, const std::string& indent) {
  for (const TableBox& b : g.tables)
    out << indent << quoted(node_id(b.alias)) << " [label=" << table_label(b, s) << "];\n";
}

}  // namespace

std::string emit_dot(const Diagram& d, const StyleOptions& s) {
  std::ostringstream out;
  out << "digraph qdiag {\n";
  out << "  graph [rankdir=" << s.rankdir << ", fontname=" << quoted(s.font) << "];\n";
  out << "  node [shape=plaintext, fontname=" << quoted(s.font) << "];\n";
  out << "  edge [fontname=" << quoted(s.font) << ", arrowsize=0.8];\n";
  out << "  \"select_box\" [label=" << select_label(d, s) << "];\n";

  for (const TableGroup& g : d.groups) {
    const std::string cluster = "cluster_g" + std::to_string(g.depth) + "_" + std::to_string(g.id);
    switch (g.quantifier) {
      case logic::Quantifier::NotExists:
        out << "  subgraph " << quoted(cluster) << " {\n    style=\"dashed,rounded\";\n    label=\"\";\n";
        emit_nodes(out, g, s, "    ");
        out << "  }\n";
        break;
      case logic::Quantifier::ForAll:
        out << "  subgraph " << quoted(cluster) << " {\n    style=\"rounded\";\n    label=\"\";\n    margin=4;\n";
        out << "    subgraph " << quoted(cluster + "_inner") << " {\n      style=\"rounded\";\n      label=\"\";\n";
        emit_nodes(out, g, s, "      ");
        out << "    }\n  }\n";
        break;
      default:
        emit_nodes(out, g, s, "  ");
    }
  }

  for (const Edge& e : d.edges) {
    out << "  " << port_of(d, e.from) << " -> " << port_of(d, e.to) << " [dir=" << (e.directed ? "forward" : "none");
    if (e.label) out << ", label=" << quoted(to_string(*e.label));
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace qdiag::emit
