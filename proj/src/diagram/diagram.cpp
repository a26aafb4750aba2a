#include "qdiag/diagram/diagram.hpp"

#include <set>

#include "qdiag/error.hpp"

namespace qdiag::diagram {

std::string Row::text() const {
  if (!is_selection()) return attribute;
  return attribute + " " + std::string(to_string(op)) + " " + to_sql(constant);
}

std::optional<std::size_t> TableBox::attribute_row(const std::string& name) const {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].is_selection() && rows[i].attribute == name) return i;
  return std::nullopt;
}

const TableGroup* Diagram::group_of(const std::string& alias) const {
  for (const TableGroup& g : groups)
    for (const TableBox& b : g.tables)
      if (b.alias == alias) return &g;
  return nullptr;
}

const TableBox* Diagram::box(const std::string& alias) const {
  for (const TableGroup& g : groups)
    for (const TableBox& b : g.tables)
      if (b.alias == alias) return &b;
  return nullptr;
}

std::string group_name(const TableGroup& g) {
  std::string out;
  for (const TableBox& b : g.tables) {
    if (!out.empty()) out += '+';
    out += b.alias;
  }
  return out;
}

void check_well_formed(const Diagram& d) {
  auto fail = [](const std::string& what) { throw InvalidDiagram("load", what); };
  if (d.groups.empty()) fail("diagram has no groups");
  std::set<std::string> aliases;
  int roots = 0;
  for (std::size_t i = 0; i < d.groups.size(); ++i) {
    const TableGroup& g = d.groups[i];
    if (g.id != static_cast<int>(i)) fail("group ids must be 0.." + std::to_string(d.groups.size() - 1) + " in order");
    if (g.tables.empty()) fail("group " + std::to_string(g.id) + " has no tables");
    if (g.quantifier == Quantifier::Root) ++roots;
    if (g.parent && (*g.parent < 0 || *g.parent >= static_cast<int>(d.groups.size())))
      fail("group " + std::to_string(g.id) + " has an unknown parent");
    for (const TableBox& b : g.tables) {
      if (b.alias.empty() || b.alias == kSelectAlias) fail("bad table alias '" + b.alias + "'");
      if (!aliases.insert(b.alias).second) fail("alias " + b.alias + " appears twice");
    }
  }
  if (roots != 1) fail("expected exactly one ROOT group, found " + std::to_string(roots));

  std::set<std::string> select_rows(d.select_box.rows.begin(), d.select_box.rows.end());
  if (select_rows.size() != d.select_box.rows.size()) fail("duplicate SELECT row labels");
  std::size_t links = 0;
  for (const Edge& e : d.edges) {
    auto row_exists = [&](const Endpoint& p) {
      const TableBox* b = d.box(p.alias);
      return b != nullptr && b->attribute_row(p.attribute).has_value();
    };
    if (e.select_link) {
      ++links;
      if (e.directed || e.label) fail("select links are undirected and unlabeled");
      if (e.from.alias != kSelectAlias || !select_rows.count(e.from.attribute))
        fail("select link must start at a SELECT row");
      if (!row_exists(e.to)) fail("select link to missing row " + e.to.alias + "." + e.to.attribute);
      continue;
    }
    if (!row_exists(e.from)) fail("edge from missing row " + e.from.alias + "." + e.from.attribute);
    if (!row_exists(e.to)) fail("edge to missing row " + e.to.alias + "." + e.to.attribute);
    if (e.label == CompareOp::Equal) fail("equijoin edges carry no label");
  }
  if (links != d.select_box.rows.size()) fail("each SELECT row needs exactly one link");
}

}  // namespace qdiag::diagram
