#include "qdiag/recovery/graph.hpp"

#include <functional>

#include "qdiag/error.hpp"

namespace qdiag::recovery {

std::vector<int> DiagramGraph::ids() const {
  std::vector<int> out;
  for (const auto& [id, _] : nodes) out.push_back(id);
  return out;
}

std::vector<int> DiagramGraph::out_neighbours(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges)
    if (a == id) out.push_back(b);
  return out;
}

std::vector<int> DiagramGraph::in_neighbours(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges)
    if (b == id) out.push_back(a);
  return out;
}

DiagramGraph DiagramGraph::induced(const std::set<int>& keep) const {
  DiagramGraph g;
  g.root_id = root_id;
  for (int id : keep)
    if (auto it = nodes.find(id); it != nodes.end()) g.nodes.insert(*it);
  for (const auto& e : edges)
    if (keep.count(e.first) && keep.count(e.second)) g.edges.insert(e);
  return g;
}

std::vector<std::set<int>> DiagramGraph::components(const std::set<int>& among) const {
  std::vector<std::set<int>> out;
  std::set<int> seen;
  for (int start : among) {
    if (seen.count(start)) continue;
    std::set<int> comp;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      const int n = stack.back();
      stack.pop_back();
      comp.insert(n);
      for (const auto& [a, b] : edges) {
        const int other = a == n ? b : (b == n ? a : -1);
        if (other < 0 || !among.count(other) || seen.count(other)) continue;
        seen.insert(other);
        stack.push_back(other);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

DiagramGraph graph_of(const diagram::Diagram& d) {
  diagram::check_well_formed(d);
  auto fail = [](const std::string& what) { throw InvalidDiagram("graph", what); };

  DiagramGraph g;
  std::optional<int> root;
  for (const diagram::TableGroup& grp : d.groups) {
    GroupNode n{grp.id, grp.quantifier, {}, diagram::group_name(grp)};
    for (const diagram::TableBox& b : grp.tables) n.tables.push_back({b.alias, b.table_name});
    if (grp.quantifier == Quantifier::Root) root = grp.id;
    g.nodes.emplace(grp.id, std::move(n));
  }
  g.root_id = *root;

  for (const diagram::Edge& e : d.edges) {
    if (e.select_link) {
      if (d.group_of(e.to.alias)->id != g.root_id) fail("SELECT links " + e.to.alias + " outside the root group");
      continue;
    }
    const int a = d.group_of(e.from.alias)->id;
    const int b = d.group_of(e.to.alias)->id;
    if (a == b) {
      if (e.directed) fail("directed line inside group " + diagram::group_name(d.groups[a]));
      continue;
    }
    if (!e.directed)
      fail("undirected line between groups " + diagram::group_name(d.groups[a]) + " and " +
           diagram::group_name(d.groups[b]));
    g.edges.insert({a, b});
  }

  std::set<int> all;
  for (const auto& [id, _] : g.nodes) all.insert(id);
  if (g.components(all).size() != 1) fail("groups are not connected");
  return g;
}

}  // namespace qdiag::recovery
