#include "qdiag/diagram/compare.hpp"

#include "qdiag/util/relabel.hpp"

namespace qdiag::diagram {

namespace {

using util::Fact;
using util::fixed;
using util::label;

enum Sort { kGroup = 1, kAlias, kTable, kAttribute, kConstant };

std::vector<Fact> facts_of(const Diagram& d) {
  std::vector<Fact> out;
  for (const TableGroup& g : d.groups) {
    const std::string id = std::to_string(g.id);
    out.push_back({"group", {label(kGroup, id), fixed(std::string(logic::to_string(g.quantifier)))}});
    if (g.parent) out.push_back({"parent", {label(kGroup, std::to_string(*g.parent)), label(kGroup, id)}});
    for (const TableBox& b : g.tables) {
      out.push_back({"box", {label(kGroup, id), label(kAlias, b.alias), label(kTable, b.table_name)}});
      for (const Row& r : b.rows) {
        if (!r.is_selection()) {
          out.push_back({"row", {label(kAlias, b.alias), label(kAttribute, r.attribute)}});
        } else {
          out.push_back({"selection",
                         {label(kAlias, b.alias), label(kAttribute, r.attribute), fixed(std::string(to_string(r.op))),
                          fixed(r.constant.kind == Constant::Kind::String ? "string" : "number"),
                          label(kConstant, r.constant.literal)}});
        }
      }
    }
  }
  std::size_t link = 0;
  for (const Edge& e : d.edges) {
    if (e.select_link) {
      out.push_back({"select", {fixed(std::to_string(link++)), label(kAlias, e.to.alias),
                                label(kAttribute, e.to.attribute)}});
      continue;
    }
    auto edge_fact = [&](const Endpoint& a, const Endpoint& b, CompareOp op) {
      return Fact{"edge",
                  {label(kAlias, a.alias), label(kAttribute, a.attribute), fixed(std::string(to_string(op))),
                   fixed(e.directed ? "directed" : "undirected"), label(kAlias, b.alias),
                   label(kAttribute, b.attribute)}};
    };
    out.push_back(edge_fact(e.from, e.to, e.op()));
    if (!e.directed) out.push_back(edge_fact(e.to, e.from, swap_operands(e.op())));
  }
  return out;
}

}  // namespace

bool diagram_isomorphic(const Diagram& a, const Diagram& b) {
  return util::isomorphic_modulo_labels(facts_of(a), facts_of(b));
}

}  // namespace qdiag::diagram
