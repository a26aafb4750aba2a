#include "qdiag/logic/compare.hpp"

#include "qdiag/util/relabel.hpp"

namespace qdiag::logic {

namespace {

using util::Fact;
using util::fixed;
using util::label;

enum Sort { kNode = 1, kAlias, kTable, kAttribute, kConstant };

void collect(const LtNode& n, const std::string& id, std::vector<Fact>& out) {
  out.push_back({"node", {label(kNode, id), fixed(std::string(to_string(n.quantifier)))}});
  for (const TableDecl& t : n.tables)
    out.push_back({"table", {label(kNode, id), label(kAlias, t.alias), label(kTable, t.table)}});
  for (const Predicate& p : n.predicates) {
    const std::string op(to_string(p.op));
    if (p.is_join()) {
      const ColumnRef& r = p.rhs_column();
      // Both orientations, so operand order never matters.
      out.push_back({"join",
                     {label(kNode, id), label(kAlias, p.lhs.alias), label(kAttribute, p.lhs.attribute),
                      fixed(op), label(kAlias, r.alias), label(kAttribute, r.attribute)}});
      out.push_back({"join",
                     {label(kNode, id), label(kAlias, r.alias), label(kAttribute, r.attribute),
                      fixed(std::string(to_string(swap_operands(p.op)))), label(kAlias, p.lhs.alias),
                      label(kAttribute, p.lhs.attribute)}});
    } else {
      const Constant& c = p.rhs_constant();
      out.push_back({"selection",
                     {label(kNode, id), label(kAlias, p.lhs.alias), label(kAttribute, p.lhs.attribute),
                      fixed(op), fixed(c.kind == Constant::Kind::String ? "string" : "number"),
                      label(kConstant, c.literal)}});
    }
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    std::string child_id = id + "." + std::to_string(i);
    out.push_back({"child", {label(kNode, id), label(kNode, child_id)}});
    collect(n.children[i], child_id, out);
  }
}

std::vector<Fact> facts_of(const LogicTree& lt) {
  std::vector<Fact> out;
  collect(lt.root, "r", out);
  for (std::size_t i = 0; i < lt.select_list.size(); ++i)
    out.push_back({"select",
                   {fixed(std::to_string(i)), label(kAlias, lt.select_list[i].alias),
                    label(kAttribute, lt.select_list[i].attribute)}});
  return out;
}

}  // namespace

bool lt_equal(const LogicTree& a, const LogicTree& b, bool modulo_renaming) {
  if (!modulo_renaming) {
    LogicTree ca = a;
    LogicTree cb = b;
    canonicalize(ca);
    canonicalize(cb);
    return ca == cb;
  }
  return util::isomorphic_modulo_labels(facts_of(a), facts_of(b));
}

}  // namespace qdiag::logic
