#include "qdiag/diagram/builder.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "qdiag/logic/simplify.hpp"

namespace qdiag::diagram {

using logic::LogicTree;
using logic::LtNode;
using logic::Predicate;

std::string_view to_string(Arrow a) {
  switch (a) {
    case Arrow::Undirected: return "undirected";
    case Arrow::LowToHigh: return "low-to-high";
    case Arrow::HighToLow: return "high-to-low";
  }
  return "?";
}

Arrow resolve_arrow(int depth_from, int depth_to) {
  const int diff = depth_from > depth_to ? depth_from - depth_to : depth_to - depth_from;
  if (diff == 0) return Arrow::Undirected;
  return diff == 1 ? Arrow::LowToHigh : Arrow::HighToLow;
}

Edge orient_inequality(const Predicate& pred, Arrow direction, int lhs_depth, int rhs_depth) {
  const ColumnRef& rhs = pred.rhs_column();
  Edge e;
  e.directed = direction != Arrow::Undirected;
  bool lhs_first = true;
  if (direction == Arrow::LowToHigh) lhs_first = lhs_depth < rhs_depth;
  if (direction == Arrow::HighToLow) lhs_first = lhs_depth > rhs_depth;
  const CompareOp op = lhs_first ? pred.op : swap_operands(pred.op);
  const ColumnRef& a = lhs_first ? pred.lhs : rhs;
  const ColumnRef& b = lhs_first ? rhs : pred.lhs;
  e.from = {a.alias, a.attribute};
  e.to = {b.alias, b.attribute};
  if (op != CompareOp::Equal) e.label = op;
  return e;
}

namespace {

struct Placed {
  const LtNode* node;
  int depth;
  std::optional<int> parent;
};

std::vector<std::string> select_labels(const std::vector<ColumnRef>& select) {
  std::map<std::string, int> count;
  for (const ColumnRef& c : select) ++count[c.attribute];
  std::vector<std::string> labels;
  std::set<std::string> used;
  for (const ColumnRef& c : select) {
    std::string base = count[c.attribute] > 1 ? to_string(c) : c.attribute;
    std::string name = base;
    for (int n = 2; used.count(name); ++n) name = base + " (" + std::to_string(n) + ")";
    used.insert(name);
    labels.push_back(name);
  }
  return labels;
}

}  // namespace

Diagram build_diagram(const LogicTree& source, const BuildOptions& options) {
  if (!options.allow_degenerate) {
    logic::ValidationReport report = logic::check_nondegenerate(source, options.max_depth);
    if (!report.ok()) throw logic::DegenerateQuery(std::move(report));
  }
  LogicTree lt = source;
  logic::canonicalize(lt);
  if (options.simplify) lt = logic::simplify_forall(std::move(lt));

  // Breadth-first numbering; children keep canonical order.
  std::vector<Placed> placed;
  std::deque<std::size_t> queue;
  placed.push_back({&lt.root, 0, std::nullopt});
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const LtNode& c : placed[i].node->children) {
      placed.push_back({&c, placed[i].depth + 1, static_cast<int>(i)});
      queue.push_back(placed.size() - 1);
    }
  }

  std::map<std::string, int> depth_of;
  for (const Placed& p : placed)
    for (const logic::TableDecl& t : p.node->tables) depth_of[t.alias] = p.depth;
  auto depth = [&](const std::string& alias) {
    auto it = depth_of.find(alias);
    return it == depth_of.end() ? 0 : it->second;
  };

  std::map<std::string, std::set<std::string>> select_attrs, join_attrs;
  std::map<std::string, std::vector<Row>> selection_rows;
  for (const ColumnRef& c : lt.select_list) select_attrs[c.alias].insert(c.attribute);

  Diagram d;
  std::vector<Edge> joins;
  for (const Placed& p : placed) {
    for (const Predicate& pred : p.node->predicates) {
      if (pred.is_selection()) {
        selection_rows[pred.lhs.alias].push_back(Row::selection(pred.lhs.attribute, pred.op, pred.rhs_constant()));
        continue;
      }
      const ColumnRef& rhs = pred.rhs_column();
      join_attrs[pred.lhs.alias].insert(pred.lhs.attribute);
      join_attrs[rhs.alias].insert(rhs.attribute);
      const int dl = depth(pred.lhs.alias);
      const int dr = depth(rhs.alias);
      joins.push_back(orient_inequality(pred, resolve_arrow(dl, dr), dl, dr));
    }
  }

  for (std::size_t i = 0; i < placed.size(); ++i) {
    TableGroup g;
    g.id = static_cast<int>(i);
    g.quantifier = placed[i].node->quantifier;
    g.depth = placed[i].depth;
    g.parent = placed[i].parent;
    for (const logic::TableDecl& t : placed[i].node->tables) {
      TableBox box{t.alias, t.table, {}};
      const std::set<std::string>& sel = select_attrs[t.alias];
      for (const std::string& a : sel) box.rows.push_back(Row::plain(a));
      for (const std::string& a : join_attrs[t.alias])
        if (!sel.count(a)) box.rows.push_back(Row::plain(a));
      std::vector<Row> sels = selection_rows[t.alias];
      std::sort(sels.begin(), sels.end(), [](const Row& x, const Row& y) {
        return std::tie(x.attribute, x.op, x.constant) < std::tie(y.attribute, y.op, y.constant);
      });
      sels.erase(std::unique(sels.begin(), sels.end()), sels.end());
      box.rows.insert(box.rows.end(), sels.begin(), sels.end());
      g.tables.push_back(std::move(box));
    }
    d.groups.push_back(std::move(g));
  }

  std::sort(joins.begin(), joins.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.to, x.label, x.directed) < std::tie(y.from, y.to, y.label, y.directed);
  });
  d.edges = std::move(joins);

  d.select_box.rows = select_labels(lt.select_list);
  for (std::size_t i = 0; i < lt.select_list.size(); ++i) {
    Edge link;
    link.from = {std::string(kSelectAlias), d.select_box.rows[i]};
    link.to = {lt.select_list[i].alias, lt.select_list[i].attribute};
    link.select_link = true;
    d.edges.push_back(std::move(link));
  }
  return d;
}

}  // namespace qdiag::diagram
