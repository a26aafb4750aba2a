#include "qdiag/diagram/reading_order.hpp"

#include <functional>
#include <set>

namespace qdiag::diagram {

namespace {

int root_group(const Diagram& d) {
  for (const Edge& e : d.edges)
    if (e.select_link)
      if (const TableGroup* g = d.group_of(e.to.alias)) return g->id;
  for (const TableGroup& g : d.groups)
    if (g.quantifier == Quantifier::Root) return g.id;
  return 0;
}

}  // namespace

ReadingOrder reading_order(const Diagram& d) {
  const std::size_t n = d.groups.size();
  std::vector<std::set<int>> out(n), in(n);
  for (const Edge& e : d.edges) {
    if (e.select_link || !e.directed) continue;
    const TableGroup* a = d.group_of(e.from.alias);
    const TableGroup* b = d.group_of(e.to.alias);
    if (a == nullptr || b == nullptr || a->id == b->id) continue;
    out[a->id].insert(b->id);
    in[b->id].insert(a->id);
  }

  ReadingOrder order;
  if (n == 0) return order;
  std::vector<bool> seen(n, false);
  std::function<void(int)> visit = [&](int g) {
    seen[g] = true;
    for (int next : out[g]) {
      if (seen[next]) continue;
      order.push_back({ReadingStep::Kind::Follow, next, g});
      visit(next);
    }
  };

  const int start = root_group(d);
  order.push_back({ReadingStep::Kind::Start, start});
  visit(start);
  for (;;) {
    int pick = -1;
    int fallback = -1;
    for (std::size_t g = 0; g < n && pick < 0; ++g) {
      if (seen[g]) continue;
      if (fallback < 0) fallback = static_cast<int>(g);
      bool source = true;
      for (int p : in[g]) source = source && seen[p];
      if (source) pick = static_cast<int>(g);
    }
    if (pick < 0) pick = fallback;
    if (pick < 0) break;
    order.push_back({ReadingStep::Kind::Restart, pick});
    visit(pick);
  }
  return order;
}

std::vector<std::string> visit_sequence(const Diagram& d, const ReadingOrder& order) {
  std::vector<std::string> names;
  for (const ReadingStep& s : order) names.push_back(group_name(d.groups[s.group]));
  return names;
}

std::string to_text(const Diagram& d, const ReadingOrder& order) {
  std::string out;
  for (const ReadingStep& s : order) {
    const std::string name = group_name(d.groups[s.group]);
    switch (s.kind) {
      case ReadingStep::Kind::Start: out += "SELECT -> " + name; break;
      case ReadingStep::Kind::Follow: out += " -> " + name; break;
      case ReadingStep::Kind::Restart: out += " | restart " + name; break;
    }
  }
  return out;
}

}  // namespace qdiag::diagram
