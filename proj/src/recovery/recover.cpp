#include "qdiag/recovery/recover.hpp"

#include <algorithm>
#include <functional>

#include "qdiag/error.hpp"

namespace qdiag::recovery {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::A: return "A";
    case EdgeClass::B: return "B";
    case EdgeClass::C: return "C";
    case EdgeClass::D: return "D";
    case EdgeClass::E: return "E";
    case EdgeClass::F: return "F";
  }
  return "?";
}

std::optional<EdgeClass> classify_edge(int from_depth, int to_depth) {
  if (from_depth == 0 && to_depth == 1) return EdgeClass::A;
  if (from_depth == 1 && to_depth == 2) return EdgeClass::B;
  if (from_depth == 2 && to_depth == 0) return EdgeClass::C;
  if (from_depth == 2 && to_depth == 3) return EdgeClass::D;
  if (from_depth == 3 && to_depth == 1) return EdgeClass::E;
  if (from_depth == 3 && to_depth == 0) return EdgeClass::F;
  return std::nullopt;
}

std::string_view to_string(PathFamily f) {
  switch (f) {
    case PathFamily::AB: return "<A,B>";
    case PathFamily::ANotB: return "<A,not B>";
    case PathFamily::NotA: return "<not A>";
  }
  return "?";
}

namespace {

std::vector<int> non_root(const DiagramGraph& g) {
  std::vector<int> out;
  for (int id : g.ids())
    if (id != g.root_id) out.push_back(id);
  return out;
}

std::string name_of(const DiagramGraph& g, int id) {
  auto it = g.nodes.find(id);
  return it == g.nodes.end() || it->second.name.empty() ? "#" + std::to_string(id) : it->second.name;
}

DepthAssignment chain(int root, const std::vector<int>& path) {
  DepthAssignment a;
  a.depth[root] = 0;
  int prev = root;
  for (std::size_t i = 0; i < path.size(); ++i) {
    a.depth[path[i]] = static_cast<int>(i) + 1;
    a.parent[path[i]] = prev;
    prev = path[i];
  }
  return a;
}

}  // namespace

std::optional<std::string> check_assignment(const DiagramGraph& g, const DepthAssignment& a, int max_depth) {
  for (int id : g.ids()) {
    auto d = a.depth.find(id);
    if (d == a.depth.end()) return "no depth for " + name_of(g, id);
    if (id == g.root_id) {
      if (d->second != 0) return "root is not at depth 0";
      if (a.parent.count(id)) return "root has a parent";
      continue;
    }
    auto p = a.parent.find(id);
    if (p == a.parent.end() || !g.contains(p->second)) return "no parent for " + name_of(g, id);
    if (a.depth.at(p->second) + 1 != d->second) return "depth of " + name_of(g, id) + " is not one below its parent";
    if (d->second > max_depth) return name_of(g, id) + " is deeper than " + std::to_string(max_depth);
  }

  auto is_ancestor = [&](int anc, int node) {
    for (auto it = a.parent.find(node); it != a.parent.end(); it = a.parent.find(it->second))
      if (it->second == anc) return true;
    return false;
  };
  for (const auto& [u, v] : g.edges) {
    const int du = a.depth.at(u);
    const int dv = a.depth.at(v);
    const std::string what = name_of(g, u) + " -> " + name_of(g, v);
    if (!is_ancestor(u, v) && !is_ancestor(v, u)) return "line " + what + " joins groups on different branches";
    const int diff = std::abs(du - dv);
    if (diff == 1 && du > dv) return "line " + what + " points up across one level";
    if (diff >= 2 && du < dv) return "line " + what + " points down across several levels";
  }

  std::map<int, std::vector<int>> children;
  for (const auto& [c, p] : a.parent) children[p].push_back(c);
  for (const auto& [q, p] : a.parent) {
    if (g.adjacent(q, p)) continue;
    const auto& kids = children[q];
    bool tied = !kids.empty();
    for (int c : kids) tied = tied && g.adjacent(c, q) && g.adjacent(c, p);
    if (!tied) return name_of(g, q) + " is not tied to its parent " + name_of(g, p);
  }
  return std::nullopt;
}

PathClassification classify_path_pattern(const DiagramGraph& g) {
  auto fail = [](const std::string& what) -> PathClassification { throw InvalidDiagram("classify", what); };
  const int r = g.root_id;
  if (!g.contains(r)) return fail("root group missing");
  if (g.size() > 4) return fail("more than four groups");

  const std::vector<int> rest = non_root(g);
  const std::vector<int> root_out = g.out_neighbours(r);
  if (root_out.size() > 1) return fail("root has several outgoing lines");

  std::vector<int> path;
  if (rest.empty()) {
    // lone root
  } else if (root_out.size() == 1) {
    const int x = root_out.front();
    path.push_back(x);
    std::vector<int> others;
    for (int n : rest)
      if (n != x) others.push_back(n);
    if (others.size() == 1) {
      path.push_back(others[0]);
    } else if (others.size() == 2) {
      const int y = others[0];
      const int z = others[1];
      const bool xy = g.has_edge(x, y);
      const bool xz = g.has_edge(x, z);
      int second = -1;
      if (xy != xz) {
        second = xy ? y : z;
      } else if (!xy) {
        const bool yz = g.has_edge(y, z);
        const bool zy = g.has_edge(z, y);
        if (yz != zy) second = yz ? y : z;
      }
      if (second < 0) return fail("cannot tell depth 2 from depth 3");
      path.push_back(second);
      path.push_back(second == y ? z : y);
    }
  } else {
    if (rest.size() == 1) return fail("nested group " + name_of(g, rest[0]) + " has no line from the root");
    std::vector<int> detached;
    for (int n : rest)
      if (!g.adjacent(n, r)) detached.push_back(n);
    if (rest.size() == 2) {
      if (detached.size() != 1) return fail("cannot tell depth 1 from depth 2");
      path = {detached[0], detached[0] == rest[0] ? rest[1] : rest[0]};
    } else if (detached.size() == 1) {
      const int d1 = detached[0];
      const std::vector<int> outs = g.out_neighbours(d1);
      if (outs.size() != 1) return fail("depth-1 group needs exactly one outgoing line");
      path = {d1, outs[0]};
      for (int n : rest)
        if (n != d1 && n != outs[0]) path.push_back(n);
    } else if (detached.size() == 2) {
      int d2 = -1;
      for (int n : rest)
        if (g.adjacent(n, r)) d2 = n;
      const int a = detached[0];
      const int b = detached[1];
      if (g.has_edge(a, d2) && g.has_edge(d2, b)) {
        path = {a, d2, b};
      } else if (g.has_edge(b, d2) && g.has_edge(d2, a)) {
        path = {b, d2, a};
      } else {
        return fail("no line chain through the depth-2 group");
      }
    } else {
      return fail("wrong number of groups without a root line");
    }
  }

  PathClassification out;
  out.depths = chain(r, path);
  if (auto why = check_assignment(g, out.depths)) return fail(*why);
  if (!path.empty()) {
    if (!g.has_edge(r, path[0]))
      out.family = PathFamily::NotA;
    else
      out.family = path.size() >= 2 && g.has_edge(path[0], path[1]) ? PathFamily::AB : PathFamily::ANotB;
  }
  return out;
}

std::vector<DiagramGraph> decompose_depth0(const DiagramGraph& g) {
  const std::vector<int> rest = non_root(g);
  std::vector<DiagramGraph> out;
  for (std::set<int> comp : g.components({rest.begin(), rest.end()})) {
    comp.insert(g.root_id);
    out.push_back(g.induced(comp));
  }
  return out;
}

int identify_depth1(const DiagramGraph& g) {
  auto fail = [](const std::string& what) -> int { throw InvalidDiagram("depth1", what); };
  const int r = g.root_id;
  const std::vector<int> root_out = g.out_neighbours(r);
  if (root_out.size() == 1) return root_out.front();
  if (root_out.size() > 1) return fail("root has lines into several groups of one subtree");

  std::vector<int> candidates;
  for (int n : non_root(g))
    if (!g.adjacent(n, r)) candidates.push_back(n);
  if (candidates.empty()) return fail("every nested group has a line to the root, but none from it");

  for (int c : candidates) {
    std::set<int> rest;
    for (int n : non_root(g))
      if (n != c) rest.insert(n);
    if (g.components(rest).size() > 1) return c;
  }
  if (candidates.size() == 1) return candidates.front();
  if (g.size() <= 4) {
    const PathClassification p = classify_path_pattern(g);
    for (const auto& [id, depth] : p.depths.depth)
      if (depth == 1) return id;
    return fail("path has no depth-1 group");
  }

  int best = -1;
  std::size_t best_out = 0;
  bool tie = false;
  for (int n : non_root(g)) {
    std::size_t out = 0;
    for (int m : g.out_neighbours(n)) out += m != r;
    if (best < 0 || out > best_out) {
      best = n;
      best_out = out;
      tie = false;
    } else if (out == best_out) {
      tie = true;
    }
  }
  if (tie) return fail("no single group of highest out-degree");
  std::vector<int> feeders;
  for (int n : g.in_neighbours(best))
    if (n != r && std::find(candidates.begin(), candidates.end(), n) != candidates.end()) feeders.push_back(n);
  if (feeders.size() != 1) return fail("depth-2 group " + name_of(g, best) + " has no unique parent candidate");
  return feeders.front();
}

int identify_depth2(const DiagramGraph& g) {
  int best = -1;
  std::size_t best_out = 0;
  bool tie = false;
  for (int n : non_root(g)) {
    std::size_t out = 0;
    for (int m : g.out_neighbours(n)) out += m != g.root_id;
    if (best < 0 || out > best_out) {
      best = n;
      best_out = out;
      tie = false;
    } else if (out == best_out) {
      tie = true;
    }
  }
  if (best < 0) throw InvalidDiagram("depth2", "no nested groups");
  if (tie) throw InvalidDiagram("depth2", "several groups share the highest out-degree");
  return best;
}

DepthAssignment recover_depths(const DiagramGraph& g) {
  if (!g.contains(g.root_id)) throw InvalidDiagram("graph", "root group missing");
  if (g.nodes.at(g.root_id).quantifier != Quantifier::Root) throw InvalidDiagram("graph", "root group is quantified");
  std::set<int> all;
  for (int id : g.ids()) all.insert(id);
  if (g.components(all).size() != 1) throw InvalidDiagram("graph", "groups are not connected");

  const int r = g.root_id;
  DepthAssignment a;
  a.depth[r] = 0;
  for (const DiagramGraph& sub : decompose_depth0(g)) {
    const int d1 = identify_depth1(sub);
    a.depth[d1] = 1;
    a.parent[d1] = r;
    std::set<int> below;
    for (int n : sub.ids())
      if (n != r && n != d1) below.insert(n);
    for (const std::set<int>& comp : sub.components(below)) {
      if (comp.size() == 1) {
        a.depth[*comp.begin()] = 2;
        a.parent[*comp.begin()] = d1;
        continue;
      }
      std::set<int> keep = comp;
      keep.insert(r);
      keep.insert(d1);
      const DiagramGraph branch = sub.induced(keep);
      if (comp.size() == 2) {
        const PathClassification p = classify_path_pattern(branch);
        if (p.depths.depth.at(d1) != 1) throw InvalidDiagram("depth1", "branch disagrees on the depth-1 group");
        for (int n : comp) {
          a.depth[n] = p.depths.depth.at(n);
          a.parent[n] = p.depths.parent.at(n);
        }
        continue;
      }
      const int d2 = identify_depth2(branch);
      if (d2 == d1 || !comp.count(d2)) throw InvalidDiagram("depth2", "depth-2 group outside its branch");
      a.depth[d2] = 2;
      a.parent[d2] = d1;
      for (int n : comp) {
        if (n == d2) continue;
        a.depth[n] = 3;
        a.parent[n] = d2;
      }
    }
  }
  if (auto why = check_assignment(g, a)) throw InvalidDiagram("verify", *why);
  return a;
}

std::vector<DepthAssignment> brute_force_depths(const DiagramGraph& g, int max_depth) {
  std::vector<DepthAssignment> found;
  if (!g.contains(g.root_id)) return found;

  // Breadth-first order so that most nodes have an assigned neighbour.
  std::vector<int> order{g.root_id};
  std::set<int> queued{g.root_id};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int n : g.ids())
      if (!queued.count(n) && g.adjacent(order[i], n)) {
        order.push_back(n);
        queued.insert(n);
      }
  for (int n : g.ids())
    if (queued.insert(n).second) order.push_back(n);

  auto edge_fits = [](int du, int dv) {
    const int diff = std::abs(du - dv);
    if (diff == 0) return false;
    return diff == 1 ? du < dv : du > dv;
  };

  std::map<int, int> depth;
  std::map<int, int> parent;

  std::function<void(std::vector<int>&, std::size_t)> choose_parents = [&](std::vector<int>& by_depth,
                                                                          std::size_t i) {
    if (i == by_depth.size()) {
      DepthAssignment a{depth, parent};
      if (!check_assignment(g, a, max_depth)) found.push_back(std::move(a));
      return;
    }
    const int v = by_depth[i];
    for (int p : order) {
      if (depth[p] != depth[v] - 1) continue;
      parent[v] = p;
      std::set<int> anc{p};
      for (auto it = parent.find(p); it != parent.end(); it = parent.find(it->second)) anc.insert(it->second);
      bool ok = true;
      for (int w : g.ids())
        if (depth[w] < depth[v] && g.adjacent(v, w) && !anc.count(w)) ok = false;
      if (ok) choose_parents(by_depth, i + 1);
      parent.erase(v);
    }
  };

  std::function<void(std::size_t)> choose_depths = [&](std::size_t i) {
    if (i == order.size()) {
      std::vector<int> by_depth;
      for (int n : order)
        if (n != g.root_id) by_depth.push_back(n);
      std::stable_sort(by_depth.begin(), by_depth.end(), [&](int x, int y) { return depth[x] < depth[y]; });
      choose_parents(by_depth, 0);
      return;
    }
    const int v = order[i];
    for (int d = (v == g.root_id ? 0 : 1); d <= (v == g.root_id ? 0 : max_depth); ++d) {
      depth[v] = d;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int w = order[j];
        if (g.has_edge(v, w)) ok = edge_fits(d, depth[w]);
        if (ok && g.has_edge(w, v)) ok = edge_fits(depth[w], d);
      }
      if (ok) choose_depths(i + 1);
    }
    depth.erase(v);
  };
  choose_depths(0);
  std::sort(found.begin(), found.end());
  return found;
}

logic::LogicTree recover_logic_tree(const diagram::Diagram& d, const DepthAssignment& a) {
  std::map<int, logic::LtNode> nodes;
  std::map<std::string, int> group_of;
  for (const diagram::TableGroup& g : d.groups) {
    logic::LtNode& n = nodes[g.id];
    n.quantifier = g.quantifier;
    for (const diagram::TableBox& b : g.tables) {
      n.tables.push_back({b.alias, b.table_name});
      group_of[b.alias] = g.id;
      for (const diagram::Row& row : b.rows)
        if (row.is_selection()) n.predicates.push_back({{b.alias, row.attribute}, row.op, row.constant});
    }
  }

  logic::LogicTree lt;
  for (const diagram::Edge& e : d.edges) {
    if (e.select_link) {
      lt.select_list.push_back({e.to.alias, e.to.attribute});
      continue;
    }
    const int ga = group_of.at(e.from.alias);
    const int gb = group_of.at(e.to.alias);
    const int home = a.depth.at(ga) >= a.depth.at(gb) ? ga : gb;
    nodes[home].predicates.push_back(
        {{e.from.alias, e.from.attribute}, e.op(), ColumnRef{e.to.alias, e.to.attribute}});
  }

  std::map<int, std::vector<int>> children;
  int root = -1;
  for (const auto& [id, depth] : a.depth) {
    if (depth == 0) root = id;
    if (auto p = a.parent.find(id); p != a.parent.end()) children[p->second].push_back(id);
  }
  std::function<logic::LtNode(int)> assemble = [&](int id) {
    logic::LtNode n = std::move(nodes[id]);
    for (int c : children[id]) n.children.push_back(assemble(c));
    return n;
  };
  lt.root = assemble(root);
  logic::canonicalize(lt);
  return lt;
}

logic::LogicTree recover_logic_tree(const diagram::Diagram& d) {
  const DiagramGraph g = graph_of(d);
  return recover_logic_tree(d, recover_depths(g));
}

nlohmann::ordered_json to_json(const DepthAssignment& a, const DiagramGraph& g) {
  nlohmann::ordered_json j;
  j["depths"] = nlohmann::ordered_json::object();
  j["parents"] = nlohmann::ordered_json::object();
  for (const auto& [id, depth] : a.depth) j["depths"][name_of(g, id)] = depth;
  for (const auto& [id, parent] : a.parent) j["parents"][name_of(g, id)] = name_of(g, parent);
  return j;
}

}  // namespace qdiag::recovery
