#include "qdiag/logic/logic_tree.hpp"

#include <algorithm>

namespace qdiag::logic {

std::string_view to_string(Quantifier q) {
  switch (q) {
    case Quantifier::Root: return "ROOT";
    case Quantifier::Exists: return "EXISTS";
    case Quantifier::NotExists: return "NOT_EXISTS";
    case Quantifier::ForAll: return "FOR_ALL";
  }
  return "?";
}

std::optional<Quantifier> parse_quantifier(std::string_view text) {
  if (text == "ROOT") return Quantifier::Root;
  if (text == "EXISTS") return Quantifier::Exists;
  if (text == "NOT_EXISTS") return Quantifier::NotExists;
  if (text == "FOR_ALL") return Quantifier::ForAll;
  return std::nullopt;
}

bool Predicate::references(const std::string& alias) const {
  if (lhs.alias == alias) return true;
  return is_join() && rhs_column().alias == alias;
}

Predicate normalize(Predicate p) {
  if (p.is_join() && p.rhs_column() < p.lhs) {
    ColumnRef rhs = p.rhs_column();
    p.rhs = p.lhs;
    p.lhs = std::move(rhs);
    p.op = swap_operands(p.op);
  }
  return p;
}

std::string to_string(const Predicate& p) {
  std::string out = to_string(p.lhs);
  out += ' ';
  out += to_string(p.op);
  out += ' ';
  out += p.is_join() ? to_string(p.rhs_column()) : to_sql(p.rhs_constant());
  return out;
}

namespace {

void canonicalize_node(LtNode& n) {
  for (Predicate& p : n.predicates) p = normalize(std::move(p));
  std::sort(n.predicates.begin(), n.predicates.end());
  n.predicates.erase(std::unique(n.predicates.begin(), n.predicates.end()), n.predicates.end());
  std::sort(n.tables.begin(), n.tables.end());
  for (LtNode& c : n.children) canonicalize_node(c);
  std::vector<std::pair<std::string, LtNode>> keyed;
  keyed.reserve(n.children.size());
  for (LtNode& c : n.children) keyed.emplace_back(canonical_key(c), std::move(c));
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  n.children.clear();
  for (auto& [key, c] : keyed) n.children.push_back(std::move(c));
}

void append_key(const LtNode& n, std::string& out) {
  out += '(';
  out += to_string(n.quantifier);
  out += " T[";
  for (const TableDecl& t : n.tables) {
    out += t.alias;
    out += ':';
    out += t.table;
    out += ';';
  }
  out += "] P[";
  for (const Predicate& p : n.predicates) {
    out += to_string(p);
    out += ';';
  }
  out += "] C[";
  for (const LtNode& c : n.children) append_key(c, out);
  out += "])";
}

void walk(const LtNode& n, NodePath& path,
          const std::function<void(const LtNode&, const NodePath&)>& fn) {
  fn(n, path);
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    walk(n.children[i], path, fn);
    path.pop_back();
  }
}

}  // namespace

void canonicalize(LogicTree& lt) { canonicalize_node(lt.root); }

std::string canonical_key(const LtNode& node) {
  std::string out;
  append_key(node, out);
  return out;
}

int max_depth(const LogicTree& lt) {
  int deepest = 0;
  for_each_node(lt, [&](const LtNode&, const NodePath& path) {
    deepest = std::max(deepest, static_cast<int>(path.size()));
  });
  return deepest;
}

std::size_t node_count(const LogicTree& lt) {
  std::size_t n = 0;
  for_each_node(lt, [&](const LtNode&, const NodePath&) { ++n; });
  return n;
}

void for_each_node(const LogicTree& lt,
                   const std::function<void(const LtNode&, const NodePath&)>& fn) {
  NodePath path;
  walk(lt.root, path, fn);
}

const LtNode* find_node(const LogicTree& lt, const NodePath& path) {
  const LtNode* n = &lt.root;
  for (std::size_t i : path) {
    if (i >= n->children.size()) return nullptr;
    n = &n->children[i];
  }
  return n;
}

std::string to_string(const NodePath& path) {
  std::string out = "root";
  for (std::size_t i : path) out += "/" + std::to_string(i);
  return out;
}

}  // namespace qdiag::logic
