#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qdiag/logic/validate.hpp"

namespace qdiag::testing {

namespace {

using Env = std::map<std::string, std::pair<const Relation*, const Tuple*>>;

Value lookup(const Env& env, const ColumnRef& c) {
  auto it = env.find(c.alias);
  if (it == env.end()) throw std::logic_error("unbound alias " + c.alias);
  const auto& attrs = it->second.first->attributes;
  auto pos = std::find(attrs.begin(), attrs.end(), c.attribute);
  if (pos == attrs.end()) throw std::logic_error("unknown attribute " + to_string(c));
  return (*it->second.second)[pos - attrs.begin()];
}

Value constant_value(const Constant& k) {
  if (k.kind != Constant::Kind::Number) throw std::logic_error("oracle handles numeric constants only");
  return std::stoi(k.literal);
}

bool compare(Value a, CompareOp op, Value b) {
  switch (op) {
    case CompareOp::Less: return a < b;
    case CompareOp::LessEqual: return a <= b;
    case CompareOp::Equal: return a == b;
    case CompareOp::NotEqual: return a != b;
    case CompareOp::GreaterEqual: return a >= b;
    case CompareOp::Greater: return a > b;
  }
  return false;
}

const Relation& relation(const Database& db, const std::string& table) {
  static const Relation empty;
  auto it = db.find(table);
  return it == db.end() ? empty : it->second;
}

/// Calls fn for every binding of `tables` extending env; stops when fn
/// returns true and reports whether it did.
template <class Tables, class Name, class Alias>
bool any_binding(const Tables& tables, Name name, Alias alias, const Database& db, Env& env,
                 const std::function<bool(Env&)>& fn, std::size_t i = 0) {
  if (i == tables.size()) return fn(env);
  const Relation& r = relation(db, name(tables[i]));
  for (const Tuple& row : r.rows) {
    env[alias(tables[i])] = {&r, &row};
    const bool hit = any_binding(tables, name, alias, db, env, fn, i + 1);
    env.erase(alias(tables[i]));
    if (hit) return true;
  }
  return false;
}

// ---- SQL ----

bool sql_where(const sql::Query& q, const Database& db, Env& env);

bool sql_block_any(const sql::Query& q, const Database& db, Env& env, const std::function<bool(Env&)>& fn) {
  return any_binding(
      q.from_list, [](const sql::TableRef& t) { return t.table_name; }, [](const sql::TableRef& t) { return t.alias; },
      db, env, [&](Env& e) { return sql_where(q, db, e) && fn(e); });
}

bool sql_predicate(const sql::Predicate& p, const Database& db, Env& env) {
  return std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, sql::Comparison>) {
          const Value l = lookup(env, node.lhs.ref);
          const Value r = std::holds_alternative<sql::Column>(node.rhs)
                              ? lookup(env, std::get<sql::Column>(node.rhs).ref)
                              : constant_value(std::get<Constant>(node.rhs));
          return compare(l, node.op, r);
        } else if constexpr (std::is_same_v<T, sql::Exists>) {
          const bool found = sql_block_any(*node.subquery, db, env, [](Env&) { return true; });
          return found != node.negated;
        } else if constexpr (std::is_same_v<T, sql::In>) {
          const Value v = lookup(env, node.column.ref);
          const sql::Query& sub = *node.subquery;
          const bool found =
              sql_block_any(sub, db, env, [&](Env& e) { return lookup(e, sub.select_list.at(0).ref) == v; });
          return found != node.negated;
        } else {
          const Value v = lookup(env, node.column.ref);
          const sql::Query& sub = *node.subquery;
          bool result;
          if (node.mode == sql::QuantifierMode::Any) {
            result = sql_block_any(sub, db, env,
                                   [&](Env& e) { return compare(v, node.op, lookup(e, sub.select_list.at(0).ref)); });
          } else {
            result = !sql_block_any(
                sub, db, env, [&](Env& e) { return !compare(v, node.op, lookup(e, sub.select_list.at(0).ref)); });
          }
          return result != node.negated;
        }
      },
      p.node);
}

bool sql_where(const sql::Query& q, const Database& db, Env& env) {
  if (!q.where_clause) return true;
  for (const sql::Predicate& p : q.where_clause->parts)
    if (!sql_predicate(p, db, env)) return false;
  return true;
}

// ---- logic tree ----

bool lt_holds(const logic::LtNode& n, const Database& db, Env& env);

bool lt_local(const logic::LtNode& n, const Database&, Env& env) {
  for (const logic::Predicate& p : n.predicates) {
    const Value l = lookup(env, p.lhs);
    const Value r = p.is_join() ? lookup(env, p.rhs_column()) : constant_value(p.rhs_constant());
    if (!compare(l, p.op, r)) return false;
  }
  return true;
}

bool lt_children(const logic::LtNode& n, const Database& db, Env& env) {
  for (const logic::LtNode& c : n.children)
    if (!lt_holds(c, db, env)) return false;
  return true;
}

bool lt_some(const logic::LtNode& n, const Database& db, Env& env, const std::function<bool(Env&)>& fn) {
  return any_binding(
      n.tables, [](const logic::TableDecl& t) { return t.table; }, [](const logic::TableDecl& t) { return t.alias; },
      db, env, fn);
}

bool lt_holds(const logic::LtNode& n, const Database& db, Env& env) {
  auto body = [&](Env& e) { return lt_local(n, db, e) && lt_children(n, db, e); };
  switch (n.quantifier) {
    case logic::Quantifier::Exists: return lt_some(n, db, env, body);
    case logic::Quantifier::NotExists: return !lt_some(n, db, env, body);
    case logic::Quantifier::ForAll:
      return !lt_some(n, db, env, [&](Env& e) { return lt_local(n, db, e) && !lt_children(n, db, e); });
    case logic::Quantifier::Root: break;
  }
  throw std::logic_error("ROOT below the root");
}

void add_attr(Schema& s, const ColumnRef& c, const std::map<std::string, std::string>& table_of) {
  auto& attrs = s[table_of.at(c.alias)];
  if (std::find(attrs.begin(), attrs.end(), c.attribute) == attrs.end()) attrs.push_back(c.attribute);
}

}  // namespace

ResultSet eval_sql(const sql::Query& q, const Database& db) {
  ResultSet out;
  Env env;
  sql_block_any(q, db, env, [&](Env& e) {
    Tuple t;
    for (const sql::Column& c : q.select_list) t.push_back(lookup(e, c.ref));
    out.insert(std::move(t));
    return false;
  });
  return out;
}

ResultSet eval_lt(const logic::LogicTree& lt, const Database& db) {
  ResultSet out;
  Env env;
  lt_some(lt.root, db, env, [&](Env& e) {
    if (lt_local(lt.root, db, e) && lt_children(lt.root, db, e)) {
      Tuple t;
      for (const ColumnRef& c : lt.select_list) t.push_back(lookup(e, c));
      out.insert(std::move(t));
    }
    return false;
  });
  return out;
}

Schema schema_of(const logic::LogicTree& lt) {
  Schema s;
  std::map<std::string, std::string> table_of;
  logic::for_each_node(lt, [&](const logic::LtNode& n, const logic::NodePath&) {
    for (const logic::TableDecl& t : n.tables) {
      table_of[t.alias] = t.table;
      s[t.table];
    }
  });
  for (const ColumnRef& c : lt.select_list) add_attr(s, c, table_of);
  logic::for_each_node(lt, [&](const logic::LtNode& n, const logic::NodePath&) {
    for (const logic::Predicate& p : n.predicates) {
      add_attr(s, p.lhs, table_of);
      if (p.is_join()) add_attr(s, p.rhs_column(), table_of);
    }
  });
  for (auto& [table, attrs] : s) std::sort(attrs.begin(), attrs.end());
  return s;
}

Schema schema_of(const sql::Query& q) {
  Schema s;
  std::map<std::string, std::string> table_of;
  sql::for_each_block(q, [&](const sql::Query& b) {
    for (const sql::TableRef& t : b.from_list) {
      table_of[t.alias] = t.table_name;
      s[t.table_name];
    }
  });
  auto column = [&](const sql::Column& c) { add_attr(s, c.ref, table_of); };
  sql::for_each_block(q, [&](const sql::Query& b) {
    for (const sql::Column& c : b.select_list) column(c);
    if (!b.where_clause) return;
    for (const sql::Predicate& p : b.where_clause->parts) {
      std::visit(
          [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, sql::Comparison>) {
              column(node.lhs);
              if (std::holds_alternative<sql::Column>(node.rhs)) column(std::get<sql::Column>(node.rhs));
            } else if constexpr (!std::is_same_v<T, sql::Exists>) {
              column(node.column);
            }
          },
          p.node);
    }
  });
  for (auto& [table, attrs] : s) std::sort(attrs.begin(), attrs.end());
  return s;
}

namespace {

std::vector<Tuple> all_tuples(std::size_t arity, int domain) {
  std::vector<Tuple> out{{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Tuple> next;
    for (const Tuple& t : out)
      for (Value v = 0; v < domain; ++v) {
        Tuple u = t;
        u.push_back(v);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

/// Subsets of `tuples` with at most `k` elements.
std::vector<std::vector<Tuple>> small_subsets(const std::vector<Tuple>& tuples, int k) {
  std::vector<std::vector<Tuple>> out;
  std::vector<Tuple> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (std::size_t i = from; i < tuples.size(); ++i) {
      cur.push_back(tuples[i]);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

}  // namespace

Database random_database(std::mt19937& rng, const Schema& schema, int max_rows, int domain) {
  Database db;
  for (const auto& [table, attrs] : schema) {
    Relation r{attrs, {}};
    std::uniform_int_distribution<int> rows(0, max_rows);
    std::uniform_int_distribution<Value> value(0, domain - 1);
    std::set<Tuple> distinct;
    const int n = rows(rng);
    for (int i = 0; i < n; ++i) {
      Tuple t;
      for (std::size_t a = 0; a < attrs.size(); ++a) t.push_back(value(rng));
      distinct.insert(std::move(t));
    }
    r.rows.assign(distinct.begin(), distinct.end());
    db[table] = std::move(r);
  }
  return db;
}

std::vector<Database> all_databases(const Schema& schema, int max_rows, int domain) {
  std::vector<Database> out{{}};
  for (const auto& [table, attrs] : schema) {
    const auto choices = small_subsets(all_tuples(attrs.size(), domain), max_rows);
    std::vector<Database> next;
    for (const Database& db : out)
      for (const auto& rows : choices) {
        Database d = db;
        d[table] = Relation{attrs, rows};
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

struct TreeBuilder {
  std::mt19937& rng;
  const TreeShape& shape;
  int nodes = 0;
  int next_alias = 1;

  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  template <class V>
  const auto& choose(const V& v) {
    return v[pick(0, static_cast<int>(v.size()) - 1)];
  }

  CompareOp random_op() {
    static const std::vector<CompareOp> ops{CompareOp::Less,     CompareOp::LessEqual,    CompareOp::NotEqual,
                                            CompareOp::Greater, CompareOp::GreaterEqual};
    return coin(0.6) ? CompareOp::Equal : choose(ops);
  }

  ColumnRef column(const logic::TableDecl& t) { return {t.alias, coin(0.5) ? "a" : "b"}; }

  logic::Predicate join(const logic::TableDecl& local, const logic::TableDecl& other) {
    logic::Predicate p{column(local), random_op(), column(other)};
    if (coin(0.5)) p = {p.rhs_column(), swap_operands(p.op), p.lhs};
    return p;
  }

  std::vector<logic::TableDecl> tables() {
    static const std::vector<std::string> names{"R", "S", "T", "U"};
    std::vector<logic::TableDecl> out;
    const int n = pick(1, shape.max_tables);
    for (int i = 0; i < n; ++i) {
      const std::string& t = choose(names);
      out.push_back({t + std::to_string(next_alias++), t});
    }
    return out;
  }

  /// `path` holds the tables of every ancestor, outermost first.
  logic::LtNode node(int depth, std::vector<std::vector<logic::TableDecl>>& path) {
    ++nodes;
    logic::LtNode n;
    n.quantifier = depth == 0 ? logic::Quantifier::Root
                              : (coin(shape.not_exists_bias) ? logic::Quantifier::NotExists : logic::Quantifier::Exists);
    n.tables = tables();

    int kids = 0;
    if (depth < shape.max_depth) {
      kids = pick(0, shape.max_children);
      kids = std::min(kids, shape.max_nodes - nodes);
      kids = std::max(kids, 0);
    }

    // Tie each nested node to its parent directly, or let every child carry
    // a line to both this node and the parent.
    const bool tied_by_children = depth > 0 && kids > 0 && coin(0.3);
    if (depth > 0 && !tied_by_children) n.predicates.push_back(join(choose(n.tables), choose(path.back())));

    // Extra predicates: within the node, to any ancestor, or selections.
    const int extras = pick(0, 2);
    for (int i = 0; i < extras; ++i) {
      const int kind = pick(0, 2);
      if (kind == 0 && n.tables.size() > 1) {
        n.predicates.push_back(join(n.tables[0], n.tables[1]));
      } else if (kind == 1 && !path.empty()) {
        n.predicates.push_back(join(choose(n.tables), choose(choose(path))));
      } else {
        n.predicates.push_back(
            {column(choose(n.tables)), random_op(), Constant{Constant::Kind::Number, std::to_string(pick(0, shape.constant_domain - 1))}});
      }
    }

    path.push_back(n.tables);
    for (int i = 0; i < kids; ++i) {
      logic::LtNode c = node(depth + 1, path);
      if (tied_by_children) {
        c.predicates.push_back(join(choose(c.tables), choose(n.tables)));
        c.predicates.push_back(join(choose(c.tables), choose(path[path.size() - 2])));
      }
      n.children.push_back(std::move(c));
    }
    path.pop_back();
    return n;
  }
};

}  // namespace

logic::LogicTree random_tree(std::mt19937& rng, const TreeShape& shape) {
  TreeBuilder b{rng, shape};
  std::vector<std::vector<logic::TableDecl>> path;
  logic::LogicTree lt;
  lt.root = b.node(0, path);
  lt.select_list.push_back(b.column(lt.root.tables.front()));
  if (b.coin(0.4)) lt.select_list.push_back(b.column(lt.root.tables.back()));
  if (lt.select_list.size() == 2 && lt.select_list[0] == lt.select_list[1]) lt.select_list.pop_back();
  logic::canonicalize(lt);
  if (!logic::check_nondegenerate(lt).ok()) throw std::logic_error("generator produced a degenerate tree");
  return lt;
}

}  // namespace qdiag::testing
