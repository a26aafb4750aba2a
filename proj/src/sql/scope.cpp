#include "qdiag/sql/scope.hpp"

#include <map>
#include <set>

#include "qdiag/error.hpp"

namespace qdiag::sql {

namespace {

struct BlockScope {
  const BlockScope* parent = nullptr;
  std::map<std::string, std::string> aliases;  // as written -> final
  std::vector<std::string> finals;             // in FROM order
};

class Resolver {
 public:
  explicit Resolver(const Query& root) {
    for_each_block(root, [&](const Query& q) {
      for (const TableRef& t : q.from_list) reserved_.insert(t.alias);
    });
  }

  ResolvedQuery run(Query q) {
    resolve_block(q, nullptr);
    return {std::move(q), std::move(renames_)};
  }

 private:
  std::string fresh_name(const std::string& base) {
    for (int n = 2;; ++n) {
      std::string candidate = base + std::to_string(n);
      if (!reserved_.contains(candidate) && !assigned_.contains(candidate)) return candidate;
    }
  }

  void bind(Column& c, const BlockScope& scope) const {
    if (c.ref.alias.empty()) {
      if (scope.finals.size() != 1) throw AmbiguousColumn(c.ref.attribute, c.loc.at);
      c.ref.alias = scope.finals.front();
      return;
    }
    for (const BlockScope* s = &scope; s != nullptr; s = s->parent) {
      if (auto it = s->aliases.find(c.ref.alias); it != s->aliases.end()) {
        c.ref.alias = it->second;
        return;
      }
    }
    throw UnknownAlias(c.ref.alias, c.loc.at);
  }

  void resolve_block(Query& q, const BlockScope* parent) {
    const std::size_t block = block_counter_++;
    BlockScope scope;
    scope.parent = parent;
    for (TableRef& t : q.from_list) {
      if (scope.aliases.contains(t.alias))
        throw SyntaxError(t.loc.at, "distinct table aliases in one FROM list",
                          "second declaration of '" + t.alias + "'");
      std::string final_name = t.alias;
      if (assigned_.contains(final_name)) {
        final_name = fresh_name(t.alias);
        renames_.push_back({block, t.alias, final_name});
      }
      assigned_.insert(final_name);
      scope.aliases.emplace(t.alias, final_name);
      scope.finals.push_back(final_name);
      t.alias = final_name;
    }
    for (Column& c : q.select_list) bind(c, scope);
    if (!q.where_clause) return;
    for (Predicate& p : q.where_clause->parts) {
      std::visit(
          [&](auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Comparison>) {
              bind(node.lhs, scope);
              if (auto* c = std::get_if<Column>(&node.rhs)) bind(*c, scope);
            } else if constexpr (std::is_same_v<T, Exists>) {
              resolve_block(*node.subquery, &scope);
            } else {
              bind(node.column, scope);
              resolve_block(*node.subquery, &scope);
            }
          },
          p.node);
    }
  }

  std::set<std::string> reserved_;
  std::set<std::string> assigned_;
  std::vector<AliasRename> renames_;
  std::size_t block_counter_ = 0;
};

}  // namespace

ResolvedQuery resolve_scopes(const Query& ast) { return Resolver(ast).run(ast); }

}  // namespace qdiag::sql
