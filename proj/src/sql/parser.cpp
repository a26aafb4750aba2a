#include "qdiag/sql/parser.hpp"

#include <array>

#include "qdiag/error.hpp"
#include "qdiag/sql/lexer.hpp"

namespace qdiag::sql {

namespace {

constexpr std::array<std::string_view, 5> kAggregates = {"COUNT", "SUM", "AVG", "MIN", "MAX"};

bool is_aggregate_name(const std::string& ident) {
  std::string up;
  for (char c : ident) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (std::string_view a : kAggregates)
    if (up == a) return true;
  return false;
}

bool is_arithmetic(const Token& t) {
  return t.kind == TokenKind::Star ||
         (t.kind == TokenKind::Operator &&
          (t.text == "+" || t.text == "-" || t.text == "/" || t.text == "%" || t.text == "|"));
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Query parse_statement() {
    Query q = parse_query(/*nested=*/false);
    if (peek().kind == TokenKind::Semicolon) next();
    reject_trailing_clause();
    if (peek().kind != TokenKind::End) fail("end of statement");
    return q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(peek().loc, expected, describe(peek()));
  }

  void expect_keyword(std::string_view kw) {
    if (!peek().is_keyword(kw)) fail("keyword " + std::string(kw));
    next();
  }

  void expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) fail(what);
    next();
  }

  std::string expect_identifier(const std::string& what) {
    if (peek().kind != TokenKind::Identifier) fail(what);
    return next().text;
  }

  /// Clauses that may follow FROM/WHERE in full SQL but are outside the fragment.
  void reject_trailing_clause() const {
    const Token& t = peek();
    if (t.kind != TokenKind::Keyword) return;
    if (t.text == "GROUP") throw UnsupportedFeature(Feature::GroupBy, t.loc);
    if (t.text == "HAVING") throw UnsupportedFeature(Feature::Having, t.loc);
    if (t.text == "ORDER") throw UnsupportedFeature(Feature::OrderBy, t.loc);
    if (t.text == "LIMIT" || t.text == "OFFSET") throw UnsupportedFeature(Feature::Limit, t.loc);
    if (t.text == "UNION" || t.text == "INTERSECT" || t.text == "EXCEPT")
      throw UnsupportedFeature(Feature::Union, t.loc);
    if (t.text == "OR") throw UnsupportedFeature(Feature::Or, t.loc);
  }

  Query parse_query(bool nested) {
    Query q;
    q.loc.at = peek().loc;
    expect_keyword("SELECT");
    if (peek().is_keyword("DISTINCT")) throw UnsupportedFeature(Feature::Distinct, peek().loc);
    if (peek().is_keyword("ALL")) next();  // SELECT ALL is the default set quantifier

    if (peek().kind == TokenKind::Star) {
      if (!nested) throw UnsupportedFeature(Feature::TopLevelStar, peek().loc);
      next();
      q.select_star = true;
    } else {
      q.select_list.push_back(parse_select_item());
      while (peek().kind == TokenKind::Comma) {
        next();
        q.select_list.push_back(parse_select_item());
      }
    }

    expect_keyword("FROM");
    q.from_list.push_back(parse_table_ref());
    for (;;) {
      reject_join();
      if (peek().kind != TokenKind::Comma) break;
      next();
      q.from_list.push_back(parse_table_ref());
    }

    if (peek().is_keyword("WHERE")) {
      next();
      q.where_clause = parse_conjunction();
    }
    reject_trailing_clause();
    return q;
  }

  Column parse_select_item() {
    if (peek().kind == TokenKind::Identifier && peek(1).kind == TokenKind::LParen &&
        is_aggregate_name(peek().text))
      throw UnsupportedFeature(Feature::Aggregate, peek().loc);
    Column c = parse_column();
    reject_arithmetic();
    if (peek().is_keyword("AS")) fail("',' or FROM (column aliases are not supported)");
    return c;
  }

  void reject_join() const {
    const Token& t = peek();
    if (t.kind != TokenKind::Keyword) return;
    if (t.text == "LEFT" || t.text == "RIGHT" || t.text == "FULL" || t.text == "OUTER")
      throw UnsupportedFeature(Feature::OuterJoin, t.loc);
    if (t.text == "JOIN" || t.text == "INNER" || t.text == "CROSS")
      fail("',' (explicit JOIN syntax is not supported)");
  }

  TableRef parse_table_ref() {
    TableRef t;
    t.loc.at = peek().loc;
    if (peek().kind == TokenKind::LParen) fail("table name (derived tables are not supported)");
    t.table_name = expect_identifier("table name");
    if (peek().is_keyword("AS")) {
      next();
      t.alias = expect_identifier("table alias");
    } else if (peek().kind == TokenKind::Identifier) {
      t.alias = next().text;
    } else {
      t.alias = t.table_name;
    }
    return t;
  }

  Column parse_column() {
    Column c;
    c.loc.at = peek().loc;
    std::string first = expect_identifier("column reference");
    if (peek().kind == TokenKind::Dot) {
      next();
      c.ref.alias = std::move(first);
      c.ref.attribute = expect_identifier("attribute name");
    } else {
      c.ref.attribute = std::move(first);
    }
    return c;
  }

  void reject_arithmetic() const {
    if (is_arithmetic(peek())) throw UnsupportedFeature(Feature::Arithmetic, peek().loc);
  }

  Conjunction parse_conjunction() {
    Conjunction conj;
    parse_conjunct_into(conj);
    for (;;) {
      if (peek().is_keyword("OR")) throw UnsupportedFeature(Feature::Or, peek().loc);
      if (!peek().is_keyword("AND")) break;
      next();
      parse_conjunct_into(conj);
    }
    return conj;
  }

  void parse_conjunct_into(Conjunction& conj) {
    // A parenthesised group that is not a subquery is a nested conjunction.
    if (peek().kind == TokenKind::LParen && !peek(1).is_keyword("SELECT")) {
      next();
      Conjunction inner = parse_conjunction();
      expect(TokenKind::RParen, "')'");
      for (Predicate& p : inner.parts) conj.parts.push_back(std::move(p));
      return;
    }
    conj.parts.push_back(parse_predicate());
  }

  Box<Query> parse_subquery() {
    expect(TokenKind::LParen, "'(' before subquery");
    if (!peek().is_keyword("SELECT")) fail("SELECT");
    Query q = parse_query(/*nested=*/true);
    if (peek().kind != TokenKind::RParen) fail("')' after subquery");
    next();
    return Box<Query>(std::move(q));
  }

  Predicate parse_predicate() {
    Predicate p;
    p.loc.at = peek().loc;
    bool negated = false;
    if (peek().is_keyword("NOT")) {
      next();
      negated = true;
      if (peek().is_keyword("NOT")) fail("predicate after NOT");
    }

    if (peek().is_keyword("EXISTS")) {
      next();
      Exists e;
      e.negated = negated;
      e.subquery = parse_subquery();
      p.node = std::move(e);
      return p;
    }

    const SourceLocation lhs_loc = peek().loc;
    std::variant<Column, Constant> lhs = parse_operand();
    reject_arithmetic();

    if (peek().is_keyword("NOT") || peek().is_keyword("IN")) {
      bool not_in = false;
      if (peek().is_keyword("NOT")) {
        next();
        not_in = true;
        if (!peek().is_keyword("IN")) fail("IN");
      }
      next();
      if (!std::holds_alternative<Column>(lhs)) throw SyntaxError(lhs_loc, "column reference before IN", "constant");
      In in;
      in.negated = negated != not_in;
      in.column = std::get<Column>(std::move(lhs));
      in.subquery = parse_subquery();
      p.node = std::move(in);
      return p;
    }

    if (peek().kind != TokenKind::Operator) fail("comparison operator");
    auto op = parse_compare_op(peek().text);
    if (!op) {
      if (is_arithmetic(peek())) throw UnsupportedFeature(Feature::Arithmetic, peek().loc);
      fail("comparison operator");
    }
    next();

    if (peek().is_keyword("ANY") || peek().is_keyword("SOME") || peek().is_keyword("ALL")) {
      QuantifierMode mode = peek().is_keyword("ALL") ? QuantifierMode::All : QuantifierMode::Any;
      next();
      if (!std::holds_alternative<Column>(lhs))
        throw SyntaxError(lhs_loc, "column reference before quantified comparison", "constant");
      Quantified qp;
      qp.negated = negated;
      qp.column = std::get<Column>(std::move(lhs));
      qp.op = *op;
      qp.mode = mode;
      qp.subquery = parse_subquery();
      p.node = std::move(qp);
      return p;
    }

    if (negated) throw SyntaxError(p.loc.at, "EXISTS, IN or a quantified subquery after NOT", "comparison");
    if (peek().kind == TokenKind::LParen) fail("ANY or ALL before subquery (scalar subqueries are not supported)");

    const SourceLocation rhs_loc = peek().loc;
    std::variant<Column, Constant> rhs = parse_operand();
    reject_arithmetic();

    Comparison cmp;
    if (std::holds_alternative<Column>(lhs)) {
      cmp.lhs = std::get<Column>(std::move(lhs));
      cmp.op = *op;
      cmp.rhs = std::move(rhs);
    } else if (std::holds_alternative<Column>(rhs)) {
      cmp.lhs = std::get<Column>(std::move(rhs));
      cmp.op = swap_operands(*op);
      cmp.rhs = std::move(lhs);
    } else {
      throw SyntaxError(rhs_loc, "column reference (a comparison needs at most one constant)", "constant");
    }
    p.node = std::move(cmp);
    return p;
  }

  std::variant<Column, Constant> parse_operand() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      next();
      return Constant{Constant::Kind::Number, t.text};
    }
    if (t.kind == TokenKind::Operator && t.text == "-" && peek(1).kind == TokenKind::Number) {
      next();
      std::string lit = "-" + next().text;
      return Constant{Constant::Kind::Number, lit};
    }
    if (t.kind == TokenKind::String) {
      next();
      return Constant{Constant::Kind::String, t.text};
    }
    if (t.kind == TokenKind::Identifier && peek(1).kind == TokenKind::LParen) {
      if (is_aggregate_name(t.text)) throw UnsupportedFeature(Feature::Aggregate, t.loc);
      fail("column reference or constant (function calls are not supported)");
    }
    if (t.kind == TokenKind::Identifier) return parse_column();
    fail("column reference or constant");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

Query parse(std::string_view sql_text) { return Parser(tokenize(sql_text)).parse_statement(); }

}  // namespace qdiag::sql
