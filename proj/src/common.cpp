#include "qdiag/common.hpp"

#include "qdiag/error.hpp"

namespace qdiag {

std::string_view to_string(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return "<";
    case CompareOp::LessEqual: return "<=";
    case CompareOp::Equal: return "=";
    case CompareOp::NotEqual: return "<>";
    case CompareOp::GreaterEqual: return ">=";
    case CompareOp::Greater: return ">";
  }
  return "?";
}

std::optional<CompareOp> parse_compare_op(std::string_view text) {
  if (text == "<") return CompareOp::Less;
  if (text == "<=" || text == "≤") return CompareOp::LessEqual;
  if (text == "=") return CompareOp::Equal;
  if (text == "<>" || text == "!=" || text == "≠") return CompareOp::NotEqual;
  if (text == ">=" || text == "≥") return CompareOp::GreaterEqual;
  if (text == ">") return CompareOp::Greater;
  return std::nullopt;
}

CompareOp swap_operands(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return CompareOp::Greater;
    case CompareOp::LessEqual: return CompareOp::GreaterEqual;
    case CompareOp::GreaterEqual: return CompareOp::LessEqual;
    case CompareOp::Greater: return CompareOp::Less;
    default: return op;
  }
}

CompareOp complement(CompareOp op) {
  switch (op) {
    case CompareOp::Less: return CompareOp::GreaterEqual;
    case CompareOp::LessEqual: return CompareOp::Greater;
    case CompareOp::Equal: return CompareOp::NotEqual;
    case CompareOp::NotEqual: return CompareOp::Equal;
    case CompareOp::GreaterEqual: return CompareOp::Less;
    case CompareOp::Greater: return CompareOp::LessEqual;
  }
  return op;
}

std::string to_string(const ColumnRef& ref) {
  if (ref.alias.empty()) return ref.attribute;
  return ref.alias + "." + ref.attribute;
}

std::string to_sql(const Constant& c) {
  if (c.kind == Constant::Kind::Number) return c.literal;
  std::string out = "'";
  for (char ch : c.literal) {
    if (ch == '\'') out += '\'';
    out += ch;
  }
  out += '\'';
  return out;
}

namespace {

std::string at(SourceLocation loc) {
  return std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

}  // namespace

SyntaxError::SyntaxError(SourceLocation loc, std::string expected, const std::string& found)
    : Error(at(loc) + ": syntax error: expected " + expected + ", found " + found),
      loc_(loc),
      expected_(std::move(expected)) {}

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::Or: return "OR";
    case Feature::GroupBy: return "GROUP BY";
    case Feature::Aggregate: return "aggregate";
    case Feature::OuterJoin: return "outer join";
    case Feature::Union: return "UNION";
    case Feature::Distinct: return "DISTINCT";
    case Feature::Having: return "HAVING";
    case Feature::OrderBy: return "ORDER BY";
    case Feature::Limit: return "LIMIT";
    case Feature::Arithmetic: return "arithmetic expression";
    case Feature::TopLevelStar: return "SELECT * in the outermost query";
  }
  return "?";
}

UnsupportedFeature::UnsupportedFeature(Feature feature, SourceLocation loc)
    : Error(at(loc) + ": unsupported feature: " + std::string(to_string(feature))),
      feature_(feature),
      loc_(loc) {}

UnknownAlias::UnknownAlias(std::string ref, SourceLocation loc)
    : Error(at(loc) + ": unknown table alias '" + ref + "'"), ref_(std::move(ref)), loc_(loc) {}

AmbiguousColumn::AmbiguousColumn(std::string attribute, SourceLocation loc)
    : Error(at(loc) + ": ambiguous unqualified column '" + attribute + "'"),
      attribute_(std::move(attribute)),
      loc_(loc) {}

MalformedSubquery::MalformedSubquery(std::string what, SourceLocation loc)
    : Error(at(loc) + ": malformed subquery: " + what), loc_(loc) {}

InvalidDiagram::InvalidDiagram(std::string stage, const std::string& detail)
    : Error("invalid diagram (" + stage + "): " + detail), stage_(std::move(stage)) {}

}  // namespace qdiag
