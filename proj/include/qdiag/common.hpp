#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qdiag {

/// The six comparison operators of the supported fragment.
enum class CompareOp { Less, LessEqual, Equal, NotEqual, GreaterEqual, Greater };

/// SQL spelling: "<", "<=", "=", "<>", ">=", ">".
std::string_view to_string(CompareOp op);

/// Accepts the SQL spellings plus "!=" and the symbols "≤", "≥", "≠".
std::optional<CompareOp> parse_compare_op(std::string_view text);

/// Operator to use when the two operands trade places (a < b  ==  b > a).
CompareOp swap_operands(CompareOp op);

/// Logical complement (NOT (a < b)  ==  a >= b).
CompareOp complement(CompareOp op);

/// `[alias].attribute`. Alias is empty only before scope resolution.
struct ColumnRef {
  std::string alias;
  std::string attribute;

  auto operator<=>(const ColumnRef&) const = default;
  bool operator==(const ColumnRef&) const = default;
};

std::string to_string(const ColumnRef& ref);

struct Constant {
  enum class Kind { String, Number };
  Kind kind = Kind::Number;
  /// Text as written; for strings, the content between the quotes with
  /// doubled quotes collapsed.
  std::string literal;

  auto operator<=>(const Constant&) const = default;
  bool operator==(const Constant&) const = default;
};

/// SQL spelling of a constant ('red', 42).
std::string to_sql(const Constant& c);

using Operand = std::variant<ColumnRef, Constant>;

struct SourceLocation {
  int line = 1;
  int column = 1;
};

}  // namespace qdiag
