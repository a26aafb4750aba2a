#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qdiag/common.hpp"

namespace qdiag::sql {

enum class TokenKind {
  Identifier,
  Keyword,   ///< text is upper-cased
  Number,
  String,    ///< text is the unquoted content
  Operator,  ///< comparison operators and arithmetic symbols
  LParen,
  RParen,
  Comma,
  Dot,
  Star,
  Semicolon,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourceLocation loc;

  bool is_keyword(std::string_view kw) const { return kind == TokenKind::Keyword && text == kw; }
};

/// Human-readable description used in diagnostics ("keyword WHERE", "end of input").
std::string describe(const Token& tok);

/// Splits SQL text into tokens. Keywords are matched case-insensitively;
/// identifiers keep their case. Throws SyntaxError on stray characters,
/// unterminated strings and quoted identifiers.
std::vector<Token> tokenize(std::string_view text);

}  // namespace qdiag::sql
