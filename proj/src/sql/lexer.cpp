#include "qdiag/sql/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "qdiag/error.hpp"

namespace qdiag::sql {

namespace {

constexpr std::array kKeywords = {
    "SELECT", "FROM",   "WHERE", "AND",   "OR",    "NOT",       "EXISTS", "IN",    "ANY",
    "SOME",   "ALL",    "AS",    "GROUP", "BY",    "HAVING",    "ORDER",  "LIMIT", "UNION",
    "INTERSECT", "EXCEPT", "DISTINCT", "JOIN", "LEFT", "RIGHT", "FULL", "OUTER", "INNER",
    "CROSS",  "ON",     "OFFSET",
};

bool is_ident_start(unsigned char c) { return std::isalpha(c) || c == '_'; }
bool is_ident_char(unsigned char c) { return std::isalnum(c) || c == '_'; }

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      Token tok;
      tok.loc = loc_;
      if (pos_ >= text_.size()) {
        tok.kind = TokenKind::End;
        out.push_back(tok);
        return out;
      }
      const unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_ident_char(static_cast<unsigned char>(text_[pos_]))) advance();
        std::string word(text_.substr(start, pos_ - start));
        std::string up = upper(word);
        if (std::find(kKeywords.begin(), kKeywords.end(), up) != kKeywords.end()) {
          tok.kind = TokenKind::Keyword;
          tok.text = std::move(up);
        } else {
          tok.kind = TokenKind::Identifier;
          tok.text = std::move(word);
        }
      } else if (std::isdigit(c)) {
        tok.kind = TokenKind::Number;
        tok.text = read_number();
      } else if (c == '\'') {
        tok.kind = TokenKind::String;
        tok.text = read_string(tok.loc);
      } else if (c == '"' || c == '`' || c == '[') {
        throw SyntaxError(loc_, "identifier", "quoted identifier");
      } else {
        read_symbol(tok);
      }
      out.push_back(std::move(tok));
    }
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++loc_.line;
      loc_.column = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++loc_.column;
    }
    ++pos_;
  }

  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (starts_with("--")) {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (starts_with("/*")) {
        SourceLocation open = loc_;
        advance();
        advance();
        while (pos_ < text_.size() && !starts_with("*/")) advance();
        if (pos_ >= text_.size()) throw SyntaxError(open, "end of comment '*/'", "end of input");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string read_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      advance();
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string read_string(SourceLocation open) {
    advance();  // opening quote
    std::string out;
    for (;;) {
      if (pos_ >= text_.size()) throw SyntaxError(open, "closing quote", "end of input");
      if (text_[pos_] == '\'') {
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\'') {
          out += '\'';
          advance();
          advance();
          continue;
        }
        advance();
        return out;
      }
      out += text_[pos_];
      advance();
    }
  }

  void read_symbol(Token& tok) {
    static constexpr std::array<std::string_view, 9> kOps = {"<=", ">=", "<>", "!=", "≤", "≥",
                                                             "≠",  "<",  ">"};
    for (std::string_view op : kOps) {
      if (starts_with(op)) {
        tok.kind = TokenKind::Operator;
        tok.text = std::string(op);
        for (std::size_t i = 0; i < op.size(); ++i) advance();
        return;
      }
    }
    const char c = text_[pos_];
    switch (c) {
      case '(': tok.kind = TokenKind::LParen; break;
      case ')': tok.kind = TokenKind::RParen; break;
      case ',': tok.kind = TokenKind::Comma; break;
      case '.': tok.kind = TokenKind::Dot; break;
      case '*': tok.kind = TokenKind::Star; break;
      case ';': tok.kind = TokenKind::Semicolon; break;
      case '=':
      case '+':
      case '-':
      case '/':
      case '%':
      case '|': tok.kind = TokenKind::Operator; break;
      default: {
        std::string found = "character '";
        found += c;
        found += "'";
        throw SyntaxError(loc_, "token", found);
      }
    }
    tok.text = std::string(1, c);
    advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  SourceLocation loc_;
};

}  // namespace

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::Identifier: return "identifier '" + tok.text + "'";
    case TokenKind::Keyword: return "keyword " + tok.text;
    case TokenKind::Number: return "number " + tok.text;
    case TokenKind::String: return "string '" + tok.text + "'";
    case TokenKind::Operator: return "'" + tok.text + "'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::End: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text) { return Lexer(text).run(); }

}  // namespace qdiag::sql
