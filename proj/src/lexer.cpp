#include <cctype>

#include "pcalc/parser.hpp"

namespace pcalc::script {

ParseError::ParseError(SourceLocation loc, const std::string& message)
    : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                         message),
      loc_(loc),
      message_(message) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourceLocation loc;
  std::size_t i = 0;
  std::vector<SourceLocation> open;  // newlines inside parentheses are whitespace

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
    }
  };
  auto push = [&](TokenType t, std::size_t len) {
    out.push_back({t, std::string(src.substr(i, len)), loc, i});
    advance(len);
  };

  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n' || c == ';') {
      if (open.empty()) {
        push(TokenType::Newline, 1);
      } else if (c == ';') {
        throw ParseError(loc, "';' inside parentheses");
      } else {
        advance(1);
      }
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t n = 1;
      while (i + n < src.size() && ident_char(src[i + n])) ++n;
      push(TokenType::Identifier, n);
      continue;
    }
    if (digit(c)) {
      std::size_t n = 1;
      while (i + n < src.size() && digit(src[i + n])) ++n;
      if (i + n < src.size() && ident_start(src[i + n])) {
        throw ParseError(loc, "malformed number");
      }
      push(TokenType::Integer, n);
      continue;
    }
    if (c == '@') {
      std::size_t n = 1;
      while (i + n < src.size() && digit(src[i + n])) ++n;
      if (n == 1) throw ParseError(loc, "expected an index after '@'");
      push(TokenType::Generator, n);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '\\') {
      push(TokenType::Wedge, 2);
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      push(TokenType::Arrow, 2);
      continue;
    }
    switch (c) {
      case '+': push(TokenType::Plus, 1); continue;
      case '-': push(TokenType::Minus, 1); continue;
      case '*': push(TokenType::Star, 1); continue;
      case '/': push(TokenType::Slash, 1); continue;
      case '^': push(TokenType::Caret, 1); continue;
      case ',': push(TokenType::Comma, 1); continue;
      case '=': push(TokenType::Equals, 1); continue;
      case ':': push(TokenType::Colon, 1); continue;
      case '(':
        open.push_back(loc);
        push(TokenType::LParen, 1);
        continue;
      case ')':
        if (open.empty()) throw ParseError(loc, "unbalanced ')'");
        open.pop_back();
        push(TokenType::RParen, 1);
        continue;
      default: break;
    }
    if (static_cast<unsigned char>(c) >= 0x80) throw ParseError(loc, "non-ASCII character");
    throw ParseError(loc, std::string("unexpected character '") + c + "'");
  }
  if (!open.empty()) throw ParseError(open.back(), "unclosed '('");
  out.push_back({TokenType::End, "", loc, i});
  return out;
}

}  // namespace pcalc::script
