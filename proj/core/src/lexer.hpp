#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "teamlogic/error.hpp"

namespace teamlogic::detail {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semicolon,
  Comma,
  Dot,
  Amp,
  Bar,
  Bang,
  Eq,
  Neq,
  Slash,
  Arrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Semicolon: return "';'";
    case Tok::Comma: return "','";
    case Tok::Dot: return "'.'";
    case Tok::Amp: return "'&'";
    case Tok::Bar: return "'|'";
    case Tok::Bang: return "'!'";
    case Tok::Eq: return "'='";
    case Tok::Neq: return "'!='";
    case Tok::Slash: return "'/'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "token";
}

/// Tokenizes the shared formula alphabet; `#` starts a comment to end of line.
inline std::vector<Token> tokenize(std::string_view text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t col = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::string s, std::size_t c) {
    out.push_back(Token{kind, std::move(s), line, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    const std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      push(Tok::Ident, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Number, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    auto two = [&](char next) { return i + 1 < text.size() && text[i + 1] == next; };
    Tok kind;
    std::size_t len = 1;
    switch (ch) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ';': kind = Tok::Semicolon; break;
      case ',': kind = Tok::Comma; break;
      case '.': kind = Tok::Dot; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '/': kind = Tok::Slash; break;
      case '=': kind = Tok::Eq; break;
      case '!':
        if (two('=')) {
          kind = Tok::Neq;
          len = 2;
        } else {
          kind = Tok::Bang;
        }
        break;
      case '-':
        if (two('>')) {
          kind = Tok::Arrow;
          len = 2;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, start_col);
    }
    push(kind, std::string(text.substr(i, len)), start_col);
    i += len;
    col += len;
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

/// Cursor over a token vector with the usual expect/accept helpers.
class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t idx = pos_ + ahead;
    return idx < tokens_.size() ? tokens_[idx] : tokens_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_ident(std::string_view text) const { return at(Tok::Ident) && peek().text == text; }

  Token next() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    next();
    return true;
  }

  Token expect(Tok kind, const char* context) {
    if (!at(kind)) fail(std::string("expected ") + describe(kind) + " " + context);
    return next();
  }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(message + ", found " + found, t.line, t.column);
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace teamlogic::detail
