#pragma once

// Tokenizer shared by the term and formula parsers.

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "halgeo/error.hpp"

namespace halgeo::detail {

enum class Tok { Ident, LParen, RParen, Comma, EqEq, Tilde, Amp, Bar, Dot, LBracket, RBracket, Arrow, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    throw SyntaxError(what + " at offset " + std::to_string(i) + " in \"" + std::string(src) + "\"");
  };
  while (i < src.size()) {
    auto c = static_cast<unsigned char>(src[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "==") {
      out.push_back({Tok::EqEq, "==", i});
      i += 2;
      continue;
    }
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", i});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case '~': kind = Tok::Tilde; break;
      case '&': kind = Tok::Amp; break;
      case '|': kind = Tok::Bar; break;
      case '.': kind = Tok::Dot; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ':': kind = Tok::Colon; break;
      default: fail(std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({kind, std::string(1, static_cast<char>(c)), i});
    ++i;
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

class TokenStream {
 public:
  TokenStream(std::string_view src) : src_(src), toks_(tokenize(src)) {}

  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void fail(const std::string& what) const {
    const auto& t = peek();
    std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(what + ", got " + got + " at offset " + std::to_string(t.pos) + " in \"" +
                      std::string(src_) + "\"");
  }
  bool at_end() const { return peek().kind == Tok::End; }
  std::size_t mark() const { return pos_; }
  void reset(std::size_t m) { pos_ = m; }

 private:
  std::string_view src_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace halgeo::detail
