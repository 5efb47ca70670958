#include "lexer.hpp"

#include <array>
#include <cctype>

namespace hammer::tptp::detail {

namespace {

bool is_alnum(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Longest match first.
constexpr std::array<std::string_view, 19> kPunctuation = {
    "<~>", "<=>", "=>", "<=", "~|", "~&", "!=", "!", "?", "~", "&",
    "|",   "=",   "(",  ")",  "[",  "]",  ",",  ":"};

}  // namespace

std::string describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::End:
      return "end of input";
    case TokenKind::Invalid:
      return "invalid character '" + token.text + "'";
    default:
      return "'" + token.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t column = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };

  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      advance(2);
      while (i < text.size() && !(text[i] == '*' && i + 1 < text.size() && text[i + 1] == '/')) {
        advance(1);
      }
      advance(2);
      continue;
    }

    Token tok;
    tok.position = {line, column};
    tok.begin = i;

    if (c == '\'' || c == '"') {
      const char quote = c;
      std::size_t j = i + 1;
      std::string content;
      bool closed = false;
      while (j < text.size() && text[j] != '\n') {
        if (text[j] == '\\' && j + 1 < text.size()) {
          content.push_back(text[j + 1]);
          j += 2;
          continue;
        }
        if (text[j] == quote) {
          closed = true;
          break;
        }
        content.push_back(text[j++]);
      }
      if (!closed) {
        tok.kind = TokenKind::Invalid;
        tok.text = std::string(1, quote);
        advance(1);
      } else {
        tok.kind = quote == '\'' ? TokenKind::SingleQuoted : TokenKind::DoubleQuoted;
        tok.text = std::move(content);
        advance(j + 1 - i);
      }
    } else if (std::isupper(static_cast<unsigned char>(c)) != 0 ||
               std::islower(static_cast<unsigned char>(c)) != 0 || c == '$') {
      std::size_t j = i + 1;
      if (c == '$' && j < text.size() && text[j] == '$') ++j;
      while (j < text.size() && is_alnum(text[j])) ++j;
      tok.text = std::string(text.substr(i, j - i));
      if (c == '$') {
        tok.kind = tok.text.size() > 1 ? TokenKind::DollarWord : TokenKind::Invalid;
      } else {
        tok.kind = std::isupper(static_cast<unsigned char>(c)) != 0 ? TokenKind::UpperWord
                                                                     : TokenKind::LowerWord;
      }
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) != 0) ++j;
      tok.kind = TokenKind::Integer;
      tok.text = std::string(text.substr(i, j - i));
      advance(j - i);
    } else if (c == '.') {
      tok.kind = TokenKind::Punct;
      tok.text = ".";
      advance(1);
    } else {
      bool matched = false;
      for (auto p : kPunctuation) {
        if (text.substr(i, p.size()) == p) {
          tok.kind = TokenKind::Punct;
          tok.text = std::string(p);
          advance(p.size());
          matched = true;
          break;
        }
      }
      if (!matched) {
        tok.kind = TokenKind::Invalid;
        tok.text = std::string(1, c);
        advance(1);
      }
    }
    tok.end = i;
    out.push_back(std::move(tok));
  }

  Token end;
  end.kind = TokenKind::End;
  end.position = {line, column};
  end.begin = end.end = text.size();
  out.push_back(std::move(end));
  return out;
}

}  // namespace hammer::tptp::detail
