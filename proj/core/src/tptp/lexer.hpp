#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hammer/tptp/article.hpp"

namespace hammer::tptp::detail {

enum class TokenKind {
  UpperWord,
  LowerWord,
  DollarWord,
  SingleQuoted,
  DoubleQuoted,
  Integer,
  Punct,
  Invalid,
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePosition position;
  std::size_t begin = 0;  // byte offsets into the source
  std::size_t end = 0;

  bool is(std::string_view punct) const {
    return kind == TokenKind::Punct && text == punct;
  }
};

std::string describe(const Token& token);

/// Splits TPTP text into tokens; `%` line comments and `/* */` blocks are
/// dropped. Never throws: unknown characters become Invalid tokens so that
/// statement-level recovery can continue past them.
std::vector<Token> tokenize(std::string_view text);

}  // namespace hammer::tptp::detail
