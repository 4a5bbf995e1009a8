#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "puiseux/dsl/ast.hpp"

namespace puiseux::dsl {

enum class TokenKind { kIdent, kInt, kLParen, kRParen, kComma, kSemi, kPlus, kSlash, kEquals, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourcePos pos;
};

/// Throws SyntaxError on a character that starts no token.
std::vector<Token> tokenize(std::string_view text);

std::string describe(const Token& token);

}  // namespace puiseux::dsl
