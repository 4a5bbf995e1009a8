#include "lexer.hpp"

#include <cctype>

#include "puiseux/dsl/parser.hpp"

namespace puiseux::dsl {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&]() {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    Token tok;
    tok.pos = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokenKind::kIdent;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        tok.text += text[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      tok.kind = TokenKind::kInt;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        tok.text += text[i];
        advance();
      }
    } else {
      switch (c) {
        case '(': tok.kind = TokenKind::kLParen; break;
        case ')': tok.kind = TokenKind::kRParen; break;
        case ',': tok.kind = TokenKind::kComma; break;
        case ';': tok.kind = TokenKind::kSemi; break;
        case '+': tok.kind = TokenKind::kPlus; break;
        case '/': tok.kind = TokenKind::kSlash; break;
        case '=': tok.kind = TokenKind::kEquals; break;
        default:
          throw SyntaxError(pos, std::string("'") + c + "'", {"token"});
      }
      tok.text = std::string(1, c);
      advance();
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokenKind::kEnd;
  end.pos = pos;
  out.push_back(end);
  return out;
}

std::string describe(const Token& token) {
  if (token.kind == TokenKind::kEnd) return "end of input";
  return "'" + token.text + "'";
}

}  // namespace puiseux::dsl
