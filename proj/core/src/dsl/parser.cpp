#include "puiseux/dsl/parser.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "lexer.hpp"

namespace puiseux::dsl {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += i + 1 == items.size() ? " or " : ", ";
    out += items[i];
  }
  return out;
}

struct Keyword {
  std::string_view text;
  QueryKind kind;
};

constexpr std::array<Keyword, 8> kQueries{{
    {"atoms", QueryKind::kAtoms},
    {"props", QueryKind::kProps},
    {"Z", QueryKind::kZ},
    {"L", QueryKind::kL},
    {"member", QueryKind::kMember},
    {"Zl", QueryKind::kZl},
    {"mcd", QueryKind::kMcd},
    {"divides", QueryKind::kDivides},
}};

constexpr std::array<std::string_view, 4> kMonoidWords{"let", "pm", "cyclic", "family"};

bool reserved(std::string_view word) {
  if (std::find(kMonoidWords.begin(), kMonoidWords.end(), word) != kMonoidWords.end()) {
    return true;
  }
  return std::any_of(kQueries.begin(), kQueries.end(),
                     [&](const Keyword& k) { return k.text == word; });
}

std::vector<std::string> statement_starts() {
  std::vector<std::string> out{"'let'"};
  for (const auto& k : kQueries) out.push_back("'" + std::string(k.text) + "'");
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program program() {
    Program out;
    if (peek().kind == TokenKind::kEnd) return out;
    out.push_back(statement());
    while (peek().kind == TokenKind::kSemi) {
      next();
      if (peek().kind == TokenKind::kEnd) break;
      out.push_back(statement());
    }
    if (peek().kind != TokenKind::kEnd) error({"';'", "'+'", "end of input"});
    return out;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }

  [[noreturn]] void error(std::vector<std::string> expected) const {
    throw SyntaxError(peek().pos, describe(peek()), std::move(expected));
  }

  const Token& expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) error({what});
    return next();
  }

  bool at_word(std::string_view word) const {
    return peek().kind == TokenKind::kIdent && peek().text == word;
  }

  Statement statement() {
    if (at_word("let")) {
      SourcePos pos = next().pos;
      if (peek().kind != TokenKind::kIdent || reserved(peek().text)) error({"identifier"});
      std::string name = next().text;
      expect(TokenKind::kEquals, "'='");
      return Let{std::move(name), mexpr(), pos};
    }
    if (peek().kind == TokenKind::kIdent) {
      for (const auto& k : kQueries) {
        if (peek().text == k.text) return query(k.kind);
      }
    }
    error(statement_starts());
  }

  Query query(QueryKind kind) {
    Query q;
    q.kind = kind;
    q.pos = next().pos;
    expect(TokenKind::kLParen, "'('");
    q.monoid = mexpr();
    std::size_t rats = 0;
    switch (kind) {
      case QueryKind::kAtoms:
      case QueryKind::kProps: rats = 0; break;
      case QueryKind::kZ:
      case QueryKind::kL:
      case QueryKind::kMember:
      case QueryKind::kZl: rats = 1; break;
      case QueryKind::kMcd:
      case QueryKind::kDivides: rats = 2; break;
    }
    for (std::size_t i = 0; i < rats; ++i) {
      if (peek().kind != TokenKind::kComma) error({"'+'", "','"});
      next();
      q.args.push_back(rational());
    }
    if (kind == QueryKind::kZl) {
      expect(TokenKind::kComma, "','");
      q.length = integer();
    }
    if (peek().kind != TokenKind::kRParen) error({"'+'", "')'"});
    next();
    return q;
  }

  MonoidExprPtr mexpr() {
    MonoidExprPtr lhs = term();
    while (peek().kind == TokenKind::kPlus) {
      SourcePos pos = next().pos;
      MonoidExprPtr rhs = term();
      lhs = std::make_shared<const MonoidExpr>(MonoidExpr{SumExpr{lhs, rhs}, pos});
    }
    return lhs;
  }

  MonoidExprPtr term() {
    if (peek().kind != TokenKind::kIdent || at_word("let") ||
        std::any_of(kQueries.begin(), kQueries.end(),
                    [&](const Keyword& k) { return at_word(k.text); })) {
      error({"'pm'", "'cyclic'", "'family'", "identifier"});
    }
    SourcePos pos = peek().pos;
    std::string word = next().text;
    if (word == "pm") {
      expect(TokenKind::kLParen, "'('");
      FgLiteral lit;
      lit.generators.push_back(rational());
      while (peek().kind == TokenKind::kComma) {
        next();
        lit.generators.push_back(rational());
      }
      if (peek().kind != TokenKind::kRParen) error({"','", "')'"});
      next();
      return std::make_shared<const MonoidExpr>(MonoidExpr{std::move(lit), pos});
    }
    if (word == "cyclic") {
      expect(TokenKind::kLParen, "'('");
      Rational g = rational();
      expect(TokenKind::kRParen, "')'");
      return std::make_shared<const MonoidExpr>(MonoidExpr{Cyclic{std::move(g)}, pos});
    }
    if (word == "family") {
      expect(TokenKind::kLParen, "'('");
      if (peek().kind != TokenKind::kIdent) error({"family name"});
      FamilyRef fam;
      fam.name = next().text;
      while (peek().kind == TokenKind::kComma) {
        next();
        if (peek().kind != TokenKind::kIdent) error({"parameter name"});
        FamilyParam param;
        param.name = next().text;
        expect(TokenKind::kEquals, "'='");
        param.value = integer();
        fam.params.push_back(std::move(param));
      }
      if (peek().kind != TokenKind::kRParen) error({"','", "')'"});
      next();
      return std::make_shared<const MonoidExpr>(MonoidExpr{std::move(fam), pos});
    }
    return std::make_shared<const MonoidExpr>(MonoidExpr{Ident{std::move(word)}, pos});
  }

  std::uint64_t integer() {
    if (peek().kind != TokenKind::kInt) error({"integer"});
    const Token& tok = next();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc()) {
      fail(ErrorCode::kInvalidArgument, "integer literal " + tok.text + " out of range at " +
                                            std::to_string(tok.pos.line) + ":" +
                                            std::to_string(tok.pos.column));
    }
    return value;
  }

  Rational rational() {
    if (peek().kind != TokenKind::kInt) error({"rational"});
    const Token& num = next();
    Integer n(num.text, 10);
    Integer d = 1;
    if (peek().kind == TokenKind::kSlash) {
      next();
      if (peek().kind != TokenKind::kInt) error({"integer"});
      const Token& den = next();
      d = Integer(den.text, 10);
      if (sgn(d) == 0) {
        fail(ErrorCode::kInvalidArgument, "zero denominator in rational literal at " +
                                              std::to_string(den.pos.line) + ":" +
                                              std::to_string(den.pos.column));
      }
    }
    return Rational::reduce(std::move(n), std::move(d));
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string found, std::vector<std::string> expected)
    : Error(ErrorCode::kSyntax, std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                                    ": syntax error at " + found + ": expected " +
                                    join(expected)),
      pos_(pos),
      found_(std::move(found)),
      expected_(std::move(expected)) {}

Program parse(std::string_view text) { return Parser(tokenize(text)).program(); }

std::string_view query_keyword(QueryKind kind) {
  for (const auto& k : kQueries) {
    if (k.kind == kind) return k.text;
  }
  return "?";
}

}  // namespace puiseux::dsl
