#pragma once

// Grammar:
//   program := stmt (";" stmt)* [";"]
//   stmt    := "let" IDENT "=" mexpr | query
//   mexpr   := term ("+" term)*
//   term    := "pm" "(" rat {"," rat} ")" | "cyclic" "(" rat ")"
//            | "family" "(" NAME {"," IDENT "=" INT} ")" | IDENT
//   query   := ("atoms"|"props") "(" mexpr ")"
//            | ("Z"|"L"|"member") "(" mexpr "," rat ")"
//            | "Zl" "(" mexpr "," rat "," INT ")"
//            | ("mcd"|"divides") "(" mexpr "," rat "," rat ")"
//   rat     := INT ["/" INT]
// Whitespace is insignificant and "#" comments run to the end of the line.

#include <string>
#include <string_view>
#include <vector>

#include "puiseux/dsl/ast.hpp"
#include "puiseux/error.hpp"

namespace puiseux::dsl {

class SyntaxError : public Error {
 public:
  SyntaxError(SourcePos pos, std::string found, std::vector<std::string> expected);

  SourcePos pos() const { return pos_; }
  const std::string& found() const { return found_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::string found_;
  std::vector<std::string> expected_;
};

/// Throws SyntaxError, or Error(kInvalidArgument) for a zero denominator.
Program parse(std::string_view text);

/// Canonical source text; parse(print(p)) is structurally equal to p.
std::string print(const Program& program);
std::string print(const Statement& statement);
std::string print(const MonoidExpr& expr);

}  // namespace puiseux::dsl
