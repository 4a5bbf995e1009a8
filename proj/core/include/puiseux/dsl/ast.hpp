#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux::dsl {

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct MonoidExpr;
using MonoidExprPtr = std::shared_ptr<const MonoidExpr>;

struct FgLiteral {
  std::vector<Rational> generators;
};

struct Cyclic {
  Rational generator;
};

struct FamilyParam {
  std::string name;
  std::uint64_t value = 0;
};

struct FamilyRef {
  std::string name;
  std::vector<FamilyParam> params;
};

/// Internal sum; the parser builds left-associated chains.
struct SumExpr {
  MonoidExprPtr lhs;
  MonoidExprPtr rhs;
};

struct Ident {
  std::string name;
};

struct MonoidExpr {
  std::variant<FgLiteral, Cyclic, FamilyRef, SumExpr, Ident> node;
  SourcePos pos;
};

enum class QueryKind { kAtoms, kProps, kZ, kL, kMember, kZl, kMcd, kDivides };

struct Query {
  QueryKind kind = QueryKind::kAtoms;
  MonoidExprPtr monoid;
  std::vector<Rational> args;
  std::optional<std::uint64_t> length;  // Zl only
  SourcePos pos;
};

struct Let {
  std::string name;
  MonoidExprPtr value;
  SourcePos pos;
};

using Statement = std::variant<Let, Query>;
using Program = std::vector<Statement>;

std::string_view query_keyword(QueryKind kind);

/// Structural equality; source positions are ignored.
bool same(const MonoidExpr& a, const MonoidExpr& b);
bool same(const Statement& a, const Statement& b);
bool same(const Program& a, const Program& b);

}  // namespace puiseux::dsl
