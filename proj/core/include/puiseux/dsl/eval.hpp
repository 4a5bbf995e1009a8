#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "puiseux/dsl/ast.hpp"
#include "puiseux/factorization.hpp"
#include "puiseux/families.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/lattice2.hpp"
#include "puiseux/report.hpp"
#include "puiseux/search.hpp"

namespace puiseux::dsl {

/// Bounds supplied from outside the program (CLI flags). They only fill in
/// parameters a family reference leaves out; unset means "fail with
/// kNeedsBound" where a bound is required.
struct EvalOptions {
  std::optional<std::uint64_t> window;
  std::optional<std::uint64_t> den_bound;
  std::optional<std::int64_t> box;
  Budget budget;
};

/// An infinite family that has not been truncated.
struct FamilyValue {
  FamilyKind kind = FamilyKind::kGrams;
  std::map<std::string, std::uint64_t> params;
};

struct LatticeValue {
  LatticeKind kind = LatticeKind::kQuadrant;
  std::optional<std::int64_t> box;
};

struct MonoidValue {
  std::variant<FgMonoid, FamilyValue, LatticeValue> value;
  std::string provenance = "exact";  // "evidence(K=...)" for truncations
  // A finite truncation of an infinite family: a miss is not a non-member.
  bool truncated = false;
  // Set on a truncation taken directly from a family: props reports on the
  // family at this size instead of on the finite monoid.
  std::optional<std::pair<FamilyKind, std::uint64_t>> family_source = std::nullopt;
};

struct AtomList {
  std::vector<std::string> atoms;
};

struct BoolAnswer {
  std::string key;  // "member" or "divides"
  bool value = false;
};

struct McdAnswer {
  Rational chosen;            // largest maximal common divisor
  std::vector<Rational> all;  // every maximal common divisor
};

using ResultValue =
    std::variant<FactorizationSet, LengthSet, AtomList, BoolAnswer, McdAnswer, PropertyReport>;

struct QueryResult {
  std::string query;  // canonical source of the query
  ResultValue value;
  std::string provenance = "exact";
};

std::string describe(const MonoidValue& value);

/// One evaluation environment. Let-bindings persist across run() calls.
class Session {
 public:
  explicit Session(EvalOptions options = {}) : options_(std::move(options)) {}

  /// Evaluates statements in order; returns one result per query.
  std::vector<QueryResult> run(const Program& program);

  /// Parses then runs.
  std::vector<QueryResult> run(std::string_view source);

  /// Evaluates a monoid expression against the current bindings.
  MonoidValue evaluate(const MonoidExpr& expr) const;

  /// "name = description" for each binding, sorted by name.
  std::vector<std::string> bindings() const;

  const EvalOptions& options() const { return options_; }

 private:
  QueryResult answer(const Query& query) const;

  EvalOptions options_;
  std::map<std::string, MonoidValue> env_;
};

}  // namespace puiseux::dsl
