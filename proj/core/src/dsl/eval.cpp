#include "puiseux/dsl/eval.hpp"

#include <algorithm>
#include <set>

#include "puiseux/dsl/parser.hpp"
#include "puiseux/error.hpp"

namespace puiseux::dsl {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Cap on the number of lengths tried for interval1 before giving up.
constexpr std::uint64_t kMaxIntervalLengths = 100000;

bool has_sequence(FamilyKind kind) {
  return kind != FamilyKind::kIntervalGe1 && kind != FamilyKind::kIntervalSquareDen;
}

bool exact_membership(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kExB:
    case FamilyKind::kSquareDen:
    case FamilyKind::kIntervalGe1:
    case FamilyKind::kIntervalSquareDen:
      return true;
    default:
      return false;
  }
}

std::optional<std::uint64_t> param(const FamilyValue& f, const std::string& name) {
  auto it = f.params.find(name);
  if (it == f.params.end()) return std::nullopt;
  return it->second;
}

std::string merge_provenance(const std::string& a, const std::string& b) {
  if (a == b || b == "exact") return a;
  if (a == "exact") return b;
  return a + "; " + b;
}

std::string family_text(const FamilyValue& f) {
  std::string out = "family(" + std::string(family_name(f.kind));
  for (const auto& [k, v] : f.params) out += ", " + k + "=" + std::to_string(v);
  return out + ")";
}

std::string need_bound(const FamilyValue& f, std::string_view what, std::string_view hint) {
  return std::string(what) + " on " + family_text(f) + " needs a bound: pass " +
         std::string(hint);
}

// Truncation size and its label, from the family parameters or the session.
struct SeqBound {
  std::uint64_t k;
  std::string label;
};

std::optional<SeqBound> sequence_bound(const FamilyValue& f, const EvalOptions& opts) {
  if (auto k = param(f, "K")) return SeqBound{*k, "K=" + std::to_string(*k)};
  if (auto w = param(f, "window")) return SeqBound{*w, "window=" + std::to_string(*w)};
  if (opts.window) return SeqBound{*opts.window, "K=" + std::to_string(*opts.window)};
  return std::nullopt;
}

std::optional<std::uint64_t> den_bound(const FamilyValue& f, const EvalOptions& opts) {
  if (auto d = param(f, "den_bound")) return d;
  return opts.den_bound;
}

MonoidValue truncated_value(FamilyKind kind, std::optional<std::uint64_t> n, const SeqBound& b) {
  if (b.k == 0) fail(ErrorCode::kInvalidArgument, "truncation size must be >= 1");
  MonoidValue v{truncate({kind, n.value_or(b.k)}, b.k), evidence_provenance(b.label), true};
  v.family_source.emplace(kind, b.k);
  return v;
}

void check_params(const FamilyRef& ref, bool lattice, FamilyKind kind) {
  for (const auto& p : ref.params) {
    bool ok = false;
    if (lattice) {
      ok = p.name == "box";
    } else if (p.name == "K" || p.name == "window") {
      ok = has_sequence(kind);
    } else if (p.name == "den_bound") {
      ok = kind == FamilyKind::kIntervalGe1;
    } else if (p.name == "n") {
      ok = kind == FamilyKind::kCompanion || kind == FamilyKind::kGramsCompanion;
    }
    if (!ok) {
      fail(ErrorCode::kInvalidArgument,
           "parameter '" + p.name + "' does not apply to family '" + ref.name + "'");
    }
  }
}

std::optional<FamilyKind> family_sum(FamilyKind a, FamilyKind b) {
  auto is = [&](FamilyKind x, FamilyKind y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  if (is(FamilyKind::kExA, FamilyKind::kExB)) return FamilyKind::kExAExB;
  if (is(FamilyKind::kIntervalGe1, FamilyKind::kSquareDen)) return FamilyKind::kIntervalSquareDen;
  if (is(FamilyKind::kGrams, FamilyKind::kCompanion)) return FamilyKind::kGramsCompanion;
  return std::nullopt;
}

MonoidValue combine(const MonoidValue& lhs, const MonoidValue& rhs) {
  const auto* lf = std::get_if<FgMonoid>(&lhs.value);
  const auto* rf = std::get_if<FgMonoid>(&rhs.value);
  if (lf && rf) {
    return {internal_sum(*lf, *rf), merge_provenance(lhs.provenance, rhs.provenance),
            lhs.truncated || rhs.truncated};
  }
  const auto* la = std::get_if<FamilyValue>(&lhs.value);
  const auto* ra = std::get_if<FamilyValue>(&rhs.value);
  if (la && ra) {
    auto kind = family_sum(la->kind, ra->kind);
    if (!kind) {
      fail(ErrorCode::kKindMismatch, "no procedure for the sum " + family_text(*la) + " + " +
                                         family_text(*ra) + "; truncate both with K=");
    }
    FamilyValue sum{*kind, la->params};
    for (const auto& [k, v] : ra->params) {
      auto [it, inserted] = sum.params.emplace(k, v);
      if (!inserted && it->second != v) {
        fail(ErrorCode::kInvalidArgument, "conflicting values for parameter '" + k + "'");
      }
    }
    return {sum};
  }
  const auto* ll = std::get_if<LatticeValue>(&lhs.value);
  const auto* rl = std::get_if<LatticeValue>(&rhs.value);
  if (ll && rl) {
    std::set<LatticeKind> kinds{ll->kind, rl->kind};
    if (kinds != std::set<LatticeKind>{LatticeKind::kQuadrant, LatticeKind::kUpperHalf}) {
      fail(ErrorCode::kKindMismatch, "only quadrant + upperhalf is supported among lattices");
    }
    return {LatticeValue{LatticeKind::kLexCone, ll->box ? ll->box : rl->box}};
  }
  if (ll || rl) fail(ErrorCode::kKindMismatch, "cannot add a lattice monoid to a Puiseux monoid");
  const FamilyValue& fam = la ? *la : *ra;
  if (has_sequence(fam.kind)) {
    fail(ErrorCode::kNeedsBound,
         "sum of a finitely generated monoid with " + family_text(fam) + " needs K=");
  }
  fail(ErrorCode::kKindMismatch, "no procedure for a finitely generated monoid plus " +
                                     family_text(fam));
}

std::vector<std::string> rational_strings(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

void require_nonnegative(const Rational& q) {
  if (q.sign() < 0) fail(ErrorCode::kInvalidArgument, "negative argument " + q.str());
}

// ---- finitely generated (possibly a truncation) ----

ResultValue fg_answer(const Query& query, const FgMonoid& m, bool truncated, Budget budget,
                      std::string& provenance) {
  const auto& a = query.args;
  auto missing = [&](const Rational& q) { return truncated && !m.contains(q, budget); };
  switch (query.kind) {
    case QueryKind::kAtoms:
      return AtomList{rational_strings(m.atoms())};
    case QueryKind::kProps:
      return m.classify(budget);
    case QueryKind::kZ:
      if (missing(a[0])) return FactorizationSet(a[0], {});
      return m.factorizations(a[0], budget);
    case QueryKind::kL:
      if (missing(a[0])) return LengthSet{a[0], {}};
      return m.lengths(a[0], budget);
    case QueryKind::kZl:
      if (missing(a[0])) return FactorizationSet(a[0], {});
      return m.factorizations_of_length(a[0], *query.length, budget);
    case QueryKind::kMember: {
      bool in = m.contains(a[0], budget);
      if (in) provenance = "exact";  // a member of a truncation is a member
      return BoolAnswer{"member", in};
    }
    case QueryKind::kDivides: {
      bool d = m.divides(a[0], a[1], budget);
      if (d) provenance = "exact";
      return BoolAnswer{"divides", d};
    }
    case QueryKind::kMcd: {
      auto all = m.mcd_set(a[0], a[1], budget);
      return McdAnswer{all.back(), all};
    }
  }
  fail(ErrorCode::kInternal, "unhandled query");
}

// ---- untruncated families ----

FactorizationSet interval_factorizations(const Rational& q, std::uint64_t d, Budget budget) {
  if (q.is_zero()) return FactorizationSet(q, {Factorization()});
  std::vector<Factorization> items;
  Integer top = q.floor();
  if (top > kMaxIntervalLengths) {
    fail(ErrorCode::kBudgetExceeded, "too many lengths to enumerate for " + q.str());
  }
  for (std::uint64_t ell = 1; ell <= top.get_ui(); ++ell) {
    auto part = interval_length_factorizations(q, ell, d, budget);
    items.insert(items.end(), part.items().begin(), part.items().end());
  }
  return FactorizationSet(q, std::move(items));
}

// ell with ell <= q < 2 ell: q/ell repeated ell times lies in [1, 2).
LengthSet interval_lengths(const Rational& q) {
  LengthSet out{q, {}};
  if (q.is_zero()) {
    out.lengths.push_back(0);
    return out;
  }
  Integer top = q.floor();
  if (top > kMaxIntervalLengths) {
    fail(ErrorCode::kBudgetExceeded, "too many lengths to enumerate for " + q.str());
  }
  for (std::uint64_t ell = 1; ell <= top.get_ui(); ++ell) {
    if (q < Rational(2 * ell)) out.lengths.push_back(ell);
  }
  return out;
}

FactorizationSet exact_family_factorizations(FamilyKind kind, const Rational& q, Budget budget) {
  if (kind == FamilyKind::kIntervalSquareDen) {
    return interval_sqden_factorizations(q, budget).factorizations;
  }
  if (q.is_zero()) return FactorizationSet(q, {Factorization()});
  return pruned_factorizations(kind, q, budget);
}

LengthSet lengths_of(const FactorizationSet& set) {
  return LengthSet{set.target(), set.lengths()};
}

ResultValue family_answer(const Query& query, const FamilyValue& f, const EvalOptions& opts,
                          std::string& provenance) {
  const auto& a = query.args;
  const Budget budget = opts.budget;
  const std::string_view keyword = query_keyword(query.kind);
  auto seq = sequence_bound(f, opts);
  auto truncation = [&]() -> std::optional<MonoidValue> {
    if (!has_sequence(f.kind) || !seq) return std::nullopt;
    return truncated_value(f.kind, param(f, "n"), *seq);
  };
  auto via_truncation = [&]() -> ResultValue {
    auto t = truncation();
    if (!t) fail(ErrorCode::kNeedsBound, need_bound(f, keyword, "K=... or --window"));
    provenance = t->provenance;
    return fg_answer(query, std::get<FgMonoid>(t->value), true, budget, provenance);
  };
  const bool exact_z = f.kind == FamilyKind::kExB || f.kind == FamilyKind::kSquareDen ||
                       f.kind == FamilyKind::kIntervalSquareDen;
  const bool interval = f.kind == FamilyKind::kIntervalGe1;

  switch (query.kind) {
    case QueryKind::kAtoms: {
      if (interval) {
        auto d = den_bound(f, opts);
        if (!d) fail(ErrorCode::kNeedsBound, need_bound(f, keyword, "den_bound=... or --den-bound"));
        std::set<Rational> atoms;
        for (std::uint64_t den = 1; den <= *d; ++den) {
          for (std::uint64_t num = den; num < 2 * den; ++num) {
            atoms.insert(Rational::reduce(num, den));
          }
        }
        provenance = evidence_provenance("D=" + std::to_string(*d));
        return AtomList{rational_strings({atoms.begin(), atoms.end()})};
      }
      if (f.kind == FamilyKind::kIntervalSquareDen) {
        if (!seq) fail(ErrorCode::kNeedsBound, need_bound(f, keyword, "--window"));
        std::vector<Rational> atoms;
        if (interval_sqden_is_atom(Rational(1), budget)) atoms.push_back(Rational(1));
        for (std::uint64_t n = 1; n <= seq->k; ++n) {
          Rational g = family_generator({FamilyKind::kSquareDen, 1}, n);
          if (interval_sqden_is_atom(g, budget)) atoms.push_back(g);
        }
        std::sort(atoms.begin(), atoms.end());
        provenance = evidence_provenance(seq->label);
        return AtomList{rational_strings(atoms)};
      }
      return via_truncation();
    }
    case QueryKind::kProps: {
      std::optional<std::uint64_t> bound;
      if (interval) {
        bound = den_bound(f, opts);
      } else if (seq) {
        bound = seq->k;
      } else if (f.kind == FamilyKind::kIntervalSquareDen) {
        bound = 1;  // every check for this sum is window-free
      }
      if (!bound) fail(ErrorCode::kNeedsBound, need_bound(f, keyword, "K=... or --window"));
      return family_properties(f.kind, *bound, budget);
    }
    case QueryKind::kZ:
    case QueryKind::kL:
    case QueryKind::kZl: {
      require_nonnegative(a[0]);
      if (query.kind == QueryKind::kL && interval) return interval_lengths(a[0]);
      FactorizationSet set;
      if (exact_z) {
        set = exact_family_factorizations(f.kind, a[0], budget);
      } else if (interval) {
        auto d = den_bound(f, opts);
        if (!d) fail(ErrorCode::kNeedsBound, need_bound(f, keyword, "den_bound=... or --den-bound"));
        provenance = evidence_provenance("D=" + std::to_string(*d));
        set = query.kind == QueryKind::kZl
                  ? interval_length_factorizations(a[0], *query.length, *d, budget)
                  : interval_factorizations(a[0], *d, budget);
      } else {
        return via_truncation();
      }
      if (query.kind == QueryKind::kL) return lengths_of(set);
      if (query.kind == QueryKind::kZl) return set.with_length(*query.length);
      return set;
    }
    case QueryKind::kMember:
      if (exact_membership(f.kind)) {
        require_nonnegative(a[0]);
        return BoolAnswer{"member", family_contains(f.kind, a[0], budget)};
      }
      return via_truncation();
    case QueryKind::kDivides:
      if (exact_membership(f.kind)) {
        require_nonnegative(a[0]);
        require_nonnegative(a[1]);
        bool d = a[0] <= a[1] && family_contains(f.kind, a[0], budget) &&
                 family_contains(f.kind, a[1], budget) &&
                 family_contains(f.kind, a[1] - a[0], budget);
        return BoolAnswer{"divides", d};
      }
      return via_truncation();
    case QueryKind::kMcd:
      if (!has_sequence(f.kind)) {
        fail(ErrorCode::kNeedsBound, "mcd on " + family_text(f) + " has no bounded procedure");
      }
      return via_truncation();
  }
  fail(ErrorCode::kInternal, "unhandled query");
}

// ---- lattices ----

ResultValue lattice_answer(const Query& query, const LatticeValue& l, const EvalOptions& opts,
                           std::string& provenance) {
  auto box = l.box ? l.box : opts.box;
  const std::string name(lattice_name(l.kind));
  if (query.kind != QueryKind::kAtoms && query.kind != QueryKind::kProps) {
    fail(ErrorCode::kKindMismatch,
         std::string(query_keyword(query.kind)) + " is not available for lattice '" + name + "'");
  }
  if (!box) {
    fail(ErrorCode::kNeedsBound, std::string(query_keyword(query.kind)) + " on lattice '" + name +
                                     "' needs a bound: pass box=... or --box");
  }
  if (query.kind == QueryKind::kProps) return lattice_properties(l.kind, *box);
  provenance = evidence_provenance("B=" + std::to_string(*box));
  std::vector<std::string> atoms;
  for (const auto& p : lat_atoms_in_box(l.kind, *box)) atoms.push_back(p.str());
  return AtomList{std::move(atoms)};
}

std::string where(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
}

}  // namespace

std::string describe(const MonoidValue& value) {
  return std::visit(
      overloaded{
          [&](const FgMonoid& m) {
            std::string out = m.str();
            if (value.provenance != "exact") out += " [" + value.provenance + "]";
            return out;
          },
          [](const FamilyValue& f) { return family_text(f); },
          [](const LatticeValue& l) {
            std::string out(lattice_name(l.kind));
            if (l.box) out += " [box=" + std::to_string(*l.box) + "]";
            return out;
          },
      },
      value.value);
}

MonoidValue Session::evaluate(const MonoidExpr& expr) const {
  return std::visit(
      overloaded{
          [](const FgLiteral& lit) { return MonoidValue{FgMonoid(lit.generators)}; },
          [](const Cyclic& c) { return MonoidValue{FgMonoid({c.generator})}; },
          [&](const FamilyRef& ref) -> MonoidValue {
            if (auto lk = parse_lattice_name(ref.name)) {
              check_params(ref, true, FamilyKind::kGrams);
              LatticeValue l{*lk, std::nullopt};
              for (const auto& p : ref.params) l.box = static_cast<std::int64_t>(p.value);
              return {l};
            }
            auto kind = parse_family_name(ref.name);
            if (!kind) fail(ErrorCode::kInvalidArgument, "unknown family '" + ref.name + "'");
            check_params(ref, false, *kind);
            FamilyValue f{*kind, {}};
            for (const auto& p : ref.params) {
              if (!f.params.emplace(p.name, p.value).second) {
                fail(ErrorCode::kInvalidArgument, "parameter '" + p.name + "' given twice");
              }
            }
            if (param(f, "K") && param(f, "window")) {
              fail(ErrorCode::kInvalidArgument, "give either K= or window=, not both");
            }
            if (auto b = sequence_bound(f, EvalOptions{}); b && has_sequence(*kind)) {
              return truncated_value(*kind, param(f, "n"), *b);
            }
            return {f};
          },
          [&](const SumExpr& sum) { return combine(evaluate(*sum.lhs), evaluate(*sum.rhs)); },
          [&](const Ident& id) -> MonoidValue {
            auto it = env_.find(id.name);
            if (it == env_.end()) {
              fail(ErrorCode::kUnboundIdentifier, "unbound identifier '" + id.name + "'");
            }
            return it->second;
          },
      },
      expr.node);
}

QueryResult Session::answer(const Query& query) const {
  MonoidValue m = evaluate(*query.monoid);
  QueryResult result{print(Statement{query}), AtomList{}, m.provenance};
  if (query.kind == QueryKind::kProps && m.family_source) {
    result.value = family_properties(m.family_source->first, m.family_source->second,
                                     options_.budget);
    return result;
  }
  result.value = std::visit(
      overloaded{
          [&](const FgMonoid& fg) {
            return fg_answer(query, fg, m.truncated, options_.budget, result.provenance);
          },
          [&](const FamilyValue& f) {
            return family_answer(query, f, options_, result.provenance);
          },
          [&](const LatticeValue& l) {
            return lattice_answer(query, l, options_, result.provenance);
          },
      },
      m.value);
  return result;
}

std::vector<QueryResult> Session::run(const Program& program) {
  std::vector<QueryResult> out;
  for (const auto& statement : program) {
    SourcePos pos = std::visit([](const auto& s) { return s.pos; }, statement);
    try {
      if (const auto* let = std::get_if<Let>(&statement)) {
        env_.insert_or_assign(let->name, evaluate(*let->value));
      } else {
        out.push_back(answer(std::get<Query>(statement)));
      }
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      throw Error(e.code(), where(pos) + e.what());
    }
  }
  return out;
}

std::vector<QueryResult> Session::run(std::string_view source) { return run(parse(source)); }

std::vector<std::string> Session::bindings() const {
  std::vector<std::string> out;
  for (const auto& [name, value] : env_) out.push_back(name + " = " + describe(value));
  return out;
}

}  // namespace puiseux::dsl
