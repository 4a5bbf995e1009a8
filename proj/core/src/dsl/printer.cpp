#include <type_traits>

#include "puiseux/dsl/parser.hpp"

namespace puiseux::dsl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::string print(const MonoidExpr& expr) {
  return std::visit(
      overloaded{
          [](const FgLiteral& lit) {
            std::string out = "pm(";
            for (std::size_t i = 0; i < lit.generators.size(); ++i) {
              if (i) out += ", ";
              out += lit.generators[i].str();
            }
            return out + ")";
          },
          [](const Cyclic& c) { return "cyclic(" + c.generator.str() + ")"; },
          [](const FamilyRef& f) {
            std::string out = "family(" + f.name;
            for (const auto& p : f.params) out += ", " + p.name + "=" + std::to_string(p.value);
            return out + ")";
          },
          [](const SumExpr& s) { return print(*s.lhs) + " + " + print(*s.rhs); },
          [](const Ident& id) { return id.name; },
      },
      expr.node);
}

std::string print(const Statement& statement) {
  return std::visit(overloaded{
                        [](const Let& let) { return "let " + let.name + " = " + print(*let.value); },
                        [](const Query& q) {
                          std::string out = std::string(query_keyword(q.kind)) + "(" +
                                            print(*q.monoid);
                          for (const auto& a : q.args) out += ", " + a.str();
                          if (q.length) out += ", " + std::to_string(*q.length);
                          return out + ")";
                        },
                    },
                    statement);
}

std::string print(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.size(); ++i) {
    if (i) out += ";\n";
    out += print(program[i]);
  }
  return out;
}

bool same(const MonoidExpr& a, const MonoidExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, FgLiteral>) {
          return lhs.generators == rhs.generators;
        } else if constexpr (std::is_same_v<T, Cyclic>) {
          return lhs.generator == rhs.generator;
        } else if constexpr (std::is_same_v<T, FamilyRef>) {
          if (lhs.name != rhs.name || lhs.params.size() != rhs.params.size()) return false;
          for (std::size_t i = 0; i < lhs.params.size(); ++i) {
            if (lhs.params[i].name != rhs.params[i].name ||
                lhs.params[i].value != rhs.params[i].value) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, SumExpr>) {
          return same(*lhs.lhs, *rhs.lhs) && same(*lhs.rhs, *rhs.rhs);
        } else {
          return lhs.name == rhs.name;
        }
      },
      a.node);
}

bool same(const Statement& a, const Statement& b) {
  if (a.index() != b.index()) return false;
  if (const auto* la = std::get_if<Let>(&a)) {
    const auto& lb = std::get<Let>(b);
    return la->name == lb.name && same(*la->value, *lb.value);
  }
  const auto& qa = std::get<Query>(a);
  const auto& qb = std::get<Query>(b);
  return qa.kind == qb.kind && qa.args == qb.args && qa.length == qb.length &&
         same(*qa.monoid, *qb.monoid);
}

bool same(const Program& a, const Program& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace puiseux::dsl
