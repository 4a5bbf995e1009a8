#include <gtest/gtest.h>

#include "corpus.hpp"
#include "error_code.hpp"
#include "puiseux/dsl/parser.hpp"

using namespace puiseux;
using namespace puiseux::dsl;
using testing_support::code_of;

using testing_support::kRoundTripCorpus;

TEST(Parser, CorpusRoundTrip) {
  ASSERT_GE(kRoundTripCorpus.size(), 30u);
  for (const auto& text : kRoundTripCorpus) {
    Program first = parse(text);
    std::string printed = print(first);
    Program second = parse(printed);
    EXPECT_TRUE(same(first, second)) << text << "\n  printed: " << printed;
    EXPECT_EQ(print(second), printed) << text;
  }
}

TEST(Parser, StatementCounts) {
  EXPECT_EQ(parse("let M = pm(1/2, 3/4); Z(M, 3/2)").size(), 2u);
  EXPECT_EQ(parse("").size(), 0u);
  EXPECT_EQ(parse("atoms(pm(2));").size(), 1u);
}

TEST(Parser, SumIsLeftAssociated) {
  auto program = parse("atoms(pm(2) + pm(3) + cyclic(5))");
  const auto& q = std::get<Query>(program[0]);
  const auto& outer = std::get<SumExpr>(q.monoid->node);
  EXPECT_TRUE(std::holds_alternative<SumExpr>(outer.lhs->node));
  EXPECT_TRUE(std::holds_alternative<Cyclic>(outer.rhs->node));
}

TEST(Parser, ParsesLetAndQueryShapes) {
  auto program = parse("let S = pm(2,3) + cyclic(3/4); atoms(S)");
  const auto& let = std::get<Let>(program[0]);
  EXPECT_EQ(let.name, "S");
  EXPECT_TRUE(std::holds_alternative<SumExpr>(let.value->node));
  const auto& q = std::get<Query>(program[1]);
  EXPECT_EQ(q.kind, QueryKind::kAtoms);
  EXPECT_EQ(std::get<Ident>(q.monoid->node).name, "S");

  auto zl = std::get<Query>(parse("Zl(pm(2,3), 12, 5)")[0]);
  EXPECT_EQ(zl.kind, QueryKind::kZl);
  EXPECT_EQ(zl.args, (std::vector<Rational>{Rational(12)}));
  EXPECT_EQ(zl.length, 5u);

  auto fam = std::get<Query>(parse("Z(family(exAexB, window=10), 2)")[0]);
  const auto& ref = std::get<FamilyRef>(fam.monoid->node);
  EXPECT_EQ(ref.name, "exAexB");
  ASSERT_EQ(ref.params.size(), 1u);
  EXPECT_EQ(ref.params[0].name, "window");
  EXPECT_EQ(ref.params[0].value, 10u);
}

TEST(Parser, SyntaxErrorReportsPosition) {
  try {
    parse("pm()");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.pos().line, 1);
  }
  try {
    parse("atoms(pm())");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.found(), "')'");
    EXPECT_EQ(e.pos().column, 10);
    EXPECT_NE(std::string(e.what()).find("expected rational"), std::string::npos);
  }
  try {
    parse("atoms(pm(2));\nZ(pm(2), )");
    FAIL() << "expected a syntax error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.pos().line, 2);
  }
}

TEST(Parser, ZeroDenominatorRejected) {
  EXPECT_EQ(code_of([] { parse("atoms(pm(1/0))"); }), ErrorCode::kInvalidArgument);
}

// One accepting and one rejecting input per production.
struct Case {
  const char* production;
  const char* accept;
  const char* reject;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.production; }

class Productions : public ::testing::TestWithParam<Case> {};

TEST_P(Productions, AcceptsAndRejects) {
  const Case& c = GetParam();
  EXPECT_NO_THROW(parse(c.accept)) << c.production;
  EXPECT_EQ(code_of([&] { parse(c.reject); }), ErrorCode::kSyntax) << c.production;
}

INSTANTIATE_TEST_SUITE_P(
    Grammar, Productions,
    ::testing::Values(
        Case{"program", "atoms(pm(2)); atoms(pm(3))", "atoms(pm(2)) atoms(pm(3))"},
        Case{"let", "let M = pm(2)", "let = pm(2)"},
        Case{"let-keyword-name", "let M2 = pm(2)", "let pm = pm(2)"},
        Case{"sum", "atoms(pm(2) + pm(3))", "atoms(pm(2) +)"},
        Case{"pm", "atoms(pm(2, 3/4))", "atoms(pm(2,))"},
        Case{"cyclic", "atoms(cyclic(3/4))", "atoms(cyclic(1, 2))"},
        Case{"family", "atoms(family(grams, K=3))", "atoms(family(grams, K))"},
        Case{"family-name", "atoms(family(exB))", "atoms(family(3))"},
        Case{"ident", "atoms(M)", "atoms(3)"},
        Case{"atoms-props", "props(pm(2))", "props(pm(2), 3)"},
        Case{"Z-L-member", "member(pm(2), 4)", "member(pm(2))"},
        Case{"Zl", "Zl(pm(2), 4, 2)", "Zl(pm(2), 4, 1/2)"},
        Case{"mcd-divides", "mcd(pm(2), 4, 6)", "divides(pm(2), 4)"},
        Case{"rat", "Z(pm(2), 12/3)", "Z(pm(2), /3)"},
        Case{"comment", "# note\natoms(pm(2))", "atoms(pm(2)) $"}),
    [](const auto& info) {
      std::string name = info.param.production;
      for (auto& ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      }
      return name;
    });

TEST(Printer, CanonicalText) {
  EXPECT_EQ(print(parse("let M=pm( 1/2 ,3/4 )")), "let M = pm(1/2, 3/4)");
  EXPECT_EQ(print(parse("Zl(family(exAexB,window=10),2,2)")),
            "Zl(family(exAexB, window=10), 2, 2)");
  EXPECT_EQ(print(parse("atoms(pm(2)+cyclic(6/4))")), "atoms(pm(2) + cyclic(3/2))");
  EXPECT_EQ(print(parse("atoms(pm(2)); props(pm(3))")), "atoms(pm(2));\nprops(pm(3))");
}
