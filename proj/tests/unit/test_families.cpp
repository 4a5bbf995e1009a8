#include <gtest/gtest.h>

#include "error_code.hpp"
#include "helpers.hpp"
#include "puiseux/families.hpp"

using namespace puiseux;
using testing_support::code_of;
using testing_support::Q;
using testing_support::strs;

using Strings = std::vector<std::string>;
using Indices = std::vector<std::uint64_t>;

TEST(FamilyGenerator, Examples) {
  EXPECT_EQ(family_generator({FamilyKind::kGrams}, 2), Q("1/20"));
  EXPECT_EQ(family_generator({FamilyKind::kExA}, 1), Q("4/5"));
  EXPECT_EQ(family_generator({FamilyKind::kExB}, 1), Q("6/5"));
  EXPECT_EQ(family_generator({FamilyKind::kSquareDen}, 1), Q("3/4"));
  EXPECT_EQ(family_generator({FamilyKind::kSquareDen}, 2), Q("4/9"));
  EXPECT_EQ(code_of([] { family_generator({FamilyKind::kIntervalGe1}, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { family_generator({FamilyKind::kGrams}, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(FamilyNames, RoundTrip) {
  for (auto kind : {FamilyKind::kGrams, FamilyKind::kCompanion, FamilyKind::kExA, FamilyKind::kExB,
                    FamilyKind::kSquareDen, FamilyKind::kIntervalGe1, FamilyKind::kGramsCompanion,
                    FamilyKind::kExAExB, FamilyKind::kIntervalSquareDen}) {
    EXPECT_EQ(parse_family_name(family_name(kind)), kind);
  }
  EXPECT_FALSE(parse_family_name("nope"));
  EXPECT_EQ(prime_indexing(FamilyKind::kGrams), "p_n = n-th odd prime");
  EXPECT_EQ(prime_indexing(FamilyKind::kExA), "p_n = n-th prime >= 5");
  EXPECT_EQ(prime_indexing(FamilyKind::kSquareDen), "p_n = n-th prime");
}

TEST(Truncate, Examples) {
  auto g = truncate({FamilyKind::kGrams}, 3);
  EXPECT_EQ(strs(g.generators()), (Strings{"1/56", "1/20", "1/6"}));
  EXPECT_EQ(g.atoms().size(), 3u);
  EXPECT_EQ(strs(truncate({FamilyKind::kExAExB}, 2).atoms()),
            (Strings{"4/5", "6/7", "8/7", "6/5"}));
  auto s = truncate({FamilyKind::kSquareDen}, 2);
  EXPECT_EQ(strs(s.atoms()), (Strings{"4/9", "3/4"}));
  EXPECT_EQ(code_of([] { truncate({FamilyKind::kIntervalGe1}, 2); }), ErrorCode::kInvalidArgument);
}

TEST(GramsCompanion, Examples) {
  auto one = grams_companion(1, 1);
  EXPECT_EQ(one.f, 3u);
  EXPECT_EQ(one.b, (std::vector<Rational>{Q("25/168")}));
  auto two = grams_companion(1, 2);
  EXPECT_EQ(two.c, (Indices{4}));
  EXPECT_EQ(two.b[1], Q("29/336"));
  EXPECT_GT(two.b[1], Q("1/12"));
  EXPECT_EQ(Q("1/12"), Q("28/336"));
  EXPECT_EQ(grams_companion(2, 1).f, 8u);
  EXPECT_EQ(code_of([] { grams_companion(1, 0); }), ErrorCode::kInvalidArgument);
}

TEST(AntimatterWitness, Examples) {
  auto a1 = antimatter_witness_grams(1);
  EXPECT_TRUE(a1.verified);
  EXPECT_EQ(a1.target, Q("1/6"));
  ASSERT_EQ(a1.summands.size(), 2u);
  EXPECT_EQ(a1.summands[0].value, Q("25/168"));
  EXPECT_EQ(a1.summands[1].value, Q("1/56"));

  auto b1 = antimatter_witness_companion(1, 1);
  EXPECT_TRUE(b1.verified);
  EXPECT_EQ(b1.target, Q("25/168"));
  EXPECT_EQ(b1.summands[0].value, Q("29/336"));
  EXPECT_EQ(b1.summands[1].value, Q("1/16"));
  ASSERT_TRUE(b1.certificate);
  EXPECT_EQ(b1.certificate->index, 4u);
  EXPECT_EQ(b1.certificate->multiplicity, 11u);
  EXPECT_EQ(family_generator({FamilyKind::kGrams}, 4), Q("1/176"));

  auto a2 = antimatter_witness_grams(2);
  EXPECT_TRUE(a2.verified);
  EXPECT_EQ(a2.summands[1].value, family_generator({FamilyKind::kGrams}, 8));
  EXPECT_EQ(a2.summands[0].value + a2.summands[1].value, Q("1/20"));
}

TEST(DivisorCandidates, Examples) {
  EXPECT_EQ(divisor_candidates(FamilyKind::kExB, Q("12/5")), (Indices{1}));
  EXPECT_EQ(divisor_candidates(FamilyKind::kSquareDen, Q("9/8")), (Indices{1}));
  EXPECT_TRUE(divisor_candidates(FamilyKind::kExB, Q("2")).empty());
  EXPECT_EQ(divisor_candidates(FamilyKind::kSquareDen, Q("9/2")), (Indices{1, 2}));
  EXPECT_EQ(code_of([] { divisor_candidates(FamilyKind::kExA, Q("2")); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { divisor_candidates(FamilyKind::kExB, Q("0")); }),
            ErrorCode::kInvalidArgument);
}

TEST(PrunedFactorizations, ExactSearches) {
  EXPECT_EQ(strs(pruned_factorizations(FamilyKind::kExB, Q("12/5"))), (Strings{"2·6/5"}));
  EXPECT_TRUE(pruned_factorizations(FamilyKind::kExB, Q("2")).empty());
  EXPECT_TRUE(pruned_factorizations(FamilyKind::kSquareDen, Q("9/8")).empty());
  EXPECT_EQ(strs(pruned_factorizations(FamilyKind::kSquareDen, Q("3/2"))), (Strings{"2·3/4"}));
}

TEST(FamilyFactorizations, Examples) {
  auto z = family_factorizations(FamilyKind::kExAExB, Q("2"), 5);
  EXPECT_EQ(z.with_length(2).size(), 5u);
  EXPECT_TRUE(family_factorizations(FamilyKind::kIntervalSquareDen, Q("9/8"), 1).empty());
  EXPECT_EQ(strs(family_factorizations(FamilyKind::kIntervalSquareDen, Q("7/4"), 1)),
            (Strings{"1·3/4 + 1·1"}));
  EXPECT_EQ(code_of([] { family_factorizations(FamilyKind::kGrams, Q("1"), 3); }),
            ErrorCode::kInvalidArgument);
}

TEST(IntervalSquareDen, MembershipAndAtoms) {
  EXPECT_TRUE(family_contains(FamilyKind::kIntervalSquareDen, Q("9/8")));
  EXPECT_TRUE(family_contains(FamilyKind::kIntervalSquareDen, Q("3/4")));
  EXPECT_FALSE(family_contains(FamilyKind::kIntervalSquareDen, Q("1/2")));
  EXPECT_TRUE(interval_sqden_is_atom(Q("1")));
  EXPECT_TRUE(interval_sqden_is_atom(Q("3/4")));
  EXPECT_FALSE(interval_sqden_is_atom(Q("9/8")));
  EXPECT_FALSE(interval_sqden_is_atom(Q("7/4")));
  auto search = interval_sqden_factorizations(Q("9/8"));
  EXPECT_TRUE(search.factorizations.empty());
  ASSERT_EQ(search.trace.size(), 2u);
  EXPECT_EQ(search.trace[1].residual, Q("1/8"));
}

TEST(FamilyContains, ExactOrNeedsBound) {
  EXPECT_TRUE(family_contains(FamilyKind::kIntervalGe1, Q("9/8")));
  EXPECT_FALSE(family_contains(FamilyKind::kIntervalGe1, Q("1/2")));
  EXPECT_TRUE(family_contains(FamilyKind::kExB, Q("12/5")));
  EXPECT_FALSE(family_contains(FamilyKind::kExB, Q("2")));
  EXPECT_EQ(code_of([] { family_contains(FamilyKind::kExA, Q("2")); }), ErrorCode::kNeedsBound);
}

TEST(IntervalLength, Examples) {
  auto z = interval_length_factorizations(Q("3"), 2, 12);
  for (int n = 3; n <= 12; ++n) {
    Rational e = Rational::reduce(1, n);
    Factorization pair({{Q("3/2") - e, 1}, {Q("3/2") + e, 1}});
    EXPECT_NE(std::find(z.items().begin(), z.items().end(), pair), z.items().end()) << n;
  }
  EXPECT_EQ(strs(interval_length_factorizations(Q("3"), 2, 2)), (Strings{"2·3/2"}));
  EXPECT_EQ(strs(interval_length_factorizations(Q("2"), 2, 4)), (Strings{"2·1"}));
  EXPECT_EQ(interval_length_factorizations(Q("3"), 2, 4).size(), 3u);
  EXPECT_EQ(interval_length_factorizations(Q("3"), 2, 8).size(), 11u);
}

TEST(FamilyProperties, Flags) {
  auto grams = family_properties(FamilyKind::kGrams, 6);
  EXPECT_EQ(grams.flag("atomic"), true);
  EXPECT_EQ(grams.flag("BBM"), false);
  EXPECT_EQ(grams.flag("generators_atoms_in_truncation"), true);

  auto sum = family_properties(FamilyKind::kExAExB, 6);
  EXPECT_EQ(sum.flag("BFM"), true);
  EXPECT_EQ(sum.flag("FFM"), false);
  EXPECT_EQ(sum.flag("|Z_2(2)|_strictly_increasing"), true);

  auto interval = family_properties(FamilyKind::kIntervalGe1, 12);
  EXPECT_EQ(interval.flag("BBM"), true);
  EXPECT_EQ(interval.flag("FFM"), false);
  EXPECT_EQ(interval.flag("LFFM"), false);

  auto json = sum.to_json();
  EXPECT_NE(json.find(R"("provenance":"paper")"), std::string::npos);
  EXPECT_NE(json.find(R"x("provenance":"evidence(K=6)")x"), std::string::npos);
}
