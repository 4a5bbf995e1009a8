#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "instances.hpp"
#include "oracle.hpp"
#include "puiseux/extension.hpp"
#include "puiseux/families.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/fg_monoid.hpp"

using namespace puiseux;
using testing_support::extension_instances;
using testing_support::Q;

namespace {

std::vector<Rational> random_gens(std::mt19937& rng) {
  std::uniform_int_distribution<int> k(1, 3), num(1, 15), den(1, 4);
  std::vector<Rational> gens;
  int n = k(rng);
  for (int i = 0; i < n; ++i) gens.push_back(Rational::reduce(num(rng), den(rng)));
  return gens;
}

}  // namespace

TEST(Properties, OracleEquivalenceOnRandomRationalMonoids) {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 120; ++trial) {
    auto gens = random_gens(rng);
    FgMonoid m(gens);
    oracle::IntMonoid o(gens);
    ASSERT_EQ(m.atoms(), o.atoms());
    ASSERT_EQ(m.scale(), o.scale);
    for (std::int64_t t = 0; t <= 40; ++t) {
      Rational q = o.drop(t);
      bool in = o.contains(q);
      ASSERT_EQ(m.contains(q), in) << m.str() << " " << q;
      if (!in) continue;
      auto z = m.factorizations(q);
      ASSERT_EQ(oracle::as_vectors(z, o.atoms()), o.vectors(q)) << m.str() << " " << q;
      auto ls = m.lengths(q).lengths;
      ASSERT_EQ(std::set<std::uint64_t>(ls.begin(), ls.end()), o.lengths(q));
      ASSERT_EQ(m.divisors(q), o.divisors(q));
    }
  }
}

TEST(Properties, LengthsAndSlicesAgreeWithFactorizations) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    FgMonoid m(random_gens(rng));
    for (const auto& q : m.smallest_members(25)) {
      auto z = m.factorizations(q);
      EXPECT_EQ(m.lengths(q).lengths, z.lengths());
      for (auto ell : z.lengths()) EXPECT_EQ(m.factorizations_of_length(q, ell), z.with_length(ell));
      EXPECT_TRUE(m.factorizations_of_length(q, z.lengths().back() + 1).empty());
    }
  }
}

TEST(Properties, DividesMatchesDivisors) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    FgMonoid m(random_gens(rng));
    auto members = m.smallest_members(15);
    for (const auto& b : members) {
      auto ds = m.divisors(b);
      for (const auto& c : members) {
        bool listed = std::binary_search(ds.begin(), ds.end(), c);
        EXPECT_EQ(m.divides(c, b), listed) << m.str() << " " << c << " | " << b;
      }
    }
  }
}

TEST(Properties, McdSetMembersSatisfyPredicate) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto gens = random_gens(rng);
    FgMonoid m(gens);
    oracle::IntMonoid o(gens);
    auto members = m.smallest_members(8);
    for (const auto& x : members) {
      for (const auto& y : members) {
        auto set = m.mcd_set(x, y);
        ASSERT_FALSE(set.empty());
        EXPECT_EQ(set, o.mcd_set(x, y)) << m.str() << " " << x << ", " << y;
        for (const auto& d : set) EXPECT_TRUE(m.is_mcd(x, y, d));
      }
    }
  }
}

TEST(Properties, ScalingInvariance) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> factor(2, 7);
  for (int trial = 0; trial < 60; ++trial) {
    auto gens = random_gens(rng);
    Rational t(factor(rng));
    std::vector<Rational> scaled;
    for (const auto& g : gens) scaled.push_back(g * t);
    FgMonoid m(gens), s(scaled);
    ASSERT_EQ(s.atoms().size(), m.atoms().size());
    for (std::size_t i = 0; i < m.atoms().size(); ++i) EXPECT_EQ(s.atoms()[i], m.atoms()[i] * t);
    for (const auto& q : m.smallest_members(12)) {
      auto a = m.factorizations(q);
      auto b = s.factorizations(q * t);
      ASSERT_EQ(a.size(), b.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < m.atoms().size(); ++j) {
          EXPECT_EQ(a.items()[i].multiplicity(m.atoms()[j]),
                    b.items()[i].multiplicity(s.atoms()[j]));
        }
      }
    }
  }
}

TEST(Properties, SumAtomsGenerateTheSum) {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    FgMonoid a(random_gens(rng)), b(random_gens(rng));
    FgMonoid s = internal_sum(a, b);
    FgMonoid by_atoms(s.atoms());
    for (const auto& g : s.generators()) {
      EXPECT_TRUE(by_atoms.contains(g));
      EXPECT_FALSE(s.factorizations(g).empty());
    }
  }
}

TEST(Properties, RefactorWitness) {
  for (const auto& inst : extension_instances(40, 99)) {
    FgMonoid m(inst.gens);
    auto s = add_cyclic(m, inst.r).sum;
    for (const auto& a : m.atoms()) {
      Factorization f = refactor_atom(m, inst.r, a);
      EXPECT_EQ(f.value(), a);
      for (const auto& [atom, mult] : f.parts()) EXPECT_TRUE(s.is_atom(atom)) << atom;
      EXPECT_EQ(f.multiplicity(inst.r), max_cyclic_divisor(s, a, inst.r));
    }
  }
}

TEST(Properties, McdViaExtensionSatisfiesPredicate) {
  for (const auto& inst : extension_instances(40, 98)) {
    FgMonoid m(inst.gens);
    auto s = add_cyclic(m, inst.r).sum;
    for (const auto& x : inst.members) {
      for (const auto& y : inst.members) {
        Rational d = mcd_via_extension(m, inst.r, x, y);
        EXPECT_TRUE(s.is_mcd(x, y, d)) << m.str() << " r=" << inst.r << " " << x << "," << y;
      }
    }
  }
}

TEST(Properties, OffsetDecompositionMatchesDirect) {
  for (const auto& inst : extension_instances(100, 97)) {
    FgMonoid m(inst.gens);
    auto s = add_cyclic(m, inst.r).sum;
    for (const auto& q : inst.members) {
      EXPECT_EQ(factorizations_via_offsets(m, inst.r, q), s.factorizations(q));
    }
  }
}

TEST(Properties, FamilyMonotoneAndSandwiched) {
  for (std::uint64_t n = 1; n < 50; ++n) {
    Rational a = family_generator({FamilyKind::kExA}, n);
    Rational b = family_generator({FamilyKind::kExB}, n);
    EXPECT_LT(a, family_generator({FamilyKind::kExA}, n + 1));
    EXPECT_GT(b, family_generator({FamilyKind::kExB}, n + 1));
    EXPECT_GT(family_generator({FamilyKind::kGrams}, n),
              family_generator({FamilyKind::kGrams}, n + 1));
  }
  for (std::uint64_t n = 1; n <= 50; ++n) {
    Rational a = family_generator({FamilyKind::kExA}, n);
    Rational b = family_generator({FamilyKind::kExB}, n);
    EXPECT_LT(Q("3/4"), a);
    EXPECT_LT(a, Rational(1));
    EXPECT_LT(Rational(1), b);
    EXPECT_LT(b, Q("5/4"));
    EXPECT_EQ(a + b, Rational(2));
  }
}

TEST(Properties, CompanionStaysInHalfOpenWindow) {
  for (std::uint64_t n = 1; n <= 4; ++n) {
    auto seq = grams_companion(n, 6);
    for (const auto& b : seq.b) {
      EXPECT_GT(b, seq.a_n / Rational(2));
      EXPECT_LT(b, seq.a_n);
    }
    for (std::size_t i = 0; i + 1 < seq.b.size(); ++i) EXPECT_GT(seq.b[i], seq.b[i + 1]);
  }
}

TEST(Properties, WitnessIdentitiesHold) {
  for (std::uint64_t n = 1; n <= 3; ++n) {
    auto w = antimatter_witness_grams(n);
    EXPECT_TRUE(w.verified);
    EXPECT_EQ(w.summands[0].value + w.summands[1].value, w.target);
    // Both summands are generators of the sum, the second a Grams generator.
    EXPECT_EQ(w.summands[1].value, family_generator({FamilyKind::kGrams}, grams_companion(n, 1).f));
    for (std::uint64_t k = 1; k <= 3; ++k) {
      auto c = antimatter_witness_companion(n, k);
      EXPECT_TRUE(c.verified);
      EXPECT_EQ(c.summands[0].value + c.summands[1].value, c.target);
      ASSERT_TRUE(c.certificate);
      EXPECT_EQ(Rational(c.certificate->multiplicity) *
                    family_generator({FamilyKind::kGrams}, c.certificate->index),
                c.summands[1].value);
    }
  }
}

// Every excluded index n with p_n <= 100: generator(n) does not divide q in
// the truncation holding all of those generators. The search is the
// congruence-pruned integerized enumeration, which knows nothing about
// valuations; small truncations are cross-checked with the oracle table.
TEST(Properties, DivisorCandidatesSound) {
  for (auto kind : {FamilyKind::kExB, FamilyKind::kSquareDen}) {
    std::uint64_t top = 1;
    while (nth_prime(top + 1, prime_lower_bound(kind)) <= 100) ++top;
    FgMonoid full = truncate({kind}, top);
    for (const char* text : {"2", "12/5", "9/8", "7/4", "3", "36/25", "13/9"}) {
      Rational q = Q(text);
      auto keep = divisor_candidates(kind, q);
      for (std::uint64_t n = 1; n <= top; ++n) {
        if (std::binary_search(keep.begin(), keep.end(), n)) continue;
        Rational g = family_generator({kind}, n);
        EXPECT_FALSE(full.divides(g, q)) << family_name(kind) << " n=" << n << " q=" << q;
        if (n <= 4) {
          std::vector<Rational> small;
          for (std::uint64_t i = 1; i <= 4; ++i) small.push_back(family_generator({kind}, i));
          EXPECT_FALSE(oracle::IntMonoid(small).divides(g, q));
        }
      }
    }
  }
}

TEST(Properties, ExAExBLengthTwoSliceIsThePairs) {
  for (std::uint64_t k = 1; k <= 10; ++k) {
    auto z2 = family_factorizations(FamilyKind::kExAExB, Rational(2), k).with_length(2);
    ASSERT_EQ(z2.size(), k);
    for (const auto& f : z2.items()) {
      ASSERT_EQ(f.parts().size(), 2u);
      std::uint64_t n = prime_index(f.parts()[0].first.den().get_ui(), 5);
      EXPECT_EQ(f.parts()[0].first, family_generator({FamilyKind::kExA}, n));
      EXPECT_EQ(f.parts()[1].first, family_generator({FamilyKind::kExB}, n));
    }
  }
}

// Two generators a < b: t is in <a, b> iff the least x >= 0 with
// x a = t (mod b) has x a <= t. Targets sit past the dense table.
TEST(Properties, LargeTargetMembershipTwoGenerators) {
  std::mt19937_64 rng(7);
  for (auto [a, b] : {std::pair<long, long>{65537, 65539}, {40009, 99991}, {2, 4194319}}) {
    FgMonoid m({Rational(a), Rational(b)});
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(a).get_mpz_t(), Integer(b).get_mpz_t());
    std::uniform_int_distribution<long> pick(1L << 22, 3L * a * b);
    for (int i = 0; i < 400; ++i) {
      Integer t = pick(rng);
      Integer x = (t % b) * inv % b;
      bool expected = x * a <= t;
      ASSERT_EQ(m.contains(Rational(t)), expected) << "<" << a << ", " << b << "> t=" << t;
    }
  }
}
