#include <gtest/gtest.h>

#include "error_code.hpp"
#include "puiseux/lattice2.hpp"

using namespace puiseux;
using testing_support::code_of;

using Points = std::vector<LatticePoint>;

TEST(Lattice, Membership) {
  EXPECT_TRUE(lat_contains(LatticeKind::kUpperHalf, {-5, 2}));
  EXPECT_FALSE(lat_contains(LatticeKind::kUpperHalf, {3, 0}));
  EXPECT_TRUE(lat_contains(LatticeKind::kUpperHalf, {0, 0}));
  EXPECT_FALSE(lat_contains(LatticeKind::kLexCone, {-3, 0}));
  EXPECT_TRUE(lat_contains(LatticeKind::kLexCone, {-3, 1}));
  EXPECT_TRUE(lat_contains(LatticeKind::kQuadrant, {0, 0}));
  EXPECT_FALSE(lat_contains(LatticeKind::kQuadrant, {-1, 4}));
}

TEST(Lattice, Names) {
  EXPECT_EQ(parse_lattice_name("lexcone"), LatticeKind::kLexCone);
  EXPECT_EQ(lattice_name(LatticeKind::kUpperHalf), "upperhalf");
  EXPECT_FALSE(parse_lattice_name("cone"));
  EXPECT_EQ((LatticePoint{-2, 7}).str(), "(-2,7)");
}

TEST(Lattice, AtomsInBox) {
  Points row;
  for (std::int64_t n = -3; n <= 3; ++n) row.push_back({n, 1});
  EXPECT_EQ(lat_atoms_in_box(LatticeKind::kUpperHalf, 3), row);
  EXPECT_EQ(lat_atoms_in_box(LatticeKind::kLexCone, 10), (Points{{1, 0}}));
  EXPECT_EQ(lat_atoms_in_box(LatticeKind::kQuadrant, 2), (Points{{0, 1}, {1, 0}}));
  EXPECT_EQ(code_of([] { lat_atoms_in_box(LatticeKind::kQuadrant, 0); }),
            ErrorCode::kInvalidArgument);
}

TEST(Lattice, LexConeAtomsStableInBox) {
  for (std::int64_t b = 1; b <= 12; ++b) {
    EXPECT_EQ(lat_atoms_in_box(LatticeKind::kLexCone, b), (Points{{1, 0}})) << b;
  }
}

TEST(Lattice, SumCheck) {
  EXPECT_TRUE(lex_sum_check(1));
  EXPECT_TRUE(lex_sum_check(5));
  EXPECT_TRUE(lex_sum_check(10));
}

TEST(Lattice, AtomicElements) {
  Points axis;
  for (std::int64_t m = 0; m <= 5; ++m) axis.push_back({m, 0});
  EXPECT_EQ(lat_atomic_elements_in_box(5), axis);
  EXPECT_EQ(lat_atomic_elements_in_box(1), (Points{{0, 0}, {1, 0}}));
  auto big = lat_atomic_elements_in_box(20);
  EXPECT_FALSE(std::binary_search(big.begin(), big.end(), LatticePoint{0, 1}));
}

TEST(Lattice, QuadrantFactorizationsUnique) {
  auto atoms = lat_atoms_in_box(LatticeKind::kQuadrant, 6);
  for (std::int64_t x = 0; x <= 6; ++x) {
    for (std::int64_t y = 0; y <= 6; ++y) {
      EXPECT_EQ(lat_factorization_count({x, y}, atoms, 6), 1u) << x << "," << y;
    }
  }
}

TEST(Lattice, UpperHalfFactorizationsGrowWithBox) {
  // (0,2) = (n,1) + (-n,1) for each n with |n| <= B.
  for (std::int64_t b = 1; b <= 6; ++b) {
    auto atoms = lat_atoms_in_box(LatticeKind::kUpperHalf, b);
    EXPECT_EQ(lat_factorization_count({0, 2}, atoms, b), static_cast<std::uint64_t>(b + 1));
  }
}

TEST(Lattice, UpperHalfSmallerRowIsMcd) {
  for (std::int64_t x1 = -2; x1 <= 2; ++x1) {
    for (std::int64_t y1 = 1; y1 <= 2; ++y1) {
      for (std::int64_t x2 = -2; x2 <= 2; ++x2) {
        for (std::int64_t y2 = y1 + 1; y2 <= 3; ++y2) {
          LatticePoint u1{x1, y1};
          EXPECT_TRUE(lat_is_mcd(LatticeKind::kUpperHalf, u1, {x2, y2}, u1, 6));
        }
      }
    }
  }
  EXPECT_FALSE(lat_is_mcd(LatticeKind::kUpperHalf, {0, 2}, {1, 3}, {0, 0}, 6));
}

TEST(Lattice, Properties) {
  auto q = lattice_properties(LatticeKind::kQuadrant, 4);
  EXPECT_EQ(q.flag("unique_factorization_in_box"), true);
  auto u = lattice_properties(LatticeKind::kUpperHalf, 4);
  EXPECT_EQ(u.flag("|Z((0,2))|_stable_under_box_growth"), false);
  auto c = lattice_properties(LatticeKind::kLexCone, 4);
  EXPECT_EQ(c.flag("atomic"), false);
  EXPECT_EQ(c.flag("(0,1)_not_atomic_element"), true);
  EXPECT_EQ(c.flag("quadrant+upperhalf=lexcone"), true);
}
