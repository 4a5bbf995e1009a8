#pragma once

// Three closed-form submonoids of Z^2: the first quadrant, the open upper half
// plane (plus the origin), and their internal sum, the nonnegative cone of the
// lexicographic order that compares y first.
//
// Box searches are exact for these kinds: whenever a point v of the box
// [-B, B]^2 splits as u + w with u, w nonzero members, some splitting has u in
// the same box (u <= v coordinatewise for the quadrant, u = (0,1) for the half
// plane, u = (1,0) for the cone), so no enlargement beyond B is needed for u.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/report.hpp"

namespace puiseux {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
  bool is_zero() const { return x == 0 && y == 0; }
  std::string str() const;  // "(x,y)"
};

enum class LatticeKind { kQuadrant, kUpperHalf, kLexCone };

std::string_view lattice_name(LatticeKind kind);
std::optional<LatticeKind> parse_lattice_name(std::string_view name);

bool lat_contains(LatticeKind kind, LatticePoint v);

/// c |_M b.
bool lat_divides(LatticeKind kind, LatticePoint c, LatticePoint b);

/// Atoms with |x|, |y| <= box, sorted.
std::vector<LatticePoint> lat_atoms_in_box(LatticeKind kind, std::int64_t box);

/// Checks quadrant + upper half = lexicographic cone on [-box, box]^2, with the
/// sum computed from explicit pairs u + w, u in the quadrant within [0, 2 box]^2.
bool lex_sum_check(std::int64_t box);

/// Points of the cone in [-box, box]^2 reachable as sums of the cone atoms
/// found in the same box.
std::vector<LatticePoint> lat_atomic_elements_in_box(std::int64_t box);

/// Number of ways to write v as a sum of the given atoms (atoms in the box
/// [-box, box]^2, partial sums staying in [-2 box, 2 box]^2).
std::uint64_t lat_factorization_count(LatticePoint v, const std::vector<LatticePoint>& atoms,
                                      std::int64_t box);

/// d divides u1 and u2, and no nonzero c with |c| <= box divides both
/// u1 - d and u2 - d.
bool lat_is_mcd(LatticeKind kind, LatticePoint u1, LatticePoint u2, LatticePoint d,
                std::int64_t box);

/// Known flags (provenance "paper") plus checks recomputed in [-box, box]^2.
/// Upper half plane: the number of factorizations of (0,2) is reported at box
/// and 2 box; it grows with the box.
PropertyReport lattice_properties(LatticeKind kind, std::int64_t box);

}  // namespace puiseux
