#include "puiseux/lattice2.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "puiseux/error.hpp"

namespace puiseux {

std::string LatticePoint::str() const {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::string_view lattice_name(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::kQuadrant: return "quadrant";
    case LatticeKind::kUpperHalf: return "upperhalf";
    case LatticeKind::kLexCone: return "lexcone";
  }
  return "?";
}

std::optional<LatticeKind> parse_lattice_name(std::string_view name) {
  for (auto kind : {LatticeKind::kQuadrant, LatticeKind::kUpperHalf, LatticeKind::kLexCone}) {
    if (lattice_name(kind) == name) return kind;
  }
  return std::nullopt;
}

bool lat_contains(LatticeKind kind, LatticePoint v) {
  switch (kind) {
    case LatticeKind::kQuadrant: return v.x >= 0 && v.y >= 0;
    case LatticeKind::kUpperHalf: return v.is_zero() || v.y >= 1;
    case LatticeKind::kLexCone: return v.y > 0 || (v.y == 0 && v.x >= 0);
  }
  return false;
}

bool lat_divides(LatticeKind kind, LatticePoint c, LatticePoint b) {
  return lat_contains(kind, c) && lat_contains(kind, b) && lat_contains(kind, b - c);
}

namespace {

void require_box(std::int64_t box) {
  if (box < 1) fail(ErrorCode::kInvalidArgument, "box must be >= 1");
}

bool splits_in_box(LatticeKind kind, LatticePoint v, std::int64_t box) {
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      LatticePoint u{x, y};
      if (u.is_zero() || u == v || !lat_contains(kind, u)) continue;
      if (lat_contains(kind, v - u)) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LatticePoint> lat_atoms_in_box(LatticeKind kind, std::int64_t box) {
  require_box(box);
  std::vector<LatticePoint> out;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      LatticePoint v{x, y};
      if (v.is_zero() || !lat_contains(kind, v)) continue;
      if (!splits_in_box(kind, v, box)) out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool lex_sum_check(std::int64_t box) {
  require_box(box);
  const std::int64_t wide = 2 * box;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      LatticePoint v{x, y};
      bool in_sum = false;
      for (std::int64_t ux = 0; ux <= wide && !in_sum; ++ux) {
        for (std::int64_t uy = 0; uy <= wide && !in_sum; ++uy) {
          LatticePoint u{ux, uy};
          in_sum = lat_contains(LatticeKind::kUpperHalf, v - u);
        }
      }
      if (in_sum != lat_contains(LatticeKind::kLexCone, v)) return false;
    }
  }
  return true;
}

std::vector<LatticePoint> lat_atomic_elements_in_box(std::int64_t box) {
  require_box(box);
  auto atoms = lat_atoms_in_box(LatticeKind::kLexCone, box);
  auto inside = [box](LatticePoint p) {
    return p.x >= -box && p.x <= box && p.y >= -box && p.y <= box;
  };
  std::set<LatticePoint> seen{{0, 0}};
  std::vector<LatticePoint> frontier{{0, 0}};
  while (!frontier.empty()) {
    LatticePoint p = frontier.back();
    frontier.pop_back();
    for (const auto& a : atoms) {
      LatticePoint q = p + a;
      if (inside(q) && seen.insert(q).second) frontier.push_back(q);
    }
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t lat_factorization_count(LatticePoint v, const std::vector<LatticePoint>& atoms,
                                      std::int64_t box) {
  require_box(box);
  const std::int64_t wide = 2 * box;
  std::map<std::pair<std::size_t, LatticePoint>, std::uint64_t> memo;
  // Count multisets: atom i used some number of times, then move to i + 1.
  auto count = [&](auto&& self, std::size_t i, LatticePoint rest) -> std::uint64_t {
    if (std::abs(rest.x) > wide || std::abs(rest.y) > wide) return 0;
    if (i == atoms.size()) return rest.is_zero() ? 1 : 0;
    auto key = std::make_pair(i, rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    LatticePoint r = rest;
    for (std::int64_t used = 0; used <= 2 * wide; ++used) {
      total += self(self, i + 1, r);
      r = r - atoms[i];
      if (std::abs(r.x) > wide || std::abs(r.y) > wide) break;
    }
    memo[key] = total;
    return total;
  };
  return count(count, 0, v);
}

bool lat_is_mcd(LatticeKind kind, LatticePoint u1, LatticePoint u2, LatticePoint d,
                std::int64_t box) {
  require_box(box);
  if (!lat_divides(kind, d, u1) || !lat_divides(kind, d, u2)) return false;
  LatticePoint r1 = u1 - d;
  LatticePoint r2 = u2 - d;
  for (std::int64_t x = -box; x <= box; ++x) {
    for (std::int64_t y = -box; y <= box; ++y) {
      LatticePoint c{x, y};
      if (c.is_zero()) continue;
      if (lat_divides(kind, c, r1) && lat_divides(kind, c, r2)) return false;
    }
  }
  return true;
}

PropertyReport lattice_properties(LatticeKind kind, std::int64_t box) {
  require_box(box);
  PropertyReport r;
  r.subject = std::string(lattice_name(kind));
  const std::string bound = "B=" + std::to_string(box);
  const std::string evidence = evidence_provenance(bound);
  auto atoms = lat_atoms_in_box(kind, box);
  std::string atom_text;
  for (const auto& a : atoms) atom_text += (atom_text.empty() ? "" : ", ") + a.str();
  switch (kind) {
    case LatticeKind::kQuadrant: {
      r.flags.push_back({"atomic", true, "paper"});
      r.flags.push_back({"UFM", true, "paper"});
      r.flags.push_back({"FFM", true, "paper"});
      bool unique = true;
      for (std::int64_t x = 0; x <= box; ++x) {
        for (std::int64_t y = 0; y <= box; ++y) {
          unique = unique && lat_factorization_count({x, y}, atoms, box) == 1;
        }
      }
      r.flags.push_back({"unique_factorization_in_box", unique, evidence});
      break;
    }
    case LatticeKind::kUpperHalf: {
      r.flags.push_back({"atomic", true, "paper"});
      r.flags.push_back({"strongly_atomic", true, "paper"});
      r.flags.push_back({"FFM", true, "paper"});
      std::uint64_t small = lat_factorization_count({0, 2}, atoms, box);
      std::uint64_t large =
          lat_factorization_count({0, 2}, lat_atoms_in_box(kind, 2 * box), 2 * box);
      r.flags.push_back({"|Z((0,2))|_stable_under_box_growth", small == large, evidence});
      r.evidence.push_back({"|Z((0,2))| at B", std::to_string(small), bound});
      r.evidence.push_back({"|Z((0,2))| at 2B", std::to_string(large),
                            "B=" + std::to_string(2 * box)});
      break;
    }
    case LatticeKind::kLexCone: {
      r.flags.push_back({"atomic", false, "paper"});
      r.flags.push_back({"FFM", false, "paper"});
      auto atomic = lat_atomic_elements_in_box(box);
      bool missing = !std::binary_search(atomic.begin(), atomic.end(), LatticePoint{0, 1});
      r.flags.push_back({"(0,1)_not_atomic_element", missing, evidence});
      r.flags.push_back({"quadrant+upperhalf=lexcone", lex_sum_check(box), evidence});
      break;
    }
  }
  r.evidence.push_back({"atoms in box", atom_text, bound});
  return r;
}

}  // namespace puiseux
