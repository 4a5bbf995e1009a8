#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Upper bound on search-tree nodes for one enumeration. Exceeding it raises
/// kBudgetExceeded; results are never silently truncated.
struct Budget {
  std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return Budget{n}; }
};

/// Enumerates the nonnegative integer solutions of sum_i x_i * g_i = target
/// over a fixed list of positive integers g_i.
///
/// Depth-first, largest generator first. Each level only tries multiplicities
/// that keep the remainder nonnegative and divisible by the gcd of the
/// generators still to be assigned; those are solved as a linear congruence,
/// so levels whose generator carries a prime absent from the rest collapse to
/// one arithmetic progression.
class CombinationSearch {
 public:
  explicit CombinationSearch(std::vector<Integer> generators);

  std::size_t size() const { return gens_.size(); }
  const Integer& generator(std::size_t i) const { return gens_[i]; }

  /// Calls `visit` with the multiplicity vector (indexed like the constructor
  /// input) of every solution. Returning false from `visit` stops the search.
  /// When `length` is set only solutions with sum_i x_i == length are visited.
  void enumerate(const Integer& target, std::optional<std::uint64_t> length,
                 Budget budget,
                 const std::function<bool(std::span<const std::uint64_t>)>& visit) const;

  bool representable(const Integer& target, Budget budget = {}) const;

 private:
  struct State;
  bool descend(State& state, std::size_t level, const Integer& remainder,
               std::optional<std::uint64_t> length) const;

  std::vector<Integer> gens_;            // caller order
  std::vector<std::size_t> order_;       // indices by decreasing generator
  std::vector<Integer> sorted_;          // gens_ in `order_`
  std::vector<Integer> suffix_gcd_;      // gcd(sorted_[i..]), 0 past the end
};

}  // namespace puiseux
