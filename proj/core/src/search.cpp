#include "puiseux/search.hpp"

#include <algorithm>
#include <numeric>

#include "puiseux/error.hpp"

namespace puiseux {

struct CombinationSearch::State {
  const std::function<bool(std::span<const std::uint64_t>)>* visit;
  std::vector<std::uint64_t> sorted_counts;
  std::vector<std::uint64_t> out;
  std::uint64_t nodes = 0;
  std::uint64_t max_nodes;
};

CombinationSearch::CombinationSearch(std::vector<Integer> generators)
    : gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (sgn(g) <= 0) fail(ErrorCode::kInvalidArgument, "generators must be positive");
  }
  order_.resize(gens_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [&](std::size_t a, std::size_t b) { return gens_[a] > gens_[b]; });
  for (std::size_t i : order_) sorted_.push_back(gens_[i]);
  suffix_gcd_.assign(sorted_.size() + 1, Integer(0));
  for (std::size_t i = sorted_.size(); i-- > 0;) {
    suffix_gcd_[i] = gcd(sorted_[i], suffix_gcd_[i + 1]);
  }
}

namespace {

std::uint64_t to_count(const Integer& c) {
  if (!c.fits_ulong_p()) fail(ErrorCode::kBudgetExceeded, "multiplicity exceeds 64 bits");
  return c.get_ui();
}

}  // namespace

bool CombinationSearch::descend(State& s, std::size_t level, const Integer& remainder,
                                std::optional<std::uint64_t> length) const {
  if (++s.nodes > s.max_nodes) {
    fail(ErrorCode::kBudgetExceeded,
         "search exceeded node budget of " + std::to_string(s.max_nodes));
  }
  const std::size_t k = sorted_.size();
  if (level == k) {
    if (sgn(remainder) != 0 || (length && *length != 0)) return true;
    for (std::size_t i = 0; i < k; ++i) s.out[order_[i]] = s.sorted_counts[i];
    return (*s.visit)(s.out);
  }
  const Integer& g = sorted_[level];
  if (length) {
    // Each remaining part lies in [smallest, g].
    if (remainder > g * *length) return true;
    if (remainder < sorted_.back() * *length) return true;
  }
  if (level + 1 == k) {
    if (!mpz_divisible_p(remainder.get_mpz_t(), g.get_mpz_t())) return true;
    Integer c = remainder / g;
    std::uint64_t count = to_count(c);
    if (length && count != *length) return true;
    s.sorted_counts[level] = count;
    bool go_on = descend(s, level + 1, Integer(0), length ? std::optional<std::uint64_t>(0)
                                                         : std::nullopt);
    s.sorted_counts[level] = 0;
    return go_on;
  }

  // Solve c*g == remainder (mod rest) for c >= 0 with c*g <= remainder.
  const Integer& rest = suffix_gcd_[level + 1];
  Integer h = gcd(g, rest);
  if (!mpz_divisible_p(remainder.get_mpz_t(), h.get_mpz_t())) return true;
  Integer modulus = rest / h;
  Integer first = 0;
  if (modulus != 1) {
    Integer inv;
    Integer g_red = g / h;
    mpz_invert(inv.get_mpz_t(), g_red.get_mpz_t(), modulus.get_mpz_t());
    first = (remainder / h) * inv;
    mpz_fdiv_r(first.get_mpz_t(), first.get_mpz_t(), modulus.get_mpz_t());
  }
  Integer last = remainder / g;
  if (length && last > *length) last = *length;

  for (Integer c = first; c <= last; c += modulus) {
    std::uint64_t count = to_count(c);
    s.sorted_counts[level] = count;
    std::optional<std::uint64_t> left;
    if (length) left = *length - count;
    bool go_on = descend(s, level + 1, Integer(remainder - c * g), left);
    s.sorted_counts[level] = 0;
    if (!go_on) return false;
  }
  return true;
}

void CombinationSearch::enumerate(
    const Integer& target, std::optional<std::uint64_t> length, Budget budget,
    const std::function<bool(std::span<const std::uint64_t>)>& visit) const {
  if (sgn(target) < 0) return;
  State s{&visit, std::vector<std::uint64_t>(sorted_.size(), 0),
          std::vector<std::uint64_t>(gens_.size(), 0), 0, budget.max_nodes};
  descend(s, 0, target, length);
}

bool CombinationSearch::representable(const Integer& target, Budget budget) const {
  bool found = false;
  enumerate(target, std::nullopt, budget, [&](std::span<const std::uint64_t>) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace puiseux
