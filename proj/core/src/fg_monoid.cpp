#include "puiseux/fg_monoid.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <queue>
#include <set>

#include "puiseux/error.hpp"

namespace puiseux {

namespace {

// Integer targets up to this many gcd-steps use the shared dense table.
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
// Larger targets use the Apery set of the smallest step when that step is at
// most kAperyModulus and every step is at most kAperyStep (distances then stay
// below 2^60).
constexpr std::uint64_t kAperyModulus = std::uint64_t{1} << 20;
constexpr std::uint64_t kAperyStep = std::uint64_t{1} << 40;

Integer scaled(const Rational& q, const Integer& scale) {
  return q.num() * (scale / q.den());
}

}  // namespace

// Dense reachability over the atoms divided by their gcd. Snapshots are
// immutable; growth publishes a new vector under the lock.
struct FgMonoid::ReachCache {
  std::mutex mu;
  std::shared_ptr<const std::vector<char>> table;
  std::vector<std::uint64_t> steps;

  // Apery set: apery[r] is the least reachable step count congruent to r
  // modulo the smallest step. Empty when the steps are out of range.
  std::vector<std::uint64_t> all_steps;
  std::once_flag apery_once;
  std::vector<std::uint64_t> apery;

  const std::vector<std::uint64_t>& apery_set() {
    std::call_once(apery_once, [this] {
      if (all_steps.empty()) return;
      std::uint64_t mod = *std::min_element(all_steps.begin(), all_steps.end());
      if (mod > kAperyModulus) return;
      for (auto s : all_steps) {
        if (s > kAperyStep) return;
      }
      constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();
      std::vector<std::uint64_t> dist(mod, kInf);
      using Item = std::pair<std::uint64_t, std::uint64_t>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      dist[0] = 0;
      queue.emplace(0, 0);
      while (!queue.empty()) {
        auto [d, r] = queue.top();
        queue.pop();
        if (d != dist[r]) continue;
        for (auto s : all_steps) {
          std::uint64_t next = (r + s) % mod;
          if (d + s < dist[next]) {
            dist[next] = d + s;
            queue.emplace(d + s, next);
          }
        }
      }
      apery = std::move(dist);
    });
    return apery;
  }

  std::shared_ptr<const std::vector<char>> upto(std::uint64_t n) {
    std::lock_guard<std::mutex> lock(mu);
    if (table && table->size() > n) return table;
    std::uint64_t size = std::max<std::uint64_t>(64, table ? table->size() : 0);
    while (size <= n) size *= 2;
    auto next = std::make_shared<std::vector<char>>(size, 0);
    std::uint64_t start = 0;
    if (table) {
      std::copy(table->begin(), table->end(), next->begin());
      start = table->size();
    } else {
      (*next)[0] = 1;
      start = 1;
    }
    for (std::uint64_t t = start; t < size; ++t) {
      for (std::uint64_t s : steps) {
        if (s <= t && (*next)[t - s]) {
          (*next)[t] = 1;
          break;
        }
      }
    }
    table = std::move(next);
    return table;
  }
};

FgMonoid::FgMonoid(std::vector<Rational> generators) {
  if (generators.empty()) fail(ErrorCode::kInvalidArgument, "a monoid needs generators");
  for (const auto& g : generators) {
    if (g.sign() <= 0) {
      fail(ErrorCode::kInvalidArgument, "generator " + g.str() + " is not positive");
    }
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  generators_ = std::move(generators);
  scale_ = lcm_den(generators_);
  for (const auto& g : generators_) int_gens_.push_back(scaled(g, scale_));

  for (std::size_t i = 0; i < generators_.size(); ++i) {
    std::vector<Integer> others;
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (j != i) others.push_back(int_gens_[j]);
    }
    if (!CombinationSearch(std::move(others)).representable(int_gens_[i])) {
      atoms_.push_back(generators_[i]);
      int_atoms_.push_back(int_gens_[i]);
    }
  }
  gcd_ = 0;
  for (const auto& a : int_atoms_) gcd_ = gcd(gcd_, a);
  atom_search_ = std::make_shared<CombinationSearch>(int_atoms_);
  cache_ = std::make_shared<ReachCache>();
  for (const auto& a : int_atoms_) {
    Integer step = a / gcd_;
    if (step.fits_ulong_p() && step.get_ui() <= kDenseLimit) {
      cache_->steps.push_back(step.get_ui());
    }
    if (step.fits_ulong_p() && step.get_ui() <= kAperyStep) {
      cache_->all_steps.push_back(step.get_ui());
    } else {
      cache_->all_steps.push_back(kAperyStep + 1);
    }
  }
}

bool FgMonoid::is_atom(const Rational& q) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), q);
}

std::optional<Integer> FgMonoid::integerize(const Rational& q) const {
  if (!mpz_divisible_p(scale_.get_mpz_t(), q.den().get_mpz_t())) return std::nullopt;
  return scaled(q, scale_);
}

bool FgMonoid::contains_integer(const Integer& t, Budget budget) const {
  if (sgn(t) < 0) return false;
  if (!mpz_divisible_p(t.get_mpz_t(), gcd_.get_mpz_t())) return false;
  Integer u = t / gcd_;
  if (u.fits_ulong_p() && u.get_ui() <= kDenseLimit) {
    std::uint64_t idx = u.get_ui();
    return (*cache_->upto(idx))[idx] != 0;
  }
  const auto& apery = cache_->apery_set();
  if (!apery.empty()) {
    Integer r = u % Integer(static_cast<unsigned long>(apery.size()));
    return u >= Integer(static_cast<unsigned long>(apery[r.get_ui()]));
  }
  return atom_search_->representable(t, budget);
}

bool FgMonoid::contains(const Rational& q, Budget budget) const {
  if (q.sign() < 0) {
    fail(ErrorCode::kInvalidArgument, "membership of negative value " + q.str());
  }
  auto t = integerize(q);
  return t && contains_integer(*t, budget);
}

void FgMonoid::require_member(const Rational& q, Budget budget) const {
  if (q.sign() < 0 || !contains(q, budget)) {
    fail(ErrorCode::kNotAMember, q.str() + " is not an element of " + str());
  }
}

bool FgMonoid::divides(const Rational& c, const Rational& b, Budget budget) const {
  if (c.sign() < 0 || b.sign() < 0 || c > b) return false;
  return contains(c, budget) && contains(b, budget) && contains(b - c, budget);
}

std::vector<Rational> FgMonoid::divisors(const Rational& q, Budget budget) const {
  require_member(q, budget);
  Integer t = *integerize(q);
  Integer steps = t / gcd_;
  std::vector<Rational> out;
  if (steps.fits_ulong_p() && steps.get_ui() <= kDenseLimit) {
    std::uint64_t n = steps.get_ui();
    auto table = cache_->upto(n);
    for (std::uint64_t u = 0; u <= n; ++u) {
      if ((*table)[u] && (*table)[n - u]) {
        out.push_back(Rational::reduce(Integer(gcd_ * u), scale_));
      }
    }
    return out;
  }
  // Large targets: divisors are exactly the sub-sums of factorizations.
  std::set<Rational> found;
  std::uint64_t nodes = 0;
  const auto all = factorizations(q, budget);
  for (const auto& z : all.items()) {
    const auto& parts = z.parts();
    std::vector<std::uint64_t> pick(parts.size(), 0);
    while (true) {
      if (++nodes > budget.max_nodes) {
        fail(ErrorCode::kBudgetExceeded, "divisor enumeration exceeded node budget");
      }
      Rational v;
      for (std::size_t i = 0; i < parts.size(); ++i) v += parts[i].first * Rational(pick[i]);
      found.insert(v);
      std::size_t i = 0;
      while (i < parts.size() && pick[i] == parts[i].second) pick[i++] = 0;
      if (i == parts.size()) break;
      ++pick[i];
    }
  }
  return {found.begin(), found.end()};
}

FactorizationSet FgMonoid::factorizations(const Rational& q, Budget budget) const {
  require_member(q, budget);
  std::vector<Factorization> items;
  atom_search_->enumerate(*integerize(q), std::nullopt, budget,
                          [&](std::span<const std::uint64_t> x) {
                            std::vector<Factorization::Part> parts;
                            for (std::size_t i = 0; i < x.size(); ++i) {
                              if (x[i] != 0) parts.emplace_back(atoms_[i], x[i]);
                            }
                            items.emplace_back(std::move(parts));
                            return true;
                          });
  return FactorizationSet(q, std::move(items));
}

LengthSet FgMonoid::lengths(const Rational& q, Budget budget) const {
  return LengthSet{q, factorizations(q, budget).lengths()};
}

FactorizationSet FgMonoid::factorizations_of_length(const Rational& q, std::uint64_t ell,
                                                    Budget budget) const {
  require_member(q, budget);
  std::vector<Factorization> items;
  atom_search_->enumerate(*integerize(q), ell, budget,
                          [&](std::span<const std::uint64_t> x) {
                            std::vector<Factorization::Part> parts;
                            for (std::size_t i = 0; i < x.size(); ++i) {
                              if (x[i] != 0) parts.emplace_back(atoms_[i], x[i]);
                            }
                            items.emplace_back(std::move(parts));
                            return true;
                          });
  return FactorizationSet(q, std::move(items));
}

namespace {

std::vector<Rational> intersect(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Rational> FgMonoid::mcd_set(const Rational& x, const Rational& y,
                                        Budget budget) const {
  require_member(x, budget);
  require_member(y, budget);
  auto common = intersect(divisors(x, budget), divisors(y, budget));
  std::vector<Rational> out;
  for (const auto& d : common) {
    bool maximal = true;
    for (const auto& e : common) {
      if (e > d && contains(e - d, budget)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(d);
  }
  return out;
}

bool FgMonoid::is_mcd(const Rational& x, const Rational& y, const Rational& d,
                      Budget budget) const {
  require_member(x, budget);
  require_member(y, budget);
  if (!divides(d, x, budget) || !divides(d, y, budget)) return false;
  auto common = intersect(divisors(x - d, budget), divisors(y - d, budget));
  return common.size() == 1;  // only 0
}

std::vector<Rational> FgMonoid::smallest_members(std::size_t count) const {
  std::vector<Rational> out;
  for (Integer t = gcd_; out.size() < count; t += gcd_) {
    if (contains_integer(t, {})) out.push_back(Rational::reduce(t, scale_));
  }
  return out;
}

PropertyReport FgMonoid::classify(Budget budget) const {
  constexpr std::size_t kSamples = 10;
  PropertyReport report;
  report.subject = str();
  report.facts.emplace_back("min_positive", atoms_.front().str());
  report.facts.emplace_back("atoms", std::to_string(atoms_.size()));
  report.facts.emplace_back("scale", scale_.get_str());

  auto samples = smallest_members(kSamples);
  bool unique = true;
  std::string counts;
  for (const auto& q : samples) {
    std::size_t n = factorizations(q, budget).size();
    unique = unique && n == 1;
    if (!counts.empty()) counts += ", ";
    counts += "|Z(" + q.str() + ")|=" + std::to_string(n);
  }
  const std::string bound = "K=" + std::to_string(kSamples);

  // Finitely generated: the least atom bounds M• away from 0.
  report.flags.push_back({"BBM", true, "exact"});
  report.flags.push_back({"atomic", true, "paper"});
  report.flags.push_back({"FFM", true, "paper"});
  report.flags.push_back({"BFM", true, "paper"});
  report.flags.push_back({"LFFM", true, "paper"});
  report.flags.push_back({"unique_factorization_on_samples", unique, evidence_provenance(bound)});
  report.evidence.push_back(
      {"factorization counts of the smallest nonzero members", counts, bound});
  return report;
}

std::string FgMonoid::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += generators_[i].str();
  }
  return out + ">";
}

FgMonoid internal_sum(const FgMonoid& m, const FgMonoid& n) {
  std::vector<Rational> gens = m.generators();
  gens.insert(gens.end(), n.generators().begin(), n.generators().end());
  return FgMonoid(std::move(gens));
}

}  // namespace puiseux
