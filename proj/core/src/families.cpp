#include "puiseux/families.hpp"

#include <algorithm>
#include <array>

#include "puiseux/error.hpp"
#include "puiseux/primes.hpp"
#include "puiseux/search.hpp"

namespace puiseux {

namespace {

struct NamedFamily {
  std::string_view name;
  FamilyKind kind;
};

constexpr std::array<NamedFamily, 9> kNames{{
    {"grams", FamilyKind::kGrams},
    {"companion", FamilyKind::kCompanion},
    {"exA", FamilyKind::kExA},
    {"exB", FamilyKind::kExB},
    {"sqden", FamilyKind::kSquareDen},
    {"interval1", FamilyKind::kIntervalGe1},
    {"gramscompanion", FamilyKind::kGramsCompanion},
    {"exAexB", FamilyKind::kExAExB},
    {"interval1sqden", FamilyKind::kIntervalSquareDen},
}};

Integer pow2(std::uint64_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

std::uint64_t prime(FamilyKind kind, std::uint64_t n) {
  return nth_prime(n, prime_lower_bound(kind));
}

Rational grams(std::uint64_t n) {
  return Rational::reduce(1, pow2(n) * prime(FamilyKind::kGrams, n));
}

Rational ex_a(std::uint64_t n) {
  std::uint64_t p = prime(FamilyKind::kExA, n);
  return Rational::reduce(p - 1, p);
}

Rational ex_b(std::uint64_t n) {
  std::uint64_t p = prime(FamilyKind::kExB, n);
  return Rational::reduce(p + 1, p);
}

Rational square_den(std::uint64_t n) {
  std::uint64_t p = prime(FamilyKind::kSquareDen, n);
  return Rational::reduce(p + 1, Integer(p) * p);
}

void require_index(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "family indices start at 1");
}

}  // namespace

std::string_view family_name(FamilyKind kind) {
  for (const auto& entry : kNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "?";
}

std::optional<FamilyKind> parse_family_name(std::string_view name) {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.kind;
  }
  return std::nullopt;
}

bool is_sum(FamilyKind kind) {
  return kind == FamilyKind::kGramsCompanion || kind == FamilyKind::kExAExB ||
         kind == FamilyKind::kIntervalSquareDen;
}

std::uint64_t prime_lower_bound(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kGrams:
    case FamilyKind::kCompanion:
    case FamilyKind::kGramsCompanion:
      return 3;
    case FamilyKind::kExA:
    case FamilyKind::kExB:
    case FamilyKind::kExAExB:
      return 5;
    default:
      return 0;
  }
}

std::string prime_indexing(FamilyKind kind) {
  switch (prime_lower_bound(kind)) {
    case 3: return "p_n = n-th odd prime";
    case 5: return "p_n = n-th prime >= 5";
    default: return "p_n = n-th prime";
  }
}

CompanionSequence grams_companion(std::uint64_t n, std::uint64_t depth) {
  require_index(n);
  if (depth == 0) fail(ErrorCode::kInvalidArgument, "companion depth must be >= 1");
  CompanionSequence seq;
  seq.n = n;
  seq.a_n = grams(n);
  Integer bound = pow2(n) * prime(FamilyKind::kGrams, n);
  std::uint64_t f = 1;
  while (Integer(prime(FamilyKind::kGrams, f)) <= bound) ++f;
  seq.f = f;
  seq.a_f = grams(f);

  const Rational half = seq.a_n / Rational(2);
  Rational b = seq.a_n - seq.a_f;
  if (!(b > half)) fail(ErrorCode::kInternal, "b_1 <= a_n/2 for n = " + std::to_string(n));
  seq.b.push_back(b);
  while (seq.b.size() < depth) {
    Rational gap = b - half;
    std::uint64_t c = 1;
    while (!(Rational::reduce(1, pow2(c)) < gap)) ++c;
    b -= Rational::reduce(1, pow2(c));
    seq.c.push_back(c);
    seq.b.push_back(b);
  }
  return seq;
}

Rational family_generator(const FamilyMonoid& family, std::uint64_t n) {
  require_index(n);
  switch (family.kind) {
    case FamilyKind::kGrams: return grams(n);
    case FamilyKind::kExA: return ex_a(n);
    case FamilyKind::kExB: return ex_b(n);
    case FamilyKind::kSquareDen: return square_den(n);
    case FamilyKind::kCompanion: {
      std::uint64_t width = std::max<std::uint64_t>(1, family.companion_n);
      std::uint64_t which = (n - 1) % width + 1;
      std::uint64_t depth = (n - 1) / width + 1;
      return grams_companion(which, depth).b.back();
    }
    default:
      fail(ErrorCode::kInvalidArgument,
           std::string(family_name(family.kind)) + " has no generator sequence");
  }
}

FgMonoid truncate(const FamilyMonoid& family, std::uint64_t k) {
  require_index(k);
  std::vector<Rational> gens;
  auto append = [&](FamilyKind kind) {
    if (kind == FamilyKind::kCompanion) {
      for (std::uint64_t n = 1; n <= std::max<std::uint64_t>(1, family.companion_n); ++n) {
        auto seq = grams_companion(n, k);
        gens.insert(gens.end(), seq.b.begin(), seq.b.end());
      }
      return;
    }
    for (std::uint64_t i = 1; i <= k; ++i) gens.push_back(family_generator({kind, 1}, i));
  };
  switch (family.kind) {
    case FamilyKind::kExAExB:
      append(FamilyKind::kExA);
      append(FamilyKind::kExB);
      break;
    case FamilyKind::kGramsCompanion:
      append(FamilyKind::kGrams);
      append(FamilyKind::kCompanion);
      break;
    case FamilyKind::kIntervalGe1:
    case FamilyKind::kIntervalSquareDen:
      fail(ErrorCode::kInvalidArgument,
           std::string(family_name(family.kind)) + " has no generator sequence");
    default:
      append(family.kind);
  }
  return FgMonoid(std::move(gens));
}

AntimatterWitness antimatter_witness_grams(std::uint64_t n) {
  auto seq = grams_companion(n, 1);
  AntimatterWitness w;
  w.target_label = "a_" + std::to_string(n);
  w.target = seq.a_n;
  w.summands = {{"b_1(n=" + std::to_string(n) + ")", seq.b[0]},
                {"a_" + std::to_string(seq.f), seq.a_f}};
  w.verified = seq.b[0].sign() > 0 && seq.a_f.sign() > 0 &&
               seq.b[0] + seq.a_f == seq.a_n && seq.a_f == grams(seq.f);
  return w;
}

AntimatterWitness antimatter_witness_companion(std::uint64_t n, std::uint64_t k) {
  require_index(k);
  auto seq = grams_companion(n, k + 1);
  std::uint64_t c = seq.c[k - 1];
  Rational power = Rational::reduce(1, pow2(c));
  GramsCertificate cert{power, c, prime(FamilyKind::kGrams, c)};

  AntimatterWitness w;
  w.target_label = "b_" + std::to_string(k) + "(n=" + std::to_string(n) + ")";
  w.target = seq.b[k - 1];
  w.summands = {{"b_" + std::to_string(k + 1) + "(n=" + std::to_string(n) + ")", seq.b[k]},
                {"1/2^" + std::to_string(c), power}};
  w.certificate = cert;
  w.verified = seq.b[k].sign() > 0 && seq.b[k] + power == seq.b[k - 1] &&
               Rational(cert.multiplicity) * grams(cert.index) == power;
  return w;
}

std::vector<std::uint64_t> divisor_candidates(FamilyKind kind, const Rational& q) {
  if (kind != FamilyKind::kExB && kind != FamilyKind::kSquareDen) {
    fail(ErrorCode::kInvalidArgument, "divisor candidates exist for exB and sqden only");
  }
  if (q.sign() <= 0) fail(ErrorCode::kInvalidArgument, "q must be positive");
  const Integer& den = q.den();
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1;; ++n) {
    std::uint64_t p = prime(kind, n);
    Integer slack = kind == FamilyKind::kExB ? Integer(p) : Integer(p + 1);
    bool beyond = slack > q.floor() && Integer(p) > den;
    if (beyond) break;
    bool divides_den = mpz_divisible_ui_p(den.get_mpz_t(), p) != 0;
    if (divides_den || Rational(slack) <= q) out.push_back(n);
  }
  return out;
}

FactorizationSet pruned_factorizations(FamilyKind kind, const Rational& q, Budget budget) {
  if (q.sign() < 0) fail(ErrorCode::kInvalidArgument, "negative value " + q.str());
  if (q.is_zero()) return FactorizationSet(q, {Factorization()});
  std::vector<Rational> gens;
  for (std::uint64_t n : divisor_candidates(kind, q)) gens.push_back(family_generator({kind, 1}, n));
  if (gens.empty()) return FactorizationSet(q, {});

  std::vector<Rational> all = gens;
  all.push_back(q);
  Integer scale = lcm_den(all);
  std::vector<Integer> ints;
  for (const auto& g : gens) ints.push_back(g.num() * (scale / g.den()));
  Integer target = q.num() * (scale / q.den());

  std::vector<Factorization> items;
  CombinationSearch(ints).enumerate(target, std::nullopt, budget,
                                    [&](std::span<const std::uint64_t> x) {
                                      std::vector<Factorization::Part> parts;
                                      for (std::size_t i = 0; i < x.size(); ++i) {
                                        if (x[i]) parts.emplace_back(gens[i], x[i]);
                                      }
                                      items.emplace_back(std::move(parts));
                                      return true;
                                    });
  return FactorizationSet(q, std::move(items));
}

namespace {

bool sqden_contains(const Rational& q, Budget budget) {
  return !pruned_factorizations(FamilyKind::kSquareDen, q, budget).empty();
}

}  // namespace

bool family_contains(FamilyKind kind, const Rational& q, Budget budget) {
  if (q.sign() < 0) fail(ErrorCode::kInvalidArgument, "negative value " + q.str());
  switch (kind) {
    case FamilyKind::kExB:
    case FamilyKind::kSquareDen:
      return !pruned_factorizations(kind, q, budget).empty();
    case FamilyKind::kIntervalGe1:
      return q.is_zero() || q >= Rational(1);
    case FamilyKind::kIntervalSquareDen:
      // A nonzero interval1 summand already reaches 1.
      return q >= Rational(1) || sqden_contains(q, budget);
    default:
      fail(ErrorCode::kNeedsBound, "membership in " + std::string(family_name(kind)) +
                                       " needs a truncation bound (K=...)");
  }
}

bool interval_sqden_is_atom(const Rational& x, Budget budget) {
  if (x.sign() <= 0) return false;
  const Rational one(1);
  if (x > one) {
    // x = (x - g) + g with g < x - 1, so x - g > 1 stays in interval1.
    for (std::uint64_t n = 1;; ++n) {
      if (square_den(n) < x - one) return false;
    }
  }
  if (x == one) {
    // Both summands of a splitting of 1 are below 1, so they come from sqden.
    return !sqden_contains(one, budget);
  }
  if (!sqden_contains(x, budget)) return false;
  for (std::uint64_t n : divisor_candidates(FamilyKind::kSquareDen, x)) {
    Rational g = square_den(n);
    if (g < x && sqden_contains(x - g, budget)) return false;
  }
  return true;
}

IntervalSquareDenSearch interval_sqden_factorizations(const Rational& q, Budget budget) {
  if (q.sign() < 0) fail(ErrorCode::kInvalidArgument, "negative value " + q.str());
  IntervalSquareDenSearch out;
  if (q.is_zero()) {
    out.factorizations = FactorizationSet(q, {Factorization()});
    return out;
  }
  std::vector<Factorization> items;
  const Rational one(1);
  Integer top = q.floor();
  for (Integer k = 0; k <= top; ++k) {
    PruningStep step;
    step.ones = k.get_ui();
    step.residual = q - Rational(k);
    std::vector<Factorization> local;
    if (step.residual.is_zero()) {
      local.push_back(Factorization({{one, step.ones}}));
    } else {
      step.candidates = divisor_candidates(FamilyKind::kSquareDen, step.residual);
      const auto pruned = pruned_factorizations(FamilyKind::kSquareDen, step.residual, budget);
      for (const auto& z : pruned.items()) {
        local.push_back(z.plus(one, step.ones));
      }
    }
    for (auto& z : local) {
      bool atoms_only = std::all_of(z.parts().begin(), z.parts().end(), [&](const auto& part) {
        return interval_sqden_is_atom(part.first, budget);
      });
      if (atoms_only) items.push_back(std::move(z));
    }
    step.found = items.size();
    out.trace.push_back(std::move(step));
  }
  out.factorizations = FactorizationSet(q, std::move(items));
  return out;
}

FactorizationSet family_factorizations(FamilyKind sum, const Rational& q, std::uint64_t window,
                                       Budget budget) {
  if (q.sign() <= 0) fail(ErrorCode::kInvalidArgument, "q must be positive");
  switch (sum) {
    case FamilyKind::kExAExB: {
      // 3/4 < a_n < 1 < b_n < 5/4 caps every length at q / (3/4).
      FgMonoid windowed = truncate({FamilyKind::kExAExB, 1}, window);
      if (!windowed.contains(q, budget)) return FactorizationSet(q, {});
      return windowed.factorizations(q, budget);
    }
    case FamilyKind::kIntervalSquareDen:
      return interval_sqden_factorizations(q, budget).factorizations;
    default:
      fail(ErrorCode::kInvalidArgument, "family_factorizations takes exAexB or interval1sqden");
  }
}

FactorizationSet interval_length_factorizations(const Rational& q, std::uint64_t ell,
                                                std::uint64_t den_bound, Budget budget) {
  if (ell == 0) fail(ErrorCode::kInvalidArgument, "length must be >= 1");
  if (den_bound == 0) fail(ErrorCode::kInvalidArgument, "den_bound must be >= 1");
  const Rational one(1);
  const Rational two(2);
  const Rational center = q / Rational(ell);

  std::vector<Rational> atoms;
  for (std::uint64_t d = 1; d <= den_bound; ++d) {
    Rational step = Rational::reduce(1, d);
    // Offsets k/d with 1 <= center + k/d < 2.
    Integer lo = ((one - center) * Rational(d)).floor();
    for (Integer k = lo;; ++k) {
      Rational x = center + Rational(k) * step;
      if (x >= two) break;
      if (x >= one) atoms.push_back(x);
    }
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());

  // Non-decreasing choices of ell atoms summing to q.
  std::vector<Factorization> items;
  std::vector<std::size_t> pick;
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::size_t from, const Rational& remaining,
                 std::uint64_t left) -> void {
    if (++nodes > budget.max_nodes) {
      fail(ErrorCode::kBudgetExceeded, "interval search exceeded node budget");
    }
    if (left == 0) {
      if (remaining.is_zero()) {
        std::vector<Factorization::Part> parts;
        for (std::size_t i : pick) parts.emplace_back(atoms[i], 1);
        items.emplace_back(std::move(parts));
      }
      return;
    }
    for (std::size_t i = from; i < atoms.size(); ++i) {
      const Rational& a = atoms[i];
      if (a * Rational(left) > remaining) break;
      if (atoms.back() * Rational(left) < remaining) return;
      pick.push_back(i);
      self(self, i, remaining - a, left - 1);
      pick.pop_back();
    }
  };
  dfs(dfs, 0, q, ell);
  return FactorizationSet(q, std::move(items));
}

namespace {

void add_flag(PropertyReport& r, std::string name, bool value, std::string provenance) {
  r.flags.push_back({std::move(name), value, std::move(provenance)});
}

std::string count_list(const std::vector<std::size_t>& counts) {
  std::string out = "[";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(counts[i]);
  }
  return out + "]";
}

}  // namespace

PropertyReport family_properties(FamilyKind kind, std::uint64_t bound, Budget budget) {
  require_index(bound);
  PropertyReport r;
  r.subject = std::string(family_name(kind));
  r.facts.emplace_back("prime_indexing", prime_indexing(kind));
  const std::string k_bound = "K=" + std::to_string(bound);
  const std::string evidence = evidence_provenance(k_bound);

  switch (kind) {
    case FamilyKind::kGrams: {
      add_flag(r, "atomic", true, "paper");
      add_flag(r, "BBM", false, "paper");
      FgMonoid t = truncate({kind, 1}, bound);
      bool all_atoms = t.atoms().size() == bound;
      add_flag(r, "generators_atoms_in_truncation", all_atoms, evidence);
      r.evidence.push_back({"atoms of the truncation", std::to_string(t.atoms().size()) + "/" +
                                                           std::to_string(bound), k_bound});
      break;
    }
    case FamilyKind::kCompanion: {
      add_flag(r, "atomic", true, "paper");
      bool bounded = true;
      for (std::uint64_t n = 1; n <= 3; ++n) {
        auto seq = grams_companion(n, bound);
        for (const auto& b : seq.b) {
          bounded = bounded && b > seq.a_n / Rational(2) && b < seq.a_n;
        }
      }
      add_flag(r, "n_atoms_within_(a_n/2,a_n)", bounded, evidence);
      r.evidence.push_back({"a_n/2 < b_i < a_n for n <= 3", bounded ? "true" : "false", k_bound});
      break;
    }
    case FamilyKind::kGramsCompanion: {
      add_flag(r, "antimatter", true, "paper");
      add_flag(r, "atomic", false, "paper");
      bool ok = true;
      for (std::uint64_t n = 1; n <= 3; ++n) {
        ok = ok && antimatter_witness_grams(n).verified;
        for (std::uint64_t k = 1; k <= bound; ++k) {
          ok = ok && antimatter_witness_companion(n, k).verified;
        }
      }
      add_flag(r, "generators_have_proper_divisors", ok, evidence);
      r.evidence.push_back({"witness identities for n <= 3", ok ? "verified" : "failed", k_bound});
      break;
    }
    case FamilyKind::kExA:
    case FamilyKind::kExB: {
      add_flag(r, "atomic", true, "paper");
      add_flag(r, "FFM", true, "paper");
      add_flag(r, "BBM", true, "paper");
      FgMonoid t = truncate({kind, 1}, bound);
      add_flag(r, "generators_atoms_in_truncation", t.atoms().size() == bound, evidence);
      break;
    }
    case FamilyKind::kSquareDen: {
      add_flag(r, "atomic", true, "paper");
      add_flag(r, "FFM", true, "paper");
      add_flag(r, "BBM", false, "paper");
      FgMonoid t = truncate({kind, 1}, bound);
      add_flag(r, "generators_atoms_in_truncation", t.atoms().size() == bound, evidence);
      break;
    }
    case FamilyKind::kIntervalGe1: {
      add_flag(r, "atomic", true, "paper");
      add_flag(r, "BBM", true, "paper");
      add_flag(r, "BFM", true, "paper");
      add_flag(r, "FFM", false, "paper");
      add_flag(r, "LFFM", false, "paper");
      const std::string d_bound = "D=" + std::to_string(bound);
      std::size_t count = interval_length_factorizations(Rational(3), 2, bound, budget).size();
      r.evidence.push_back({"|Z_2(3)| over atoms at denominator bound", std::to_string(count),
                            d_bound});
      break;
    }
    case FamilyKind::kExAExB: {
      add_flag(r, "atomic", true, "paper");
      add_flag(r, "BFM", true, "paper");
      add_flag(r, "FFM", false, "paper");
      add_flag(r, "LFFM", false, "paper");
      std::vector<std::size_t> counts;
      for (std::uint64_t w = 1; w <= bound; ++w) {
        counts.push_back(family_factorizations(kind, Rational(2), w, budget).with_length(2).size());
      }
      bool growing = std::is_sorted(counts.begin(), counts.end()) &&
                     std::adjacent_find(counts.begin(), counts.end()) == counts.end();
      add_flag(r, "|Z_2(2)|_strictly_increasing", growing, evidence);
      r.evidence.push_back({"|Z_2(2)| for windows 1..K", count_list(counts), k_bound});
      break;
    }
    case FamilyKind::kIntervalSquareDen: {
      add_flag(r, "atomic", false, "paper");
      add_flag(r, "BFM", false, "paper");
      const Rational q = Rational::reduce(9, 8);
      bool member = family_contains(kind, q, budget);
      bool empty = interval_sqden_factorizations(q, budget).factorizations.empty();
      add_flag(r, "9/8_member", member, "exact");
      add_flag(r, "9/8_unfactorable", empty, "exact");
      r.evidence.push_back({"|Z(9/8)|", empty ? "0" : "nonzero", ""});
      break;
    }
  }
  return r;
}

}  // namespace puiseux
