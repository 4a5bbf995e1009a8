#pragma once

// Infinitely generated Puiseux monoids used as counterexamples, with exact
// procedures where a valuation bound makes the search finite and truncations
// (windows) where it does not.
//
// Prime indexing differs per family and is reported with every result:
//   grams, companion  p_n = n-th odd prime        (3, 5, 7, ...)
//   exA, exB          p_n = n-th prime >= 5       (5, 7, 11, ...)
//   sqden             p_n = n-th prime            (2, 3, 5, ...)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/fg_monoid.hpp"
#include "puiseux/report.hpp"

namespace puiseux {

enum class FamilyKind {
  kGrams,              // 1/(2^n p_n)
  kCompanion,          // n-atoms b_1 > b_2 > ... hanging below each Grams generator
  kExA,                // (p_n - 1)/p_n
  kExB,                // (p_n + 1)/p_n
  kSquareDen,          // (p_n + 1)/p_n^2
  kIntervalGe1,        // {0} ∪ Q>=1
  kGramsCompanion,     // grams + companion
  kExAExB,             // exA + exB
  kIntervalSquareDen,  // interval1 + sqden
};

std::string_view family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family_name(std::string_view name);
bool is_sum(FamilyKind kind);

/// Lower bound passed to nth_prime for the family's p_n.
std::uint64_t prime_lower_bound(FamilyKind kind);
std::string prime_indexing(FamilyKind kind);

struct FamilyMonoid {
  FamilyKind kind = FamilyKind::kGrams;
  // Companion only: n-atoms are produced for n = 1..companion_n.
  std::uint64_t companion_n = 1;
};

/// The n-th generator (1-based). For companion the generators are the n-atoms
/// of n = 1..companion_n interleaved as b_1(1), b_1(2), ..., b_2(1), ...
/// Throws kInvalidArgument for interval1 and the sums.
Rational family_generator(const FamilyMonoid& family, std::uint64_t n);

/// <first K generators>; companion takes the first K n-atoms of every n.
/// exA+exB and grams+companion truncate both summands at K.
FgMonoid truncate(const FamilyMonoid& family, std::uint64_t k);

struct CompanionSequence {
  std::uint64_t n = 0;
  std::uint64_t f = 0;              // least index with p_f > 2^n p_n
  Rational a_n;
  Rational a_f;
  std::vector<Rational> b;          // b_1, ..., b_depth
  std::vector<std::uint64_t> c;     // c_1, ..., c_{depth-1}
};

/// b_1 = a_n - a_f(n), b_{i+1} = b_i - 1/2^{c_i} with c_i the least exponent
/// keeping b_{i+1} > a_n/2. Throws kInvalidArgument for n or depth of 0.
CompanionSequence grams_companion(std::uint64_t n, std::uint64_t depth);

struct WitnessTerm {
  std::string label;
  Rational value;
};

/// 1/2^c = multiplicity * a_index, a Grams generator.
struct GramsCertificate {
  Rational value;
  std::uint64_t index = 0;
  std::uint64_t multiplicity = 0;
};

struct AntimatterWitness {
  std::string target_label;
  Rational target;
  std::vector<WitnessTerm> summands;
  std::optional<GramsCertificate> certificate;
  bool verified = false;  // recomputed exactly
};

/// a_n = b_1 + a_f(n): the Grams generator a_n is divisible by an n-atom.
AntimatterWitness antimatter_witness_grams(std::uint64_t n);

/// b_k = b_{k+1} + 1/2^{c_k} with 1/2^{c_k} = p_{c_k} * a_{c_k} in Grams.
AntimatterWitness antimatter_witness_companion(std::uint64_t n, std::uint64_t k);

/// Generator indices that may divide q: exB keeps n with p_n | d(q) or
/// p_n <= q; sqden keeps n with p_n | d(q) or p_n + 1 <= q. Any other
/// generator would need a multiple of p_n (resp. p_n^2) copies to clear its
/// denominator, overshooting q. Throws kInvalidArgument for other kinds or q <= 0.
std::vector<std::uint64_t> divisor_candidates(FamilyKind kind, const Rational& q);

/// Exact Z(q) for exB and sqden over the divisor candidates. Empty when q is
/// not a member.
FactorizationSet pruned_factorizations(FamilyKind kind, const Rational& q, Budget budget = {});

/// Exact membership for exB, sqden, interval1 and interval1+sqden.
/// Throws kNeedsBound for families without an exact procedure.
bool family_contains(FamilyKind kind, const Rational& q, Budget budget = {});

/// Exact atomhood of x in interval1 + sqden.
bool interval_sqden_is_atom(const Rational& x, Budget budget = {});

struct PruningStep {
  std::uint64_t ones = 0;                  // copies of the atom 1
  Rational residual;                       // q - ones, searched in sqden
  std::vector<std::uint64_t> candidates;   // divisor_candidates(sqden, residual)
  std::size_t found = 0;
};

struct IntervalSquareDenSearch {
  FactorizationSet factorizations;
  std::vector<PruningStep> trace;
};

/// Z(q) in interval1 + sqden over the atom superset {1} ∪ sqden, window-free.
IntervalSquareDenSearch interval_sqden_factorizations(const Rational& q, Budget budget = {});

/// Z(q) in exA+exB over {a_n, b_n : n <= window}, or in interval1+sqden
/// (exact; window ignored). Throws kInvalidArgument for other kinds.
FactorizationSet family_factorizations(FamilyKind sum, const Rational& q, std::uint64_t window,
                                       Budget budget = {});

/// Length-ell factorizations of q in {0} ∪ Q>=1 whose atoms x in [1, 2) sit
/// at a distance x - q/ell with denominator <= den_bound. The full set is
/// infinite; the sample grows with den_bound. For q = 3, ell = 2 it is the
/// pairs 3/2 ± k/d.
FactorizationSet interval_length_factorizations(const Rational& q, std::uint64_t ell,
                                                std::uint64_t den_bound, Budget budget = {});

/// Known flags (provenance "paper") plus evidence recomputed at `bound`
/// (window / truncation size, or denominator bound for interval1).
PropertyReport family_properties(FamilyKind kind, std::uint64_t bound, Budget budget = {});

}  // namespace puiseux
