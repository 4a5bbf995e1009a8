#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/rational.hpp"
#include "puiseux/report.hpp"
#include "puiseux/search.hpp"

namespace puiseux {

/// A finitely generated Puiseux monoid <g_1, ..., g_k>.
///
/// Every query is decided exactly on the integerized copy: multiplying by
/// `scale()` (the lcm of the generator denominators) turns the monoid into a
/// submonoid of N_0 generated by `int_gens()`. Instances are immutable; the
/// membership cache they share is internally synchronized, so concurrent
/// queries on one monoid are safe.
class FgMonoid {
 public:
  /// Deduplicates and sorts the generators and computes the atoms (generators
  /// that are not N_0-combinations of the others). Throws kInvalidArgument on an
  /// empty list or a nonpositive generator.
  explicit FgMonoid(std::vector<Rational> generators);

  const std::vector<Rational>& generators() const { return generators_; }
  const std::vector<Rational>& atoms() const { return atoms_; }
  const Integer& scale() const { return scale_; }
  const std::vector<Integer>& int_gens() const { return int_gens_; }
  const std::vector<Integer>& int_atoms() const { return int_atoms_; }

  bool is_atom(const Rational& q) const;

  /// q * scale when it is an integer.
  std::optional<Integer> integerize(const Rational& q) const;

  /// Throws kInvalidArgument for negative q.
  bool contains(const Rational& q, Budget budget = {}) const;

  /// c |_M b: c, b and b - c all lie in M.
  bool divides(const Rational& c, const Rational& b, Budget budget = {}) const;

  /// { d in M : q - d in M }, ascending. Throws kNotAMember.
  std::vector<Rational> divisors(const Rational& q, Budget budget = {}) const;

  /// Z(q): every factorization of q over the atoms. Throws kNotAMember.
  FactorizationSet factorizations(const Rational& q, Budget budget = {}) const;

  /// L(q). Throws kNotAMember.
  LengthSet lengths(const Rational& q, Budget budget = {}) const;

  /// Z_ell(q), searched with the length fixed. Throws kNotAMember.
  FactorizationSet factorizations_of_length(const Rational& q, std::uint64_t ell,
                                            Budget budget = {}) const;

  /// All maximal common divisors of {x, y}, ascending. Throws kNotAMember.
  std::vector<Rational> mcd_set(const Rational& x, const Rational& y,
                                Budget budget = {}) const;

  /// The defining predicate: d divides x and y, and 0 is the only common
  /// divisor of x - d and y - d.
  bool is_mcd(const Rational& x, const Rational& y, const Rational& d,
              Budget budget = {}) const;

  /// The `count` smallest nonzero elements, ascending.
  std::vector<Rational> smallest_members(std::size_t count) const;

  PropertyReport classify(Budget budget = {}) const;

  std::string str() const;

  friend bool operator==(const FgMonoid& lhs, const FgMonoid& rhs) {
    return lhs.generators_ == rhs.generators_;
  }

 private:
  struct ReachCache;

  bool contains_integer(const Integer& t, Budget budget) const;
  void require_member(const Rational& q, Budget budget) const;

  std::vector<Rational> generators_;
  std::vector<Rational> atoms_;
  Integer scale_;
  std::vector<Integer> int_gens_;
  std::vector<Integer> int_atoms_;
  Integer gcd_;
  std::shared_ptr<CombinationSearch> atom_search_;
  std::shared_ptr<ReachCache> cache_;
};

/// Internal sum M + N = <generators(M) ∪ generators(N)>.
FgMonoid internal_sum(const FgMonoid& m, const FgMonoid& n);

}  // namespace puiseux
