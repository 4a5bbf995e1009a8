#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// A formal sum of atoms, stored as (atom, multiplicity) pairs sorted by atom
/// ascending with positive multiplicities. The empty factorization represents 0.
class Factorization {
 public:
  using Part = std::pair<Rational, std::uint64_t>;

  Factorization() = default;

  /// Merges repeated atoms and drops zero multiplicities.
  explicit Factorization(std::vector<Part> parts);

  const std::vector<Part>& parts() const { return parts_; }
  std::uint64_t length() const { return length_; }
  Rational value() const;
  std::uint64_t multiplicity(const Rational& atom) const;

  /// Adds `count` copies of `atom`.
  Factorization plus(const Rational& atom, std::uint64_t count) const;

  /// "m1·a1 + m2·a2", or "0" for the empty factorization.
  std::string str() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<Part> parts_;
  std::uint64_t length_ = 0;
};

/// Canonical order: compare multiplicity vectors over the atoms in ascending
/// order; at the first atom where they differ, the larger multiplicity sorts
/// first. For <2,3> and 6 this lists 3·2 before 2·3.
bool canonical_less(const Factorization& lhs, const Factorization& rhs);

/// All factorizations of `target` that a query produced, deduplicated and in
/// canonical order. Every item's value equals the target.
class FactorizationSet {
 public:
  FactorizationSet() = default;
  FactorizationSet(Rational target, std::vector<Factorization> items);

  const Rational& target() const { return target_; }
  const std::vector<Factorization>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  std::vector<std::uint64_t> lengths() const;
  FactorizationSet with_length(std::uint64_t ell) const;

  /// `{"target":"n/d","items":[{"parts":[["atom",mult],...],"length":k},...]}`
  std::string to_json() const;

  friend bool operator==(const FactorizationSet&, const FactorizationSet&) = default;

 private:
  Rational target_;
  std::vector<Factorization> items_;
};

struct LengthSet {
  Rational target;
  std::vector<std::uint64_t> lengths;  // sorted ascending, distinct

  friend bool operator==(const LengthSet&, const LengthSet&) = default;
};

}  // namespace puiseux
