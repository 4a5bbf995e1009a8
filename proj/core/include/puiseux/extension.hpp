#pragma once

// Constructions on a cyclic extension S = M + N_0 r. Adding a finitely
// generated monoid reduces to adding one generator at a time, so these
// procedures carry the atomicity, strong-atomicity and finite-factorization
// arguments for internal sums.

#include <cstdint>
#include <vector>

#include "puiseux/factorization.hpp"
#include "puiseux/fg_monoid.hpp"

namespace puiseux {

struct CyclicExtension {
  FgMonoid sum;
  Rational generator;
  /// When false, `generator` is an atom of `sum`.
  bool generator_in_base = false;
};

/// S = M + N_0 r. Throws kInvalidArgument for r <= 0.
CyclicExtension add_cyclic(const FgMonoid& m, const Rational& r);

/// Largest m >= 0 with a - m r in S. Throws kNotAMember when a or r is not in S.
std::uint64_t max_cyclic_divisor(const FgMonoid& s, const Rational& a, const Rational& r,
                                 Budget budget = {});

/// Writes an atom a of M over the atoms of S = M + N_0 r as
/// (a_1 + ... + a_k) + m r with m = max_cyclic_divisor(S, a, r); each a_i is
/// an atom of M not divisible by r in S, hence an atom of S.
/// Throws kInvalidArgument unless a is an atom of M and r is not in M.
Factorization refactor_atom(const FgMonoid& m, const Rational& r, const Rational& a,
                            Budget budget = {});

/// A maximal common divisor of {x, y} in S = M + N_0 r, built by stripping the
/// common r-multiple and then inducting on the r-multiplicity of y: take the
/// largest d1 in mcd_set(M, x, y') where y = y' + m_y r; stop if x - d1 and
/// y - d1 share no nonzero divisor in S, else peel off the smallest shared
/// divisor d2 and recurse, which lowers the r-multiplicity of y.
/// Throws kInvalidArgument when r is in M or x, y are not in S; kInternal if the
/// recursion outlives its measure.
Rational mcd_via_extension(const FgMonoid& m, const Rational& r, const Rational& x,
                           const Rational& y, Budget budget = {});

struct OffsetDecomposition {
  /// { c in N_0 : s - c r in M }, ascending.
  std::vector<std::uint64_t> offsets;
  /// The union of Z_M(s - c r) + c r, including items whose M-atoms stop being
  /// atoms of S.
  FactorizationSet unfiltered;
  /// `unfiltered` restricted to factorizations over the atoms of S.
  FactorizationSet filtered;
};

/// Throws kInvalidArgument when r is in M, kNotAMember when s is not in S.
OffsetDecomposition offset_decomposition(const FgMonoid& m, const Rational& r,
                                         const Rational& s, Budget budget = {});

/// Z_S(s) assembled from the offset decomposition (the filtered union).
FactorizationSet factorizations_via_offsets(const FgMonoid& m, const Rational& r,
                                            const Rational& s, Budget budget = {});

}  // namespace puiseux
