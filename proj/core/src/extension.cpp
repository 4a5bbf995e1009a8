#include "puiseux/extension.hpp"

#include <algorithm>

#include "puiseux/error.hpp"

namespace puiseux {

CyclicExtension add_cyclic(const FgMonoid& m, const Rational& r) {
  if (r.sign() <= 0) fail(ErrorCode::kInvalidArgument, "cyclic generator must be positive");
  std::vector<Rational> gens = m.generators();
  gens.push_back(r);
  return CyclicExtension{FgMonoid(std::move(gens)), r, m.contains(r)};
}

std::uint64_t max_cyclic_divisor(const FgMonoid& s, const Rational& a, const Rational& r,
                                 Budget budget) {
  if (r.sign() <= 0) fail(ErrorCode::kInvalidArgument, "r must be positive");
  if (a.sign() < 0 || !s.contains(a, budget)) {
    fail(ErrorCode::kNotAMember, a.str() + " is not an element of " + s.str());
  }
  if (!s.contains(r, budget)) {
    fail(ErrorCode::kNotAMember, r.str() + " is not an element of " + s.str());
  }
  Integer top = (a / r).floor();
  for (Integer k = top; sgn(k) > 0; --k) {
    if (s.contains(a - r * Rational(k), budget)) return k.get_ui();
  }
  return 0;
}

namespace {

void require_outside(const FgMonoid& m, const Rational& r) {
  if (r.sign() <= 0) fail(ErrorCode::kInvalidArgument, "r must be positive");
  if (m.contains(r)) {
    fail(ErrorCode::kInvalidArgument, r.str() + " already lies in " + m.str());
  }
}

}  // namespace

Factorization refactor_atom(const FgMonoid& m, const Rational& r, const Rational& a,
                            Budget budget) {
  require_outside(m, r);
  if (!m.is_atom(a)) {
    fail(ErrorCode::kInvalidArgument, a.str() + " is not an atom of " + m.str());
  }
  CyclicExtension ext = add_cyclic(m, r);
  const FgMonoid& s = ext.sum;
  std::uint64_t mult = max_cyclic_divisor(s, a, r, budget);
  Rational rest = a - r * Rational(mult);

  // Maximality of mult puts the rest in M rather than merely in S.
  if (!m.contains(rest, budget)) {
    fail(ErrorCode::kInternal, "residual " + rest.str() + " left M");
  }
  auto base = m.factorizations(rest, budget);
  if (base.empty()) fail(ErrorCode::kInternal, "no factorization of " + rest.str() + " in M");
  const Factorization& head = base.items().front();
  for (const auto& [atom, count] : head.parts()) {
    if (!s.is_atom(atom)) {
      fail(ErrorCode::kInternal, atom.str() + " does not survive as an atom of " + s.str());
    }
  }
  Factorization out = head.plus(r, mult);
  if (out.value() != a) fail(ErrorCode::kInternal, "refactorization does not sum to " + a.str());
  return out;
}

namespace {

struct ExtensionMcd {
  const FgMonoid& base;
  const FgMonoid& sum;
  const Rational& r;
  Budget budget;

  std::uint64_t multiplicity(const Rational& c) const {
    return max_cyclic_divisor(sum, c, r, budget);
  }

  std::vector<Rational> common_divisors(const Rational& x, const Rational& y) const {
    auto dx = sum.divisors(x, budget);
    auto dy = sum.divisors(y, budget);
    std::vector<Rational> out;
    std::set_intersection(dx.begin(), dx.end(), dy.begin(), dy.end(), std::back_inserter(out));
    return out;
  }

  // x carries no multiple of r.
  Rational claim(const Rational& x, const Rational& y, std::uint64_t depth_left) const {
    std::uint64_t my = multiplicity(y);
    if (my == 0) {
      // Every divisor of x and y in S already lies in M.
      return base.mcd_set(x, y, budget).back();
    }
    if (depth_left == 0) {
      fail(ErrorCode::kInternal, "mcd recursion exceeded its r-multiplicity measure");
    }
    Rational y_rest = y - r * Rational(my);
    Rational d1 = base.mcd_set(x, y_rest, budget).back();
    auto shared = common_divisors(x - d1, y - d1);
    if (shared.size() == 1) return d1;
    const Rational& d2 = shared[1];  // smallest nonzero
    Rational step = d1 + d2;
    Rational nx = x - step;
    Rational ny = y - step;
    if (multiplicity(ny) >= my || multiplicity(nx) != 0) {
      fail(ErrorCode::kInternal, "r-multiplicity failed to drop");
    }
    return step + claim(nx, ny, depth_left - 1);
  }
};

}  // namespace

Rational mcd_via_extension(const FgMonoid& m, const Rational& r, const Rational& x,
                           const Rational& y, Budget budget) {
  require_outside(m, r);
  CyclicExtension ext = add_cyclic(m, r);
  const FgMonoid& s = ext.sum;
  for (const auto* v : {&x, &y}) {
    if (v->sign() < 0 || !s.contains(*v, budget)) {
      fail(ErrorCode::kInvalidArgument, v->str() + " is not an element of " + s.str());
    }
  }
  ExtensionMcd run{m, s, r, budget};
  Rational a = x;
  Rational b = y;
  std::uint64_t ma = run.multiplicity(a);
  std::uint64_t mb = run.multiplicity(b);
  if (ma > mb) {
    std::swap(a, b);
    std::swap(ma, mb);
  }
  Rational strip = r * Rational(ma);
  Rational d = strip + run.claim(a - strip, b - strip, mb - ma + 1);
  if (!s.is_mcd(x, y, d, budget)) {
    fail(ErrorCode::kInternal, d.str() + " is not a maximal common divisor");
  }
  return d;
}

OffsetDecomposition offset_decomposition(const FgMonoid& m, const Rational& r,
                                         const Rational& s, Budget budget) {
  require_outside(m, r);
  CyclicExtension ext = add_cyclic(m, r);
  const FgMonoid& sum = ext.sum;
  if (s.sign() < 0 || !sum.contains(s, budget)) {
    fail(ErrorCode::kNotAMember, s.str() + " is not an element of " + sum.str());
  }
  OffsetDecomposition out;
  std::vector<Factorization> all;
  std::vector<Factorization> kept;
  Integer top = (s / r).floor();
  for (Integer c = 0; c <= top; ++c) {
    Rational rest = s - r * Rational(c);
    if (!m.contains(rest, budget)) continue;
    std::uint64_t offset = c.get_ui();
    out.offsets.push_back(offset);
    const auto zs = m.factorizations(rest, budget);
    for (const auto& z : zs.items()) {
      Factorization shifted = z.plus(r, offset);
      bool over_atoms = std::all_of(shifted.parts().begin(), shifted.parts().end(),
                                    [&](const auto& part) { return sum.is_atom(part.first); });
      if (over_atoms) kept.push_back(shifted);
      all.push_back(std::move(shifted));
    }
  }
  out.unfiltered = FactorizationSet(s, std::move(all));
  out.filtered = FactorizationSet(s, std::move(kept));
  return out;
}

FactorizationSet factorizations_via_offsets(const FgMonoid& m, const Rational& r,
                                            const Rational& s, Budget budget) {
  return offset_decomposition(m, r, s, budget).filtered;
}

}  // namespace puiseux
