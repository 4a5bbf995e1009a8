#include "puiseux_tools/paper.hpp"

#include <algorithm>
#include <sstream>

#include "puiseux/error.hpp"
#include "puiseux/families.hpp"
#include "puiseux/lattice2.hpp"

namespace puiseux::tools {
namespace {

using Json = nlohmann::ordered_json;

Verdict exact_if(bool ok) { return ok ? Verdict::kVerifiedExact : Verdict::kFailed; }
Verdict evidence_if(bool ok) { return ok ? Verdict::kEvidenceAtBound : Verdict::kFailed; }

std::string k_bound(std::uint64_t k) { return "K=" + std::to_string(k); }
std::string b_bound(std::int64_t b) { return "B=" + std::to_string(b); }
std::string d_bound(std::uint64_t d) { return "D=" + std::to_string(d); }

Json points(const std::vector<LatticePoint>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

Json rationals(const std::vector<Rational>& qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(q.str());
  return out;
}

Json witness_json(const AntimatterWitness& w) {
  Json summands = Json::array();
  for (const auto& s : w.summands) summands.push_back({{"label", s.label}, {"value", s.value.str()}});
  Json out{{"target", w.target_label}, {"value", w.target.str()}, {"summands", summands}};
  if (w.certificate) {
    out["certificate"] = {{"value", w.certificate->value.str()},
                          {"multiplicity", w.certificate->multiplicity},
                          {"grams_index", w.certificate->index}};
  }
  out["verified"] = w.verified;
  return out;
}

// ---- 3.2: quadrant + upper half plane = lexicographic cone ----

PaperReport lattice_sum(const PaperOptions& o) {
  PaperReport r;
  const std::int64_t b = o.box;
  const std::string bound = b_bound(b);

  auto quadrant = lat_atoms_in_box(LatticeKind::kQuadrant, b);
  std::vector<LatticePoint> e12{{0, 1}, {1, 0}};
  r.claims.push_back({"the quadrant has atoms e1 and e2", "quadrant-atoms",
                      evidence_if(quadrant == e12), bound});

  auto upper = lat_atoms_in_box(LatticeKind::kUpperHalf, b);
  std::vector<LatticePoint> row;
  for (std::int64_t x = -b; x <= b; ++x) row.push_back({x, 1});
  r.claims.push_back({"the upper half plane has atoms (n,1), n in Z", "upperhalf-atoms",
                      evidence_if(upper == row), bound});

  bool strongly = true;
  for (std::int64_t x1 = -2; x1 <= 2; ++x1) {
    for (std::int64_t y1 = 1; y1 <= 3; ++y1) {
      for (std::int64_t x2 = -2; x2 <= 2; ++x2) {
        for (std::int64_t y2 = y1 + 1; y2 <= 4; ++y2) {
          LatticePoint u1{x1, y1};
          strongly = strongly && lat_is_mcd(LatticeKind::kUpperHalf, u1, {x2, y2}, u1, b);
        }
      }
    }
  }
  r.claims.push_back({"in the upper half plane u1 is a maximal common divisor of u1, u2 when y1 < y2",
                      "upperhalf-strongly-atomic", evidence_if(strongly), bound});

  r.claims.push_back({"quadrant + upper half plane is the lexicographic cone", "lex-sum",
                      evidence_if(lex_sum_check(b)), bound});

  auto cone = lat_atoms_in_box(LatticeKind::kLexCone, b);
  r.claims.push_back({"the lexicographic cone has the single atom e1", "lexcone-atoms",
                      evidence_if(cone == std::vector<LatticePoint>{{1, 0}}), bound});

  auto atomic = lat_atomic_elements_in_box(b);
  std::vector<LatticePoint> axis;
  for (std::int64_t m = 0; m <= b; ++m) axis.push_back({m, 0});
  bool missing = !std::binary_search(atomic.begin(), atomic.end(), LatticePoint{0, 1});
  r.claims.push_back({"the atomic elements of the cone are (m,0), m >= 0, so it is not atomic",
                      "lexcone-not-atomic", evidence_if(atomic == axis && missing), bound});

  r.artifacts["box"] = b;
  r.artifacts["atoms"] = {{"quadrant", points(quadrant)},
                          {"upperhalf", points(upper)},
                          {"lexcone", points(cone)}};
  r.artifacts["lexcone_atomic_elements"] = points(atomic);
  return r;
}

// ---- 3.3: Grams monoid + companion atoms is antimatter ----

PaperReport antimatter(const PaperOptions& o) {
  PaperReport r;
  const std::uint64_t kmax = std::min<std::uint64_t>(o.window, 6);
  const std::uint64_t n_max = 3;
  const std::uint64_t depth = 3;
  const std::string scope = "n<=3, depth<=3";

  bool grams_atomic = true;
  Json grams_atoms = Json::array();
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    FgMonoid t = truncate({FamilyKind::kGrams, 1}, k);
    grams_atomic = grams_atomic && t.atoms().size() == k;
    grams_atoms.push_back(t.atoms().size());
  }
  r.claims.push_back({"every Grams generator a_n = 1/(2^n p_n) is an atom", "grams-atomic",
                      evidence_if(grams_atomic), k_bound(kmax)});

  bool bounded = true;
  Json sequences = Json::array();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    auto seq = grams_companion(n, depth);
    for (const auto& b : seq.b) bounded = bounded && b > seq.a_n / Rational(2) && b < seq.a_n;
    sequences.push_back({{"n", n},
                         {"f", seq.f},
                         {"a_n", seq.a_n.str()},
                         {"a_f", seq.a_f.str()},
                         {"b", rationals(seq.b)},
                         {"c", seq.c}});
  }
  r.claims.push_back({"n-atoms stay strictly between a_n/2 and a_n", "companion-bounds",
                      evidence_if(bounded), scope});

  FgMonoid companion = truncate({FamilyKind::kCompanion, n_max}, depth);
  bool companion_atomic = companion.atoms().size() == n_max * depth;
  r.claims.push_back({"every n-atom is an atom of the companion monoid", "companion-atomic",
                      evidence_if(companion_atomic), scope});

  bool grams_witnesses = true;
  Json witnesses = Json::array();
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    auto w = antimatter_witness_grams(n);
    grams_witnesses = grams_witnesses && w.verified;
    witnesses.push_back(witness_json(w));
  }
  r.claims.push_back({"a_n = b_1 + a_f(n): each Grams generator is divisible by an n-atom",
                      "grams-divisible", exact_if(grams_witnesses), ""});

  bool companion_witnesses = true;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    for (std::uint64_t k = 1; k < depth; ++k) {
      auto w = antimatter_witness_companion(n, k);
      companion_witnesses = companion_witnesses && w.verified;
      witnesses.push_back(witness_json(w));
    }
  }
  r.claims.push_back({"b_k = b_{k+1} + 1/2^{c_k} with 1/2^{c_k} = p_{c_k} a_{c_k}",
                      "companion-divisible", exact_if(companion_witnesses), ""});

  r.claims.push_back({"the sum of the two atomic monoids is antimatter", "antimatter",
                      evidence_if(grams_witnesses && companion_witnesses), scope});

  r.artifacts["grams_atom_counts"] = grams_atoms;
  r.artifacts["companion_sequences"] = sequences;
  r.artifacts["witnesses"] = witnesses;
  return r;
}

// ---- 4.2: exA + exB is not an FFM ----

PaperReport not_ffm(const PaperOptions& o) {
  PaperReport r;
  const std::uint64_t k = o.window;
  const std::string bound = k_bound(k);
  const Rational two(2);

  bool sandwich = true;
  for (std::uint64_t n = 1; n <= k; ++n) {
    Rational a = family_generator({FamilyKind::kExA, 1}, n);
    Rational b = family_generator({FamilyKind::kExB, 1}, n);
    sandwich = sandwich && Rational::reduce(3, 4) < a && a < Rational(1) && Rational(1) < b &&
               b < Rational::reduce(5, 4);
  }
  r.claims.push_back({"3/4 < a_n < 1 < b_n < 5/4", "sandwich", evidence_if(sandwich), bound});

  bool atoms = truncate({FamilyKind::kExA, 1}, k).atoms().size() == k &&
               truncate({FamilyKind::kExB, 1}, k).atoms().size() == k;
  r.claims.push_back({"every a_n and every b_n is an atom of its monoid", "generators-atoms",
                      evidence_if(atoms), bound});

  std::vector<std::size_t> counts;
  FactorizationSet last;
  for (std::uint64_t w = 1; w <= k; ++w) {
    last = family_factorizations(FamilyKind::kExAExB, two, w, o.budget).with_length(2);
    counts.push_back(last.size());
  }
  bool growth = true;
  for (std::size_t i = 0; i < counts.size(); ++i) growth = growth && counts[i] == i + 1;
  r.claims.push_back({"2 has infinitely many length-2 factorizations", "z2-of-2-unbounded",
                      evidence_if(growth), bound});

  bool pairs = true;
  for (const auto& f : last.items()) {
    const auto& parts = f.parts();
    bool paired = false;
    for (std::uint64_t n = 1; n <= k && !paired; ++n) {
      Factorization expect({{family_generator({FamilyKind::kExA, 1}, n), 1},
                            {family_generator({FamilyKind::kExB, 1}, n), 1}});
      paired = parts == expect.parts();
    }
    pairs = pairs && paired;
  }
  r.claims.push_back({"every length-2 factorization of 2 is a_n + b_n", "z2-pairs",
                      evidence_if(pairs && !last.empty()), bound});

  r.artifacts["window"] = k;
  r.artifacts["z2_counts"] = counts;
  r.artifacts["z2"] = Json::parse(last.to_json());
  return r;
}

// ---- 4.3: interval1 + sqden is not atomic ----

PaperReport not_atomic(const PaperOptions& o) {
  PaperReport r;
  const Rational q = Rational::reduce(9, 8);
  bool member = family_contains(FamilyKind::kIntervalSquareDen, q, o.budget);
  r.claims.push_back({"9/8 lies in the sum", "9/8-member", exact_if(member), ""});

  auto search = interval_sqden_factorizations(q, o.budget);
  r.claims.push_back({"9/8 is not a sum of atoms", "9/8-not-atomic",
                      exact_if(search.factorizations.empty()), ""});

  bool one = interval_sqden_is_atom(Rational(1), o.budget);
  bool sq = true;
  for (std::uint64_t n = 1; n <= o.window; ++n) {
    sq = sq && interval_sqden_is_atom(family_generator({FamilyKind::kSquareDen, 1}, n), o.budget);
  }
  r.claims.push_back({"1 is an atom of the sum", "one-atom", exact_if(one), ""});
  r.claims.push_back({"every (p_n + 1)/p_n^2 remains an atom of the sum", "sqden-atoms",
                      evidence_if(sq), k_bound(o.window)});

  Json trace = Json::array();
  for (const auto& step : search.trace) {
    trace.push_back({{"ones", step.ones},
                     {"residual", step.residual.str()},
                     {"candidates", step.candidates},
                     {"found", step.found}});
  }
  r.artifacts["z"] = Json::parse(search.factorizations.to_json());
  r.artifacts["pruning_trace"] = trace;
  return r;
}

// ---- 4.4: the rank-2 monoids are FFMs ----

PaperReport lattice_ffm(const PaperOptions& o) {
  PaperReport r;
  const std::int64_t b = o.box;
  auto qa = lat_atoms_in_box(LatticeKind::kQuadrant, b);
  bool unique = true;
  for (std::int64_t x = 0; x <= b; ++x) {
    for (std::int64_t y = 0; y <= b; ++y) {
      unique = unique && lat_factorization_count({x, y}, qa, b) == 1;
    }
  }
  r.claims.push_back({"the quadrant is a UFM, hence an FFM", "quadrant-ffm", evidence_if(unique),
                      b_bound(b)});

  // Counting in a box and in a box twice as wide: an FFM gives equal counts
  // once the box holds every factorization.
  auto small = lat_factorization_count({0, 2}, lat_atoms_in_box(LatticeKind::kUpperHalf, b), b);
  auto large =
      lat_factorization_count({0, 2}, lat_atoms_in_box(LatticeKind::kUpperHalf, 2 * b), 2 * b);
  r.claims.push_back({"the upper half plane is an FFM", "upperhalf-ffm", evidence_if(small == large),
                      b_bound(b) + "," + b_bound(2 * b)});

  auto atomic = lat_atomic_elements_in_box(b);
  bool missing = !std::binary_search(atomic.begin(), atomic.end(), LatticePoint{0, 1});
  r.claims.push_back({"their sum is not atomic", "sum-not-atomic",
                      evidence_if(missing && lex_sum_check(b)), b_bound(b)});

  r.artifacts["upperhalf_factorizations_of_(0,2)"] = {{b_bound(b), small},
                                                      {b_bound(2 * b), large}};
  r.artifacts["properties"] = Json::array();
  for (auto kind : {LatticeKind::kQuadrant, LatticeKind::kUpperHalf, LatticeKind::kLexCone}) {
    r.artifacts["properties"].push_back(Json::parse(lattice_properties(kind, b).to_json()));
  }
  return r;
}

// ---- 5: {0} ∪ Q>=1 is not an FFM ----

PaperReport interval_pairs(const PaperOptions& o) {
  PaperReport r;
  const std::uint64_t d = o.den_bound;
  const Rational three(3);
  const Rational mid = Rational::reduce(3, 2);
  auto z = interval_length_factorizations(three, 2, d, o.budget);

  bool contained = d >= 3;
  Json pairs = Json::array();
  for (std::uint64_t n = 3; n <= d; ++n) {
    Rational eps = Rational::reduce(1, n);
    Factorization f({{mid - eps, 1}, {mid + eps, 1}});
    bool in = std::find(z.items().begin(), z.items().end(), f) != z.items().end();
    contained = contained && in && f.value() == three;
    pairs.push_back(f.str());
  }
  r.claims.push_back({"3 = (3/2 - 1/n) + (3/2 + 1/n) for every n >= 3", "pairs",
                      exact_if(contained), d_bound(d)});

  std::vector<std::uint64_t> bounds{(d + 2) / 3, (2 * d + 2) / 3, d};
  std::vector<std::size_t> counts;
  for (auto bd : bounds) counts.push_back(interval_length_factorizations(three, 2, bd, o.budget).size());
  bool growth = std::adjacent_find(counts.begin(), counts.end(),
                                   [](auto a, auto b) { return a >= b; }) == counts.end();
  r.claims.push_back({"3 has infinitely many factorizations", "z-of-3-unbounded",
                      evidence_if(growth), d_bound(d)});

  // Sample x in [1, 3) on the grid of denominators <= d and search for a
  // splitting x = u + (x - u) with both parts >= 1 on the same grid.
  std::vector<Rational> grid;
  for (std::uint64_t den = 1; den <= d; ++den) {
    for (std::uint64_t num = den; num < 3 * den; ++num) grid.push_back(Rational::reduce(num, den));
  }
  bool atoms = true;
  for (const auto& x : grid) {
    bool splits = std::any_of(grid.begin(), grid.end(),
                              [&](const Rational& u) { return x - u >= Rational(1); });
    atoms = atoms && (splits != (x < Rational(2)));
  }
  r.claims.push_back({"the atoms are the rationals in [1, 2)", "interval-atoms",
                      evidence_if(atoms), d_bound(d)});

  Json count_json = Json::object();
  for (std::size_t i = 0; i < bounds.size(); ++i) count_json[d_bound(bounds[i])] = counts[i];
  r.artifacts["pairs"] = pairs;
  r.artifacts["z2_counts"] = count_json;
  return r;
}

}  // namespace

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kVerifiedExact: return "verified-exact";
    case Verdict::kEvidenceAtBound: return "evidence-at-bound";
    case Verdict::kOutOfScope: return "out-of-scope";
    case Verdict::kFailed: return "failed";
  }
  return "failed";
}

bool PaperReport::ok() const {
  return std::none_of(claims.begin(), claims.end(),
                      [](const Claim& c) { return c.verdict == Verdict::kFailed; });
}

std::string PaperReport::to_json() const {
  Json out;
  out["example"] = example;
  out["claims"] = Json::array();
  for (const auto& c : claims) {
    out["claims"].push_back({{"statement", c.statement},
                             {"anchor", c.anchor},
                             {"verdict", verdict_name(c.verdict)},
                             {"bound", c.bound.empty() ? Json(nullptr) : Json(c.bound)}});
  }
  out["artifacts"] = artifacts;
  return out.dump(2);
}

std::string PaperReport::to_text() const {
  std::ostringstream out;
  out << "example " << example << "\n";
  for (const auto& c : claims) {
    out << "  [" << verdict_name(c.verdict);
    if (!c.bound.empty()) out << " " << c.bound;
    out << "] " << c.statement << "\n";
  }
  out << "artifacts:\n";
  for (const auto& [key, value] : artifacts.items()) out << "  " << key << ": " << value.dump() << "\n";
  return out.str();
}

const std::vector<std::string>& paper_example_ids() {
  static const std::vector<std::string> ids{"3.2", "3.3", "4.2", "4.3", "4.4", "5"};
  return ids;
}

PaperReport run_paper_example(std::string_view id, const PaperOptions& options) {
  PaperReport r;
  if (id == "3.2") {
    r = lattice_sum(options);
  } else if (id == "3.3") {
    r = antimatter(options);
  } else if (id == "4.2") {
    r = not_ffm(options);
  } else if (id == "4.3") {
    r = not_atomic(options);
  } else if (id == "4.4") {
    r = lattice_ffm(options);
  } else if (id == "5") {
    r = interval_pairs(options);
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown example '" + std::string(id) +
                                          "'; expected one of 3.2, 3.3, 4.2, 4.3, 4.4, 5");
  }
  r.example = std::string(id);
  return r;
}

}  // namespace puiseux::tools
