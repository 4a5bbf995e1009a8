#include "puiseux/factorization.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "puiseux/error.hpp"

namespace puiseux {

Factorization::Factorization(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.first < b.first; });
  for (auto& [atom, count] : parts) {
    if (count == 0) continue;
    if (!parts_.empty() && parts_.back().first == atom) {
      parts_.back().second += count;
    } else {
      parts_.emplace_back(std::move(atom), count);
    }
    length_ += count;
  }
}

Rational Factorization::value() const {
  Rational sum;
  for (const auto& [atom, count] : parts_) sum += atom * Rational(count);
  return sum;
}

std::uint64_t Factorization::multiplicity(const Rational& atom) const {
  for (const auto& [a, count] : parts_) {
    if (a == atom) return count;
  }
  return 0;
}

Factorization Factorization::plus(const Rational& atom, std::uint64_t count) const {
  std::vector<Part> parts = parts_;
  parts.emplace_back(atom, count);
  return Factorization(std::move(parts));
}

std::string Factorization::str() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (const auto& [atom, count] : parts_) {
    if (!out.empty()) out += " + ";
    out += std::to_string(count) + "·" + atom.str();
  }
  return out;
}

bool canonical_less(const Factorization& lhs, const Factorization& rhs) {
  const auto& a = lhs.parts();
  const auto& b = rhs.parts();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    // Smallest atom present in either, with multiplicity 0 where absent.
    const Rational* atom;
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      atom = &a[i].first;
    } else {
      atom = &b[j].first;
    }
    std::uint64_t ma = (i < a.size() && a[i].first == *atom) ? a[i].second : 0;
    std::uint64_t mb = (j < b.size() && b[j].first == *atom) ? b[j].second : 0;
    if (ma != mb) return ma > mb;
    if (i < a.size() && a[i].first == *atom) ++i;
    if (j < b.size() && b[j].first == *atom) ++j;
  }
  return false;
}

FactorizationSet::FactorizationSet(Rational target, std::vector<Factorization> items)
    : target_(std::move(target)), items_(std::move(items)) {
  for (const auto& z : items_) {
    if (z.value() != target_) {
      fail(ErrorCode::kInternal,
           "factorization " + z.str() + " does not sum to " + target_.str());
    }
  }
  std::sort(items_.begin(), items_.end(), canonical_less);
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

std::vector<std::uint64_t> FactorizationSet::lengths() const {
  std::set<std::uint64_t> out;
  for (const auto& z : items_) out.insert(z.length());
  return {out.begin(), out.end()};
}

FactorizationSet FactorizationSet::with_length(std::uint64_t ell) const {
  std::vector<Factorization> kept;
  for (const auto& z : items_) {
    if (z.length() == ell) kept.push_back(z);
  }
  return FactorizationSet(target_, std::move(kept));
}

std::string FactorizationSet::to_json() const {
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& z : items_) {
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& [atom, count] : z.parts()) {
      parts.push_back(nlohmann::ordered_json::array({atom.str(), count}));
    }
    items.push_back({{"parts", parts}, {"length", z.length()}});
  }
  nlohmann::ordered_json out = {{"target", target_.str()}, {"items", items}};
  return out.dump();
}

}  // namespace puiseux
