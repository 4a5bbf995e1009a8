#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "puiseux/fg_monoid.hpp"
#include "puiseux/rational.hpp"

namespace testing_support {

inline puiseux::Rational Q(const char* text) { return puiseux::Rational::parse(text); }

inline std::vector<puiseux::Rational> Qs(std::initializer_list<const char*> texts) {
  std::vector<puiseux::Rational> out;
  for (const char* t : texts) out.push_back(Q(t));
  return out;
}

inline puiseux::FgMonoid M(std::initializer_list<const char*> texts) {
  return puiseux::FgMonoid(Qs(texts));
}

inline std::vector<std::string> strs(const std::vector<puiseux::Rational>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(q.str());
  return out;
}

inline std::vector<std::string> strs(const puiseux::FactorizationSet& set) {
  std::vector<std::string> out;
  for (const auto& f : set.items()) out.push_back(f.str());
  return out;
}

}  // namespace testing_support
