#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "puiseux/search.hpp"

namespace puiseux::tools {

enum class Verdict { kVerifiedExact, kEvidenceAtBound, kOutOfScope, kFailed };

std::string_view verdict_name(Verdict verdict);

struct Claim {
  std::string statement;
  std::string anchor;  // short stable label of the claim
  Verdict verdict = Verdict::kFailed;
  std::string bound;   // empty when the check is exact
};

struct PaperOptions {
  std::uint64_t window = 10;
  std::uint64_t den_bound = 12;
  std::int64_t box = 10;
  Budget budget = Budget::nodes(10'000'000);
};

struct PaperReport {
  std::string example;
  std::vector<Claim> claims;
  nlohmann::ordered_json artifacts = nlohmann::ordered_json::object();

  /// No claim failed.
  bool ok() const;
  std::string to_json() const;
  std::string to_text() const;
};

/// Example ids: "3.2", "3.3", "4.2", "4.3", "4.4", "5".
const std::vector<std::string>& paper_example_ids();

/// Recomputes every claim of the example. Throws kInvalidArgument for an
/// unknown id.
PaperReport run_paper_example(std::string_view id, const PaperOptions& options = {});

}  // namespace puiseux::tools
