#pragma once

#include <optional>
#include <string>
#include <vector>

namespace puiseux {

/// One yes/no property with where the verdict comes from: "paper" (a proven
/// statement taken as given), "exact" (decided by a complete computation) or
/// "evidence(K=...)" (observed on a finite truncation or window).
struct PropertyFlag {
  std::string name;
  bool value = false;
  std::string provenance;
};

struct EvidenceItem {
  std::string description;
  std::string value;
  std::string bound;  // empty when the check is window-free
};

struct PropertyReport {
  std::string subject;
  std::vector<PropertyFlag> flags;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<EvidenceItem> evidence;

  std::optional<bool> flag(const std::string& name) const;
  std::string to_text() const;
  std::string to_json() const;
};

std::string evidence_provenance(const std::string& bound);

}  // namespace puiseux
