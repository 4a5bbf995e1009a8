#include "puiseux/report.hpp"

#include <json.hpp>

namespace puiseux {

std::optional<bool> PropertyReport::flag(const std::string& name) const {
  for (const auto& f : flags) {
    if (f.name == name) return f.value;
  }
  return std::nullopt;
}

std::string PropertyReport::to_text() const {
  std::string out = "properties of " + subject + "\n";
  for (const auto& [key, value] : facts) out += "  " + key + ": " + value + "\n";
  for (const auto& f : flags) {
    out += "  " + f.name + ": " + (f.value ? "true" : "false") + " [" + f.provenance + "]\n";
  }
  for (const auto& e : evidence) {
    out += "  evidence: " + e.description + " = " + e.value;
    if (!e.bound.empty()) out += " (" + e.bound + ")";
    out += "\n";
  }
  if (!out.empty()) out.pop_back();
  return out;
}

std::string PropertyReport::to_json() const {
  nlohmann::ordered_json flags_json = nlohmann::ordered_json::object();
  for (const auto& f : flags) {
    flags_json[f.name] = {{"value", f.value}, {"provenance", f.provenance}};
  }
  nlohmann::ordered_json facts_json = nlohmann::ordered_json::object();
  for (const auto& [key, value] : facts) facts_json[key] = value;
  nlohmann::ordered_json evidence_json = nlohmann::ordered_json::array();
  for (const auto& e : evidence) {
    nlohmann::ordered_json item = {{"description", e.description}, {"value", e.value}};
    item["bound"] = e.bound.empty() ? nlohmann::ordered_json(nullptr)
                                    : nlohmann::ordered_json(e.bound);
    evidence_json.push_back(item);
  }
  nlohmann::ordered_json out = {{"subject", subject},
                                {"facts", facts_json},
                                {"flags", flags_json},
                                {"evidence", evidence_json}};
  return out.dump();
}

std::string evidence_provenance(const std::string& bound) {
  return "evidence(" + bound + ")";
}

}  // namespace puiseux
