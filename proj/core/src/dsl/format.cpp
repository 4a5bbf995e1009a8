#include "puiseux/dsl/format.hpp"

#include <json.hpp>

namespace puiseux::dsl {
namespace {

using Json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string text(const QueryResult& r) {
  std::string body = std::visit(
      overloaded{
          [](const FactorizationSet& s) { return format_text(s); },
          [](const LengthSet& l) {
            std::vector<std::string> ls;
            for (auto ell : l.lengths) ls.push_back(std::to_string(ell));
            return "L(" + l.target.str() + ") = {" + join(ls, ", ") + "}";
          },
          [](const AtomList& a) { return "atoms: {" + join(a.atoms, ", ") + "}"; },
          [](const BoolAnswer& b) { return b.key + ": " + (b.value ? "true" : "false"); },
          [](const McdAnswer& m) {
            std::vector<std::string> all;
            for (const auto& d : m.all) all.push_back(d.str());
            return "mcd = " + m.chosen.str() + " (maximal: {" + join(all, ", ") + "})";
          },
          [](const PropertyReport& p) {
            std::string t = p.to_text();
            if (!t.empty() && t.back() == '\n') t.pop_back();
            return t;
          },
      },
      r.value);
  if (r.provenance != "exact") body += "\n[" + r.provenance + "]";
  return body;
}

Json json(const QueryResult& r) {
  Json out = std::visit(
      overloaded{
          [](const FactorizationSet& s) { return Json::parse(s.to_json()); },
          [](const LengthSet& l) {
            return Json{{"target", l.target.str()}, {"lengths", l.lengths}};
          },
          [](const AtomList& a) { return Json{{"atoms", a.atoms}}; },
          [](const BoolAnswer& b) { return Json{{b.key, b.value}}; },
          [](const McdAnswer& m) {
            Json all = Json::array();
            for (const auto& d : m.all) all.push_back(d.str());
            return Json{{"mcd", m.chosen.str()}, {"maximal", all}};
          },
          [](const PropertyReport& p) { return Json::parse(p.to_json()); },
      },
      r.value);
  if (r.provenance != "exact") out["provenance"] = r.provenance;
  return out;
}

}  // namespace

std::string format_text(const FactorizationSet& set) {
  if (set.empty()) return "(no factorizations)";
  std::string out;
  const std::string target = set.target().str();
  for (const auto& f : set.items()) {
    if (!out.empty()) out += '\n';
    out += target + " = " + f.str() + " [len " + std::to_string(f.length()) + "]";
  }
  return out;
}

std::string format(const QueryResult& result, OutputMode mode) {
  if (mode == OutputMode::kJson) return json(result).dump();
  return text(result);
}

}  // namespace puiseux::dsl
