#include "tightgraphs/report.hpp"

#include <sstream>

#include "json.hpp"

namespace tightgraphs {

std::string render_text(const Report& r) {
  std::ostringstream out;
  bool first = true;
  for (const auto& sec : r.sections) {
    if (!first) out << '\n';
    first = false;
    out << "== " << sec.title << " ==\n";
    for (const auto& [key, value] : sec.rows) out << key << ": " << value << '\n';
    if (!sec.citation.empty()) out << "citation: " << sec.citation << '\n';
  }
  return out.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json doc;
  doc["sections"] = nlohmann::ordered_json::array();
  for (const auto& sec : r.sections) {
    nlohmann::ordered_json js;
    js["title"] = sec.title;
    js["data"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : sec.rows) js["data"][key] = value;
    if (!sec.citation.empty()) js["citation"] = sec.citation;
    doc["sections"].push_back(std::move(js));
  }
  return doc.dump(2) + "\n";
}

}  // namespace tightgraphs
