#include "qlmc/report.hpp"

#include "json.hpp"

namespace qlmc {

bool SuiteReport::any(Status s) const {
  for (const auto& e : entries)
    if (e.status == s) return true;
  return false;
}

std::size_t SuiteReport::count(Status s) const {
  std::size_t n = 0;
  for (const auto& e : entries)
    if (e.status == s) ++n;
  return n;
}

std::string entry_line(const ReportEntry& e) {
  std::string line = e.name;
  line += '\t';
  line += status_name(e.status);
  if (e.cex) {
    line += "\t{";
    for (std::size_t i = 0; i < e.cex->assignment.size(); ++i) {
      if (i > 0) line += ", ";
      line += e.cex->assignment[i].first + "=" + e.cex->assignment[i].second;
    }
    line += "} ";
    line += e.cex->conclusion + " : lhs=" + e.cex->lhs + " rhs=" + e.cex->rhs;
  } else if (!e.detail.empty()) {
    line += '\t';
    line += e.detail;
  }
  return line;
}

std::string to_text(const SuiteReport& report) {
  std::string out;
  for (const auto& e : report.entries) {
    out += entry_line(e);
    out += '\n';
  }
  return out;
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json doc;
  doc["model"] = report.model_id;
  doc["results"] = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json entry;
    entry["name"] = e.name;
    entry["status"] = status_name(e.status);
    if (!e.detail.empty()) entry["detail"] = e.detail;
    if (e.cex) {
      nlohmann::ordered_json assignment;
      for (const auto& [atom, value] : e.cex->assignment) assignment[atom] = value;
      entry["assignment"] = std::move(assignment);
      entry["conclusion"] = e.cex->conclusion;
      entry["lhs"] = e.cex->lhs;
      entry["rhs"] = e.cex->rhs;
    }
    doc["results"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace qlmc
