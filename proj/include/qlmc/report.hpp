#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlmc/model.hpp"

namespace qlmc {

// A counterexample rendered to element names, ready for output.
struct RenderedCex {
  std::vector<std::pair<std::string, std::string>> assignment;
  std::string conclusion;
  std::string lhs;
  std::string rhs;
};

struct ReportEntry {
  std::string name;
  Status status = Status::Valid;
  std::string detail;
  std::optional<RenderedCex> cex;
};

struct SuiteReport {
  std::string model_id;
  std::vector<ReportEntry> entries;
  double elapsed_seconds = 0;  // never serialized; reports must be replayable byte for byte

  bool any(Status s) const;
  std::size_t count(Status s) const;
};

template <ModelLike M>
RenderedCex render_cex(const M& m, const Counterexample<M>& cex) {
  RenderedCex out;
  for (const auto& [atom, value] : cex.assignment) out.assignment.emplace_back(atom, m.render(value));
  out.conclusion = print_term(cex.failed_conclusion.lhs) + " = " +
                   print_term(cex.failed_conclusion.rhs);
  out.lhs = m.render(cex.lhs_value);
  out.rhs = m.render(cex.rhs_value);
  return out;
}

template <ModelLike M>
ReportEntry make_entry(const std::string& name, const M& m, const CheckResult<M>& r) {
  ReportEntry e;
  e.name = name;
  e.status = r.status;
  e.detail = r.detail;
  if (r.cex) e.cex = render_cex(m, *r.cex);
  return e;
}

// One line per entry: NAME<TAB>STATUS[<TAB>detail or counterexample].
std::string to_text(const SuiteReport& report);
std::string entry_line(const ReportEntry& e);

// Machine-readable variant; key order is fixed so identical runs are
// byte-identical.
std::string to_json(const SuiteReport& report);

}  // namespace qlmc
