#include "knotlink/report.hpp"

#include <algorithm>

namespace knotlink {

namespace {

std::string flatten(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string branch_text(const std::vector<int>& set) { return join_ints(set, ' '); }

}  // namespace

ReportLine& Report::add(std::string tag, int depth) { return add(std::move(tag), {}, depth); }

ReportLine& Report::add(std::string tag, std::vector<std::pair<std::string, std::string>> fields,
                        int depth) {
  lines_.push_back({std::move(tag), std::move(fields), depth});
  return lines_.back();
}

void Report::append(const Report& other, int extra_depth) {
  for (ReportLine line : other.lines_) {
    line.depth += extra_depth;
    lines_.push_back(std::move(line));
  }
}

std::string Report::human() const {
  std::string out;
  for (const ReportLine& line : lines_) {
    out.append(2 * line.depth, ' ');
    out += line.tag;
    for (const auto& [k, v] : line.fields) {
      out += "  " + k + ": " + v;
    }
    out += '\n';
  }
  return out;
}

std::string Report::porcelain() const {
  std::string out;
  for (const ReportLine& line : lines_) {
    out += flatten(line.tag);
    for (const auto& [k, v] : line.fields) out += "\t" + k + "=" + flatten(v);
    out += '\n';
  }
  return out;
}

std::string join_ints(const std::vector<int>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

void add_verdict(Report& report, const Verdict& v, int depth, bool with_witness) {
  if (v.steps.empty()) {
    std::string tried;
    for (const std::string& a : v.attempted) tried += (tried.empty() ? "" : ",") + a;
    report.add("unresolved", {{"attempted", tried}}, depth);
  }
  for (const Step& s : v.steps) {
    std::vector<std::pair<std::string, std::string>> fields{{"rule", std::string(rule_name(s.rule))},
                                                            {"why", s.summary}};
    if (!s.apex.empty()) fields.emplace_back("apex", join_ints(s.apex));
    if (!s.axioms.empty()) fields.emplace_back("axioms", join_ints(s.axioms));
    report.add("step", std::move(fields), depth);
    if (!with_witness || !s.witness) continue;
    const MinorWitness& w = *s.witness;
    for (std::size_t x = 0; x < w.branch_sets.size(); ++x) {
      report.add("branch", {{"vertex", std::to_string(x)}, {"set", branch_text(w.branch_sets[x])}},
                 depth + 1);
    }
    for (const MinorWitness::RealizedEdge& e : w.realized_edges) {
      report.add("edge",
                 {{"pattern", std::to_string(e.pattern.first) + "-" + std::to_string(e.pattern.second)},
                  {"host", std::to_string(e.host.first) + "-" + std::to_string(e.host.second)}},
                 depth + 1);
    }
  }
}

}  // namespace knotlink
