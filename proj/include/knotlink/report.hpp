#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotlink/classifier.hpp"

namespace knotlink {

struct ReportLine {
  std::string tag;
  std::vector<std::pair<std::string, std::string>> fields;
  int depth = 0;
};

/// Ordered tagged lines; human and porcelain output render the same content.
class Report {
 public:
  ReportLine& add(std::string tag, int depth = 0);
  ReportLine& add(std::string tag, std::vector<std::pair<std::string, std::string>> fields,
                  int depth = 0);
  void append(const Report& other, int extra_depth = 0);

  const std::vector<ReportLine>& lines() const { return lines_; }
  std::string human() const;
  /// tag<TAB>key=value<TAB>...; tabs and newlines inside values become spaces.
  std::string porcelain() const;

 private:
  std::vector<ReportLine> lines_;
};

std::string join_ints(const std::vector<int>& values, char sep = ',');

/// Certificate trace: one "step" line per rule, optionally followed by witness lines.
void add_verdict(Report& report, const Verdict& v, int depth,
                 bool with_witness = false);

}  // namespace knotlink
