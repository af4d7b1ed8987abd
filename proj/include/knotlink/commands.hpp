#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotlink/classifier.hpp"
#include "knotlink/family.hpp"
#include "knotlink/minor.hpp"
#include "knotlink/report.hpp"

namespace knotlink {

enum ExitCode : int { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitSearchLimit = 3 };

struct CommandResult {
  Report report;
  int exit_code = kExitOk;
};

/// A partite spec, "g:<path>" for an edge-list file, or "g:" followed by an
/// inline edge list ("5;0 1;1 2;...").
Graph read_graph_argument(std::string_view input);
/// "A..B" or a single "A".
std::pair<int, int> parse_range(std::string_view text);
BoundRule parse_rule(std::string_view name);

CommandResult cmd_classify(std::string_view input, bool linking, bool knotting,
                           Classifier& classifier);
CommandResult cmd_table(int id, int n_max, Classifier& classifier);
CommandResult cmd_census8(bool list, bool graph6, Classifier& classifier);
CommandResult cmd_verify_bounds(std::pair<int, int> range, const std::vector<BoundRule>& rules,
                                MinorEngine& engine);
CommandResult cmd_family(std::string_view seed, MoveSet moves);

/// Exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

}  // namespace knotlink
