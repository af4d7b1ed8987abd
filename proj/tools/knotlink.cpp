#include <iostream>

#include <CLI11.hpp>

#include "knotlink/commands.hpp"
#include "knotlink/errors.hpp"

using namespace knotlink;

int main(int argc, char** argv) {
  CLI::App app{"Intrinsic linking and knotting of small graphs"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "Tab-separated machine-readable output");

  std::string input;
  bool linking = false;
  bool knotting = false;
  auto* classify = app.add_subcommand("classify", "Decide linking and knotting for one graph");
  classify->add_option("graph", input, "Partite spec, g:<file> or g:<inline edge list>")->required();
  classify->add_flag("--linking", linking, "Linking only");
  classify->add_flag("--knotting", knotting, "Knotting only");

  int table_id = 0;
  int n_max = 7;
  auto* table = app.add_subcommand("table", "Reproduce a classification table");
  table->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, 8));
  table->add_option("--nmax", n_max, "Largest size for a parametric part");

  bool list = false;
  bool graph6 = false;
  auto* census = app.add_subcommand("census8", "Knotted graphs on eight vertices");
  census->add_flag("--list", list, "List the knotted graphs");
  census->add_flag("--graph6", graph6, "Include graph6 strings");

  std::vector<std::string> rules;
  std::string range;
  auto* bounds = app.add_subcommand("bounds", "Exhaustive check of an edge-count minor bound");
  bounds->add_option("--rule", rules, "k5, k6 or k7")->required();
  bounds->add_option("--n", range, "Vertex range A..B")->required();

  std::string seed;
  MoveSet moves{false, false};
  auto* family = app.add_subcommand("family", "Closure of a graph under triangle-Y moves");
  family->add_option("--seed", seed, "k6, k7 or k3311")->required();
  family->add_flag("--dy", moves.delta_y, "Triangle to Y");
  family->add_flag("--yd", moves.y_delta, "Y to triangle");

  for (auto* sub : {classify, table, census, bounds, family}) {
    sub->add_flag("--porcelain", porcelain, "Tab-separated machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    CommandResult result;
    if (*classify) {
      Classifier c(KnowledgeBase::load_default());
      result = cmd_classify(input, linking, knotting, c);
    } else if (*table) {
      Classifier c(KnowledgeBase::load_default());
      result = cmd_table(table_id, n_max, c);
    } else if (*census) {
      Classifier c(KnowledgeBase::load_default());
      result = cmd_census8(list, graph6, c);
    } else if (*bounds) {
      std::vector<BoundRule> parsed;
      for (const std::string& r : rules) parsed.push_back(parse_rule(r));
      result = cmd_verify_bounds(parse_range(range), parsed, default_engine());
    } else {
      result = cmd_family(seed, moves);
    }
    std::cout << (porcelain ? result.report.porcelain() : result.report.human());
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "knotlink: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
