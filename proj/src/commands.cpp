#include "knotlink/commands.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "knotlink/canonical.hpp"
#include "knotlink/census.hpp"
#include "knotlink/errors.hpp"
#include "knotlink/partite.hpp"
#include "knotlink/tables.hpp"

namespace knotlink {

namespace {

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(0, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

std::string shape(const Graph& g) {
  return std::to_string(g.order()) + "," + std::to_string(g.size());
}

}  // namespace

Graph read_graph_argument(std::string_view input) {
  if (input.rfind("g:", 0) != 0) return build_graph(parse_spec(input));
  const std::string_view rest = input.substr(2);
  if (rest.find(';') != std::string_view::npos) return parse_graph_inline(rest);
  std::ifstream in{std::filesystem::path(std::string(rest))};
  if (!in) throw ParseError(0, "cannot read graph file '" + std::string(rest) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::pair<int, int> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots), "range start");
  const int hi = parse_int(text.substr(dots + 2), "range end");
  if (lo > hi) throw ParseError(0, "empty range '" + std::string(text) + "'");
  return {lo, hi};
}

BoundRule parse_rule(std::string_view name) {
  if (name == "k5") return BoundRule::k5();
  if (name == "k6") return BoundRule::k6();
  if (name == "k7") return BoundRule::k7();
  throw ParseError(0, "unknown rule '" + std::string(name) + "' (expected k5, k6 or k7)");
}

CommandResult cmd_classify(std::string_view input, bool linking, bool knotting,
                           Classifier& classifier) {
  if (!linking && !knotting) linking = knotting = true;
  // A spec with unspecified removals names every class it expands to.
  std::vector<std::pair<std::string, Graph>> graphs;
  if (input.rfind("g:", 0) == 0) {
    graphs.emplace_back(std::string(input), read_graph_argument(input));
  } else {
    const PartitePattern p = parse_pattern(input);
    if (p.symbolic()) throw ParseError(0, "spec '" + std::string(input) + "' has a symbolic part");
    for (const DeficientClass& c : expand_pattern(p)) {
      graphs.emplace_back(format_spec(c.representative), c.graph);
    }
  }
  CommandResult r;
  for (const auto& [label, g] : graphs) {
    r.report.add("graph", {{"input", label},
                           {"vertices", std::to_string(g.order())},
                           {"edges", std::to_string(g.size())},
                           {"graph6", to_graph6(g)}});
    if (linking) {
      const Verdict v = classifier.decide_linking(g);
      r.report.add("linking", {{"verdict", verdict_word(v, false)}});
      add_verdict(r.report, v, 1, true);
    }
    if (knotting) {
      const Verdict v = classifier.decide_knotting(g);
      std::vector<std::pair<std::string, std::string>> fields{{"verdict", verdict_word(v, true)}};
      const auto axioms = v.axioms();
      fields.emplace_back("axioms", axioms.empty() ? "none" : join_ints(axioms));
      r.report.add("knotting", std::move(fields));
      add_verdict(r.report, v, 1, true);
      for (int line : axioms) {
        r.report.add("axiom", {{"line", std::to_string(line)},
                               {"fact", classifier.kb().entry_at_line(line).label()}},
                     1);
      }
      if (v.value == Value::Unknown) r.exit_code = kExitMismatch;
    }
  }
  return r;
}

CommandResult cmd_table(int id, int n_max, Classifier& classifier) {
  if (n_max < 1) throw PreconditionError("--nmax must be at least 1");
  const TableResult t = run_table(id, classifier, n_max);
  CommandResult r{table_report(t), kExitOk};
  if (t.search_limit) {
    r.exit_code = kExitSearchLimit;
  } else if (!t.ok()) {
    r.exit_code = kExitMismatch;
  }
  return r;
}

CommandResult cmd_census8(bool list, bool graph6, Classifier& classifier) {
  const CensusReport c = run_census(classifier);
  return {census_report(c, list, graph6), c.ok() ? kExitOk : kExitMismatch};
}

CommandResult cmd_verify_bounds(std::pair<int, int> range, const std::vector<BoundRule>& rules,
                                MinorEngine& engine) {
  CommandResult r;
  for (const BoundRule& rule : rules) {
    for (int n = range.first; n <= range.second; ++n) {
      if (n < rule.min_order) {
        r.report.add("skip", {{"rule", rule.name()},
                              {"n", std::to_string(n)},
                              {"reason", "below order " + std::to_string(rule.min_order)}});
        continue;
      }
      const BoundReport b = verify_bound_exhaustive(n, rule, engine);
      std::vector<std::pair<std::string, std::string>> fields{
          {"rule", rule.name()},
          {"n", std::to_string(n)},
          {"threshold", std::to_string(b.threshold)},
          {"checked", std::to_string(b.checked)},
          {"violations", std::to_string(b.violations.size())},
      };
      if (b.below_threshold_witness) {
        fields.emplace_back("sharp", serialize_graph_inline(*b.below_threshold_witness));
      } else {
        fields.emplace_back("sharp", "none");
      }
      r.report.add("bound", std::move(fields));
      for (const Graph& v : b.violations) {
        r.report.add("violation", {{"edges", serialize_graph_inline(v)}}, 1);
      }
      if (!b.violations.empty()) r.exit_code = kExitMismatch;
    }
  }
  return r;
}

CommandResult cmd_family(std::string_view seed, MoveSet moves) {
  Graph root;
  if (seed == "k6") {
    root = Graph::complete(6);
  } else if (seed == "k7") {
    root = Graph::complete(7);
  } else if (seed == "k3311") {
    root = named_graph("K3,3,1,1");
  } else {
    throw ParseError(0, "unknown seed '" + std::string(seed) + "' (expected k6, k7 or k3311)");
  }
  if (!moves.delta_y && !moves.y_delta) moves.delta_y = true;
  const Graph seeds[] = {root};
  const std::string names[] = {std::string(seed)};
  const FamilyClosure f = compute_closure(seeds, names, moves);
  CommandResult r;
  std::string move_text;
  if (moves.delta_y) move_text += "dy";
  if (moves.y_delta) move_text += move_text.empty() ? "yd" : ",yd";
  r.report.add("family", {{"seed", std::string(seed)},
                          {"moves", move_text},
                          {"members", std::to_string(f.members.size())}});
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const Graph& m = f.members[i];
    std::vector<std::pair<std::string, std::string>> fields{
        {"index", std::to_string(i)},
        {"shape", shape(m)},
        {"parent", f.tree_parent[i] < 0 ? "seed" : std::to_string(f.tree_parent[i])},
        {"graph6", to_graph6(m)},
    };
    if (std::string name = known_name(m); !name.empty()) fields.emplace_back("name", name);
    r.report.add("member", std::move(fields), 1);
  }
  if (seed == "k7") {
    for (const H9Candidate& c : h9_candidates()) {
      r.report.add("h9-candidate", {{"member", std::to_string(f.find(c.graph))},
                                    {"graph6", to_graph6(canonical_graph(c.graph))},
                                    {"disjoint", c.disjoint_triangles ? "yes" : "no"},
                                    {"minor_of_333-e", c.minor_of_k333_minus_e ? "yes" : "no"},
                                    {"minor_of_441-e", c.minor_of_k441_minus_e ? "yes" : "no"},
                                    {"selected", is_isomorphic(c.graph, h9()) ? "yes" : "no"}},
                   1);
    }
  }
  for (const GenerationEdge& e : f.edges) {
    r.report.add("move", {{"from", std::to_string(e.parent)},
                          {"to", std::to_string(e.child)},
                          {"kind", std::string(move_name(e.move))}},
                 1);
  }
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SearchLimitError*>(&e)) return kExitSearchLimit;
  if (dynamic_cast<const PropagationConflict*>(&e)) return kExitMismatch;
  return kExitInput;
}

}  // namespace knotlink
