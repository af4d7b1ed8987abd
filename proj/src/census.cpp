#include "knotlink/census.hpp"

#include <algorithm>

#include "knotlink/canonical.hpp"
#include "knotlink/family.hpp"
#include "knotlink/partite.hpp"

namespace knotlink {

namespace {

constexpr int kOrder = 8;
constexpr int kFull = kOrder * (kOrder - 1) / 2;

struct Named {
  const char* name;
  int k;
  Graph graph;
};

std::vector<Named> named_graphs() {
  Graph star = Graph::complete(kOrder);
  for (int v = 1; v <= 4; ++v) star.remove_edge(0, v);
  return {
      {"K8 minus four edges at one vertex", 4, star},
      {"3,2,1,1,1-(b,c)", 5, build_graph(parse_spec("3,2,1,1,1-(b,c)"))},
      {"3,3,1,1", 6, build_graph(parse_spec("3,3,1,1"))},
      {"3,2,1,1,1-{(b1,c),(b1,d)}", 6, build_graph(parse_spec("3,2,1,1,1-{(b1,c),(b1,d)}"))},
      {"H8", 7, h8()},
      {"K7 plus an isolated vertex", 7, disjoint_union(Graph::complete(7), Graph(1))},
  };
}

}  // namespace

bool CensusReport::counts_match() const {
  for (const CensusLevel& l : levels) {
    if (l.knotted != kExpectedKnotted[l.k] || l.unknown != 0) return false;
  }
  return true;
}

bool CensusReport::classes_match() const {
  for (std::size_t k = 0; k < kExpectedClasses.size(); ++k) {
    if (levels[k].classes != kExpectedClasses[k]) return false;
  }
  return true;
}

bool CensusReport::ok() const {
  if (!counts_match() || !classes_match() || !undecided.empty()) return false;
  for (const NamedCheck& n : named) {
    if (!n.found) return false;
  }
  // Exactly the named graphs at k = 7.
  if (levels[7].knotted != 2) return false;
  for (const CensusGraph& g : knotted) {
    if (!g.reverified) return false;
  }
  return true;
}

CensusReport run_census(Classifier& classifier) {
  CensusReport r;
  for (int k = 0; k <= kCensusMaxDeficiency; ++k) r.levels[k].k = k;
  const std::vector<Graph> graphs = enumerate_graphs(kOrder, kFull - kCensusMaxDeficiency);
  const auto verdicts = propagate_census(graphs, classifier);
  for (const auto& [key, verdict] : verdicts) {
    const Graph g = key.graph();
    const int k = kFull - g.size();
    CensusLevel& level = r.levels[k];
    ++level.classes;
    if (verdict.value == Value::Negative) continue;
    CensusGraph entry{k, g, to_graph6(g), serialize_graph_inline(g), verdict, false};
    if (verdict.value == Value::Unknown) {
      ++level.unknown;
      r.undecided.push_back(std::move(entry));
      continue;
    }
    ++level.knotted;
    const Graph reloaded = parse_graph_inline(entry.edges);
    entry.reverified = classifier.decide_knotting(reloaded).value == Value::Positive;
    r.knotted.push_back(std::move(entry));
  }
  // Fewest deleted edges first, then canonical key (map order).
  std::stable_sort(r.knotted.begin(), r.knotted.end(),
                   [](const CensusGraph& a, const CensusGraph& b) { return a.k < b.k; });
  for (const CensusLevel& l : r.levels) r.total_knotted += l.knotted;

  for (const Named& n : named_graphs()) {
    NamedCheck check{n.name, n.k, false};
    for (const CensusGraph& g : r.knotted) {
      if (g.k == n.k && is_isomorphic(g.graph, n.graph)) check.found = true;
    }
    r.named.push_back(std::move(check));
  }

  int expected_sum = 0;
  for (int c : kExpectedKnotted) expected_sum += c;
  if (r.total_knotted != kStatedKnottedTotal) {
    r.notes.push_back("computed total " + std::to_string(r.total_knotted) +
                      " differs from the stated total of " + std::to_string(kStatedKnottedTotal) +
                      "; the stated per-k counts sum to " + std::to_string(expected_sum));
  }
  return r;
}

Report census_report(const CensusReport& c, bool list, bool graph6) {
  Report rep;
  for (const CensusLevel& l : c.levels) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"k", std::to_string(l.k)},
        {"classes", std::to_string(l.classes)},
        {"knotted", std::to_string(l.knotted)},
        {"expected", std::to_string(kExpectedKnotted[l.k])},
    };
    if (l.k < static_cast<int>(kExpectedClasses.size())) {
      fields.emplace_back("expected_classes", std::to_string(kExpectedClasses[l.k]));
    }
    if (l.unknown) fields.emplace_back("unknown", std::to_string(l.unknown));
    rep.add("level", std::move(fields));
  }
  for (const NamedCheck& n : c.named) {
    rep.add("named", {{"graph", n.name}, {"k", std::to_string(n.k)}, {"found", n.found ? "yes" : "NO"}});
  }
  auto emit = [&](const char* tag, const CensusGraph& g) {
    std::vector<std::pair<std::string, std::string>> fields{{"k", std::to_string(g.k)},
                                                            {"edges", g.edges}};
    if (graph6) fields.emplace_back("graph6", g.graph6);
    if (g.verdict.value == Value::Positive) {
      fields.emplace_back("reverified", g.reverified ? "yes" : "NO");
    }
    rep.add(tag, std::move(fields), 1);
    add_verdict(rep, g.verdict, 2);
  };
  if (list) {
    rep.add("knotted", {{"count", std::to_string(c.knotted.size())}});
    for (const CensusGraph& g : c.knotted) emit("graph", g);
  }
  for (const CensusGraph& g : c.undecided) emit("undecided", g);
  rep.add("total", {{"knotted", std::to_string(c.total_knotted)},
                    {"stated", std::to_string(kStatedKnottedTotal)}});
  for (const std::string& n : c.notes) rep.add("note", {{"text", n}});
  rep.add("summary", {{"status", c.ok() ? "ok" : "FAIL"}});
  return rep;
}

}  // namespace knotlink
