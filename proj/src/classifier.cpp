#include "knotlink/classifier.hpp"

#include <algorithm>
#include <set>

#include "knotlink/embedding.hpp"
#include "knotlink/errors.hpp"
#include "knotlink/family.hpp"

namespace knotlink {

namespace {

constexpr int kMaxClassifiedOrder = 12;
constexpr std::uint64_t kSubgraphPassNodes = 200000;

void check_order(const Graph& g) {
  if (g.order() > kMaxClassifiedOrder) {
    throw PreconditionError("classification supports at most " +
                            std::to_string(kMaxClassifiedOrder) + " vertices, got " +
                            std::to_string(g.order()));
  }
}

std::string shape(const Graph& g) {
  return "(" + std::to_string(g.order()) + " vertices, " + std::to_string(g.size()) + " edges)";
}

std::string petersen_member_name(const Graph& g, int index) {
  std::string name = known_name(g);
  if (!name.empty()) return name;
  return "petersen-family[" + std::to_string(index) + "] " + shape(g);
}

Graph remove_vertices(const Graph& g, VertexMask drop) {
  return induced_subgraph(g, g.vertices() & ~drop);
}

bool dominating(const Graph& g, int v) { return g.degree(v) == g.order() - 1; }

MinorWitness identity_witness(const Graph& pattern, const std::array<int, kMaxOrder>& image) {
  MinorWitness w;
  for (int x = 0; x < pattern.order(); ++x) w.branch_sets.push_back({image[x]});
  for (auto [x, y] : pattern.edges()) w.realized_edges.push_back({{x, y}, {image[x], image[y]}});
  return w;
}

}  // namespace

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::PetersenMinor: return "petersen-minor";
    case Rule::PetersenExhaustive: return "petersen-exhaustive";
    case Rule::ApexLinking: return "apex-linking";
    case Rule::KbIdentity: return "kb-identity";
    case Rule::EdgeBound: return "edge-bound";
    case Rule::JoinNonplanar: return "join-nonplanar";
    case Rule::JoinPlanar: return "join-planar";
    case Rule::TwoApex: return "two-apex";
    case Rule::SeedMinor: return "seed-minor";
    case Rule::MinorOfUnknotted: return "minor-of-unknotted";
    case Rule::UnknottedParent: return "unknotted-parent";
  }
  return "?";
}

std::vector<int> Verdict::axioms() const {
  std::set<int> lines;
  for (const Step& s : steps) lines.insert(s.axioms.begin(), s.axioms.end());
  return {lines.begin(), lines.end()};
}

std::string verdict_word(const Verdict& v, bool knotting) {
  switch (v.value) {
    case Value::Positive: return knotting ? "KNOTTED" : "LINKED";
    case Value::Negative: return knotting ? "NOT_KNOTTED" : "NOT_LINKED";
    case Value::Unknown: return "UNKNOWN";
  }
  return "?";
}

Classifier::Classifier(KnowledgeBase kb, MinorEngine& engine)
    : kb_(std::move(kb)), engine_(engine), k5_(Graph::complete(5)), k33_(k33()) {}

const std::vector<Seed>& Classifier::seeds() {
  if (seeds_) return *seeds_;
  std::vector<Seed> out;
  auto backing = [&](const Graph& root) -> int {
    const CanonicalForm key = canonical_form(root);
    for (const KbEntry* e : kb_.with_status(Status::Knotted)) {
      for (const Graph& g : e->instances_of_order(root.order())) {
        if (canonical_form(g) == key) return e->line;
      }
    }
    return 0;
  };
  const int k3311_parts[] = {3, 3, 1, 1};
  const int k55_parts[] = {5, 5};
  const struct {
    const char* name;
    Graph root;
    bool close;
  } roots[] = {
      {"K7", Graph::complete(7), true},
      {"K3,3,1,1", complete_multipartite(k3311_parts), true},
      {"K5,5-e", delete_edge(complete_multipartite(k55_parts), 0, 5), false},
  };
  for (const auto& root : roots) {
    const int line = backing(root.root);
    if (line == 0) continue;
    if (!root.close) {
      out.push_back({root.name, root.root, line});
      continue;
    }
    const Graph seed_graphs[] = {root.root};
    const std::string names[] = {root.name};
    const FamilyClosure closure = compute_closure(seed_graphs, names, {true, false});
    for (std::size_t i = 0; i < closure.members.size(); ++i) {
      std::string name = known_name(closure.members[i]);
      if (name.empty()) name = std::string(root.name) + "-dy[" + std::to_string(i) + "]";
      out.push_back({name, closure.members[i], line});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Seed& a, const Seed& b) {
    return a.graph.order() < b.graph.order();
  });
  seeds_ = std::move(out);
  return *seeds_;
}

Verdict Classifier::decide_linking(const Graph& g) {
  check_order(g);
  Verdict v;
  const auto& family = petersen_family();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string name = petersen_member_name(family[i], static_cast<int>(i));
    v.attempted.push_back("minor " + name);
    if (auto w = engine_.find_minor_witness(g, family[i])) {
      v.value = Value::Positive;
      v.steps.push_back({Rule::PetersenMinor, "has a " + name + " minor", {}, {}, g, family[i], *w});
      return v;
    }
  }
  v.value = Value::Negative;
  v.steps.push_back({Rule::PetersenExhaustive,
                     "no minor among the " + std::to_string(family.size()) +
                         " Petersen-family graphs (exhaustive search)",
                     {}, {}, g, std::nullopt, std::nullopt});
  return v;
}

std::optional<Verdict> Classifier::join_apex_rule(const Graph& g, Mode mode) {
  const int n = g.order();
  Verdict v;
  if (mode == Mode::Linking) {
    for (int u = 0; u < n; ++u) {
      if (!dominating(g, u)) continue;
      const Graph h = delete_vertex(g, u);
      Step s{Rule::ApexLinking, "", {}, {u}, h, std::nullopt, std::nullopt};
      if (auto w = engine_.find_minor_witness(h, k5_)) {
        s.pattern = k5_;
        s.witness = *w;
      } else if (auto w2 = engine_.find_minor_witness(h, k33_)) {
        s.pattern = k33_;
        s.witness = *w2;
      }
      v.value = s.witness ? Value::Positive : Value::Negative;
      s.summary = "vertex " + std::to_string(u) + " dominates; G-" + std::to_string(u) + " is " +
                  (s.witness ? "nonplanar" : "planar");
      v.steps.push_back(std::move(s));
      return v;
    }
    return std::nullopt;
  }
  for (int u = 0; u < n; ++u) {
    if (!dominating(g, u)) continue;
    for (int w = u + 1; w < n; ++w) {
      if (!dominating(g, w)) continue;
      const Graph h = remove_vertices(g, bit(u) | bit(w));
      const std::string pair = "{" + std::to_string(u) + "," + std::to_string(w) + "}";
      Step s{Rule::JoinPlanar, "", {}, {u, w}, h, std::nullopt, std::nullopt};
      if (auto x = engine_.find_minor_witness(h, k5_)) {
        s.pattern = k5_;
        s.witness = *x;
      } else if (auto y = engine_.find_minor_witness(h, k33_)) {
        s.pattern = k33_;
        s.witness = *y;
      }
      if (s.witness) {
        s.rule = Rule::JoinNonplanar;
        s.summary = "vertices " + pair + " dominate; G-" + pair + " has a " +
                    (s.pattern->order() == 5 ? "K5" : "K3,3") + " minor";
        v.value = Value::Positive;
      } else {
        s.summary = "vertices " + pair + " dominate; G-" + pair + " is planar";
        v.value = Value::Negative;
      }
      v.steps.push_back(std::move(s));
      return v;
    }
  }
  return std::nullopt;
}

std::optional<Step> Classifier::rule_kb_identity(const Graph& g) {
  const CanonicalForm key = canonical_form(g);
  for (const KbEntry* e : kb_.with_status(Status::NotKnotted)) {
    for (const Graph& x : e->instances_of_order(g.order())) {
      if (canonical_form(x) == key) {
        return Step{Rule::KbIdentity, "is " + e->label(), {e->line}, {}, std::nullopt,
                    std::nullopt, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

std::optional<Step> Classifier::rule_edge_bound(const Graph& g) {
  const int n = g.order();
  if (n < 7 || !guarantees_minor(n, g.size(), BoundRule::k7())) return std::nullopt;
  return Step{Rule::EdgeBound,
              std::to_string(g.size()) + " edges >= 5n-14 = " +
                  std::to_string(BoundRule::k7().threshold(n)),
              {}, {}, std::nullopt, std::nullopt, std::nullopt};
}

std::optional<Step> Classifier::rule_two_apex(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      const Graph h = remove_vertices(g, bit(u) | bit(w));
      // Euler's bound only rules pairs out; planarity itself is decided by minors.
      if (h.order() >= 3 && h.size() > 3 * h.order() - 6) continue;
      if (!planar(h)) continue;
      return Step{Rule::TwoApex,
                  "G-{" + std::to_string(u) + "," + std::to_string(w) +
                      "} is planar, so G lies in a planar graph joined with K2",
                  {}, {u, w}, h, std::nullopt, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<Step> Classifier::rule_seed_minor(const Graph& g) {
  for (const Seed& seed : seeds()) {
    if (auto w = engine_.find_minor_witness(g, seed.graph)) {
      return Step{Rule::SeedMinor, "has a " + seed.name + " minor", {seed.axiom_line}, {}, g,
                  seed.graph, *w};
    }
  }
  return std::nullopt;
}

std::optional<Step> Classifier::rule_minor_of_unknotted(const Graph& g) {
  struct Candidate {
    const KbEntry* entry;
    Graph graph;
    std::string note;
  };
  std::vector<Candidate> candidates;
  for (const KbEntry* e : kb_.with_status(Status::NotKnotted)) {
    for (Graph& x : e->instances(g.order())) {
      std::string note = e->symbolic() ? "n=" + std::to_string(g.order()) : "";
      candidates.push_back({e, std::move(x), std::move(note)});
    }
  }
  // Subgraph containment first: cheap, and enough for nearly every table graph.
  for (const Candidate& c : candidates) {
    if (c.graph.order() < g.order() || c.graph.size() < g.size()) continue;
    std::uint64_t budget = kSubgraphPassNodes;
    const EmbedResult r = find_subgraph_embedding(c.graph, g, budget);
    if (r.status == EmbedStatus::Found) {
      std::string where = c.entry->label() + (c.note.empty() ? "" : " at " + c.note);
      return Step{Rule::MinorOfUnknotted, "is a subgraph of " + where, {c.entry->line}, {},
                  c.graph, g, identity_witness(g, r.image)};
    }
  }
  for (const Candidate& c : candidates) {
    if (auto w = engine_.find_minor_witness(c.graph, g)) {
      std::string where = c.entry->label() + (c.note.empty() ? "" : " at " + c.note);
      return Step{Rule::MinorOfUnknotted, "is a minor of " + where, {c.entry->line}, {}, c.graph,
                  g, *w};
    }
  }
  // A symbolic family may need a larger part than |V(G)|.
  const int wide = g.order() + g.size();
  for (const KbEntry* e : kb_.with_status(Status::NotKnotted)) {
    if (!e->symbolic()) continue;
    for (const Graph& x : e->instances(wide)) {
      if (x.order() > kMaxOrder) continue;
      if (auto w = engine_.find_minor_witness(x, g)) {
        return Step{Rule::MinorOfUnknotted,
                    "is a minor of " + e->label() + " at n=" + std::to_string(wide),
                    {e->line}, {}, x, g, *w};
      }
    }
  }
  return std::nullopt;
}

Verdict Classifier::decide_knotting(const Graph& g) {
  check_order(g);
  Verdict v;
  auto positive = [&](Step s) {
    v.value = Value::Positive;
    v.steps.push_back(std::move(s));
    return v;
  };
  auto negative = [&](Step s) {
    v.value = Value::Negative;
    v.steps.push_back(std::move(s));
    return v;
  };
  v.attempted.emplace_back(rule_name(Rule::KbIdentity));
  if (auto s = rule_kb_identity(g)) return negative(std::move(*s));
  v.attempted.emplace_back(rule_name(Rule::EdgeBound));
  if (auto s = rule_edge_bound(g)) return positive(std::move(*s));
  v.attempted.emplace_back("join");
  if (auto j = join_apex_rule(g, Mode::Knotting)) {
    j->attempted = v.attempted;
    return *j;
  }
  v.attempted.emplace_back(rule_name(Rule::TwoApex));
  if (auto s = rule_two_apex(g)) return negative(std::move(*s));
  v.attempted.emplace_back(rule_name(Rule::SeedMinor));
  if (auto s = rule_seed_minor(g)) return positive(std::move(*s));
  v.attempted.emplace_back(rule_name(Rule::MinorOfUnknotted));
  if (auto s = rule_minor_of_unknotted(g)) return negative(std::move(*s));
  return v;
}

std::vector<AxiomCheck> confirm_linking_axioms(Classifier& classifier, int n_max) {
  std::vector<AxiomCheck> out;
  for (const KbEntry& e : classifier.kb().entries()) {
    if (e.status != Status::Linked && e.status != Status::NotLinked) continue;
    const Value want = e.status == Status::Linked ? Value::Positive : Value::Negative;
    const int lo = e.symbolic() ? 1 : 0;
    const int hi = e.symbolic() ? n_max : 0;
    for (int n = lo; n <= hi; ++n) {
      for (const Graph& g : e.instances(n)) {
        Verdict v = classifier.decide_linking(g);
        const bool agrees = v.value == want;
        out.push_back({&e, g, std::move(v), agrees});
      }
    }
  }
  return out;
}

std::map<CanonicalForm, Verdict> propagate_census(const std::vector<Graph>& graphs,
                                                  Classifier& classifier) {
  std::vector<std::pair<CanonicalForm, Graph>> work;
  for (const Graph& g : graphs) {
    const CanonicalLabeling l = canonical_labeling(g);
    work.emplace_back(l.form, l.form.graph());
  }
  std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
    return a.first < b.first;
  });
  std::map<CanonicalForm, Verdict> out;
  for (const auto& [key, g] : work) {
    if (out.count(key)) continue;
    Verdict v;
    std::optional<Step> pos;
    v.attempted.emplace_back(rule_name(Rule::EdgeBound));
    pos = classifier.rule_edge_bound(g);
    if (!pos) {
      v.attempted.emplace_back("join");
      if (auto j = classifier.join_apex_rule(g, Mode::Knotting); j && j->value == Value::Positive) {
        pos = j->steps.front();
      }
    }
    if (!pos) {
      v.attempted.emplace_back(rule_name(Rule::SeedMinor));
      pos = classifier.rule_seed_minor(g);
    }

    std::optional<Step> neg;
    v.attempted.emplace_back(rule_name(Rule::UnknottedParent));
    for (int a = 0; a < g.order() && !neg; ++a) {
      for (int b = a + 1; b < g.order() && !neg; ++b) {
        if (g.has_edge(a, b)) continue;
        Graph parent = g;
        parent.add_edge(a, b);
        auto it = out.find(canonical_form(parent));
        if (it == out.end() || it->second.value != Value::Negative) continue;
        Step s{Rule::UnknottedParent,
               "adding edge " + std::to_string(a) + "-" + std::to_string(b) +
                   " gives a NOT_KNOTTED graph",
               it->second.axioms(), {}, parent, g, std::nullopt};
        std::array<int, kMaxOrder> same{};
        for (int i = 0; i < kMaxOrder; ++i) same[i] = i;
        s.witness = identity_witness(g, same);
        neg = std::move(s);
      }
    }
    if (!neg) {
      v.attempted.emplace_back(rule_name(Rule::KbIdentity));
      neg = classifier.rule_kb_identity(g);
    }
    if (!neg) {
      v.attempted.emplace_back(rule_name(Rule::TwoApex));
      neg = classifier.rule_two_apex(g);
    }
    if (!neg) {
      v.attempted.emplace_back(rule_name(Rule::MinorOfUnknotted));
      neg = classifier.rule_minor_of_unknotted(g);
    }
    if (pos && neg) {
      throw PropagationConflict("graph " + to_graph6(g) + " is both knotted (" + pos->summary +
                                ") and not knotted (" + neg->summary + ")");
    }
    if (pos) {
      v.value = Value::Positive;
      v.steps.push_back(std::move(*pos));
    } else if (neg) {
      v.value = Value::Negative;
      v.steps.push_back(std::move(*neg));
    }
    out.emplace(key, std::move(v));
  }
  return out;
}

}  // namespace knotlink
