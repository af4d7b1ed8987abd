#include "knotlink/family.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "knotlink/errors.hpp"
#include "knotlink/minor.hpp"

namespace knotlink {

Graph delta_y(const Graph& g, int x, int y, int z) {
  if (!g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z)) {
    throw PreconditionError("vertices " + std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + " do not form a triangle");
  }
  if (g.order() >= kMaxOrder) {
    throw CapacityError("triangle-Y move would exceed " + std::to_string(kMaxOrder) + " vertices");
  }
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  out.remove_edge(x, y);
  out.remove_edge(y, z);
  out.remove_edge(x, z);
  const int w = g.order();
  out.add_edge(w, x);
  out.add_edge(w, y);
  out.add_edge(w, z);
  return out;
}

Graph y_delta(const Graph& g, int v) {
  if (v < 0 || v >= g.order() || g.degree(v) != 3) {
    throw PreconditionError("Y-triangle move needs a degree-3 vertex, got " + std::to_string(v));
  }
  Graph joined = g;
  const VertexMask nb = g.neighbors(v);
  const int a = lowest(nb);
  const int b = lowest(nb & ~bit(a));
  const int c = lowest(nb & ~bit(a) & ~bit(b));
  joined.add_edge(a, b);
  joined.add_edge(b, c);
  joined.add_edge(a, c);
  return delete_vertex(joined, v);
}

std::string_view move_name(Move move) { return move == Move::DeltaY ? "dy" : "yd"; }

int FamilyClosure::find(const Graph& g) const {
  const CanonicalForm key = canonical_form(g);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i] == key) return static_cast<int>(i);
  }
  return -1;
}

namespace {

template <typename Visit>
void for_each_move(const Graph& g, MoveSet moves, Visit&& visit) {
  if (moves.delta_y) {
    for (auto [x, y] : g.edges()) {
      for (VertexMask m = g.neighbors(x) & g.neighbors(y) & ~low_mask(y + 1); m; m &= m - 1) {
        const int z = lowest(m);
        visit([&] { return delta_y(g, x, y, z); }, Move::DeltaY, "triangle " + std::to_string(x) +
                                                                     "," + std::to_string(y) + "," +
                                                                     std::to_string(z));
      }
    }
  }
  if (moves.y_delta) {
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 3) {
        visit([&] { return y_delta(g, v); }, Move::YDelta, "vertex " + std::to_string(v));
      }
    }
  }
}

}  // namespace

FamilyClosure compute_closure(std::span<const Graph> seeds, std::span<const std::string> seed_names,
                              MoveSet moves) {
  if (!moves.delta_y && !moves.y_delta) throw PreconditionError("move set is empty");
  std::map<CanonicalForm, int> index;  // key -> discovery index
  std::vector<CanonicalForm> found;
  std::vector<int> parent;
  std::set<std::tuple<int, int, int>> edges;
  std::set<CanonicalForm> pending;

  auto admit = [&](const CanonicalForm& key, int from) {
    auto [it, fresh] = index.emplace(key, static_cast<int>(found.size()));
    if (fresh) {
      found.push_back(key);
      parent.push_back(from);
      pending.insert(key);
    }
    return it->second;
  };
  for (const Graph& seed : seeds) admit(canonical_form(seed), -1);

  while (!pending.empty()) {
    const CanonicalForm key = *pending.begin();
    pending.erase(pending.begin());
    const int from = index.at(key);
    const Graph g = key.graph();
    for_each_move(g, moves, [&](auto make, Move move, const std::string& where) {
      Graph child;
      try {
        child = make();
      } catch (const CapacityError&) {
        throw CapacityError("closure expansion of member " + to_graph6(g) + " at " + where +
                            " exceeds " + std::to_string(kMaxOrder) + " vertices");
      }
      const int to = admit(canonical_form(child), from);
      edges.emplace(from, to, static_cast<int>(move));
    });
  }

  // Renumber members by (order, key).
  std::vector<int> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (found[a].n != found[b].n) return found[a].n < found[b].n;
    return found[a] < found[b];
  });
  std::vector<int> rank(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);

  FamilyClosure out;
  out.seed_names.assign(seed_names.begin(), seed_names.end());
  out.moves = moves;
  for (int old : order) {
    out.keys.push_back(found[old]);
    out.members.push_back(found[old].graph());
    out.tree_parent.push_back(parent[old] < 0 ? -1 : rank[parent[old]]);
  }
  for (auto [a, b, m] : edges) out.edges.push_back({rank[a], rank[b], static_cast<Move>(m)});
  std::sort(out.edges.begin(), out.edges.end(), [](const GenerationEdge& x, const GenerationEdge& y) {
    return std::tie(x.parent, x.child, x.move) < std::tie(y.parent, y.child, y.move);
  });
  return out;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

const std::vector<Graph>& petersen_family() {
  static const std::vector<Graph> members = [] {
    const Graph seeds[] = {Graph::complete(6)};
    const std::string names[] = {"K6"};
    return compute_closure(seeds, names, {true, true}).members;
  }();
  return members;
}

const std::vector<H9Candidate>& h9_candidates() {
  static const std::vector<H9Candidate> candidates = [] {
    const Graph k7 = Graph::complete(7);
    const Graph h = delta_y(k7, 0, 1, 2);
    // Second triangle either avoids {0,1,2} or meets it in one vertex.
    const Graph disjoint = delta_y(h, 3, 4, 5);
    const Graph shared = delta_y(h, 0, 3, 4);
    const int k333[] = {3, 3, 3};
    const int k441[] = {4, 4, 1};
    const Graph a = complete_multipartite(k333);
    const Graph b = complete_multipartite(k441);
    // K3,3,3 - e has one class; K4,4,1 - e has an A-B and an A-C class.
    const std::vector<Graph> k333e = {delete_edge(a, 0, 3)};
    const std::vector<Graph> k441e = {delete_edge(b, 0, 4), delete_edge(b, 0, 8)};
    std::vector<H9Candidate> out;
    for (const auto& [g, apart] : {std::pair{disjoint, true}, std::pair{shared, false}}) {
      if (!out.empty() && is_isomorphic(out.front().graph, g)) continue;
      H9Candidate c{g, apart, true, true};
      for (const Graph& host : k333e) c.minor_of_k333_minus_e &= has_minor(host, g);
      for (const Graph& host : k441e) c.minor_of_k441_minus_e &= has_minor(host, g);
      out.push_back(c);
    }
    return out;
  }();
  return candidates;
}

Graph h8() { return delta_y(Graph::complete(7), 0, 1, 2); }

Graph h9() {
  static const Graph chosen = [] {
    const H9Candidate* pick = nullptr;
    for (const auto& c : h9_candidates()) {
      if (c.minor_of_k333_minus_e && c.minor_of_k441_minus_e) {
        if (pick) throw std::logic_error("more than one nine-vertex candidate fits H9");
        pick = &c;
      }
    }
    if (!pick) throw std::logic_error("no nine-vertex candidate fits H9");
    return pick->graph;
  }();
  return chosen;
}

Graph named_graph(std::string_view name) {
  if (name == "H8") return h8();
  if (name == "H9") return h9();
  if (name == "petersen") return petersen_graph();
  if (name.size() >= 2 && name.front() == 'K') {
    std::vector<int> parts;
    int value = 0;
    bool digits = false;
    for (char ch : name.substr(1)) {
      if (ch >= '0' && ch <= '9') {
        value = value * 10 + (ch - '0');
        digits = true;
        if (value > kMaxOrder) throw CapacityError("named graph too large: " + std::string(name));
      } else if (ch == ',' && digits) {
        parts.push_back(value);
        value = 0;
        digits = false;
      } else {
        throw PreconditionError("unknown graph name: " + std::string(name));
      }
    }
    if (!digits) throw PreconditionError("unknown graph name: " + std::string(name));
    parts.push_back(value);
    if (parts.size() == 1) return Graph::complete(parts.front());
    return complete_multipartite(parts);
  }
  throw PreconditionError("unknown graph name: " + std::string(name));
}

std::string known_name(const Graph& g) {
  static const std::vector<std::pair<std::string, Graph>> names = [] {
    std::vector<std::pair<std::string, Graph>> out;
    for (const char* n : {"K6", "K3,3,1", "petersen", "K7", "H8", "H9", "K3,3,1,1"}) {
      out.emplace_back(n, named_graph(n));
    }
    out.emplace_back("K4,4-e", delete_edge(named_graph("K4,4"), 0, 4));
    out.emplace_back("K5,5-e", delete_edge(named_graph("K5,5"), 0, 5));
    return out;
  }();
  for (const auto& [name, h] : names) {
    if (h.order() == g.order() && h.size() == g.size() && is_isomorphic(g, h)) return name;
  }
  return {};
}

}  // namespace knotlink
