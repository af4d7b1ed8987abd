#include "knotlink/minor.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "knotlink/embedding.hpp"
#include "knotlink/errors.hpp"

namespace knotlink {

namespace {

constexpr std::uint64_t kSubgraphShortcutNodes = 20000;

void spend(std::uint64_t& budget) {
  if (budget == 0) throw SearchLimitError("minor search exceeded its node limit");
  --budget;
}

// Host after deleting vertices of degree <= 1 (pattern min degree >= 2) and
// suppressing degree-2 vertices (pattern min degree >= 3). Neither step changes
// whether the pattern is a minor. reps[x] lists the original vertices merged into x.
struct ReducedHost {
  Graph graph;
  std::vector<VertexMask> reps;
};

ReducedHost reduce_host(const Graph& host, int pattern_min_degree) {
  const int n = host.order();
  std::array<VertexMask, kMaxOrder> adj{};
  std::array<VertexMask, kMaxOrder> reps{};
  for (int v = 0; v < n; ++v) {
    adj[v] = host.neighbors(v);
    reps[v] = bit(v);
  }
  VertexMask alive = host.vertices();
  bool changed = pattern_min_degree >= 2;
  while (changed) {
    changed = false;
    for (VertexMask m = alive; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = popcount(adj[v]);
      if (d <= 1) {
        alive &= ~bit(v);
        for (VertexMask nb = adj[v]; nb; nb &= nb - 1) adj[lowest(nb)] &= ~bit(v);
        adj[v] = 0;
        changed = true;
      } else if (d == 2 && pattern_min_degree >= 3) {
        const int a = lowest(adj[v]);
        const int b = lowest(adj[v] & ~bit(a));
        alive &= ~bit(v);
        adj[a] = (adj[a] & ~bit(v)) | bit(b);
        adj[b] = (adj[b] & ~bit(v)) | bit(a);
        adj[v] = 0;
        reps[a] |= reps[v];
        changed = true;
      }
    }
  }
  std::array<int, kMaxOrder> index{};
  ReducedHost out;
  int k = 0;
  for (VertexMask m = alive; m; m &= m - 1) {
    index[lowest(m)] = k++;
    out.reps.push_back(reps[lowest(m)]);
  }
  out.graph = Graph(k);
  for (VertexMask m = alive; m; m &= m - 1) {
    const int u = lowest(m);
    for (VertexMask nb = adj[u] & alive & ~low_mask(u + 1); nb; nb &= nb - 1) {
      out.graph.add_edge(index[u], index[lowest(nb)]);
    }
  }
  return out;
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

// Enumerates partitions of the host into connected blocks, one per pattern vertex,
// and tests each quotient for a spanning copy of the pattern. In cover mode every
// host vertex must be used (valid for a connected pattern in a connected host);
// otherwise vertices may be left out.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& host, const Graph& pattern, bool cover, std::uint64_t& budget)
      : g_(host),
        pattern_(pattern),
        cover_(cover),
        budget_(budget),
        p_(pattern.order()),
        q_(pattern.size()),
        pattern_degrees_(sorted_degrees(pattern)) {
    for (int v = 0; v < g_.order(); ++v) {
      twins_[v] = bit(v);
      for (int w = 0; w < g_.order(); ++w) {
        if (w != v && (g_.neighbors(v) & ~bit(w)) == (g_.neighbors(w) & ~bit(v))) {
          twins_[v] |= bit(w);
        }
      }
    }
  }

  bool run() { return place(0, g_.vertices()); }

  /// Block of host vertices assigned to pattern vertex x.
  VertexMask branch(int x) const { return blocks_[image_[x]]; }

 private:
  bool place(int k, VertexMask free) {
    spend(budget_);
    if (k == p_) return (!cover_ || free == 0) && check_quotient();
    if (popcount(free) < p_ - k) return false;
    if (!feasible(k, free)) return false;
    if (cover_) {
      int parts = 0;
      VertexMask left = free;
      while (left) {
        left &= ~component_of(lowest(left), free);
        if (++parts > p_ - k) return false;
      }
      if (k == p_ - 1) return parts == 1 && add_block(k, free, free);
    }
    const int v = lowest(free);
    if (grow(k, free, bit(v), g_.neighbors(v) & free, 0)) return true;
    if (!cover_) return place(k, free & ~(twins_[v] & free));
    return false;
  }

  // Connected sets S containing the lowest free vertex, each produced once:
  // `ext` holds the free neighbors of S not yet excluded by `banned`.
  bool grow(int k, VertexMask free, VertexMask s, VertexMask ext, VertexMask banned) {
    if (add_block(k, free, s)) return true;
    if (popcount(s) >= popcount(free) - (p_ - k - 1)) return false;
    VertexMask done = 0;
    for (VertexMask m = ext; m; m &= m - 1) {
      const int w = lowest(m);
      done |= bit(w);
      // Twins enter blocks lowest first; a skipped lower twin is already banned here.
      if (twins_[w] & low_mask(w) & free & ~s) continue;
      const VertexMask s2 = s | bit(w);
      const VertexMask banned2 = banned | done;
      const VertexMask ext2 = (ext & ~done) | (g_.neighbors(w) & free & ~s2 & ~banned2 & ~ext);
      if (grow(k, free, s2, ext2, banned2)) return true;
    }
    return false;
  }

  bool add_block(int k, VertexMask free, VertexMask s) {
    blocks_[k] = s;
    VertexMask nb = 0;
    for (VertexMask m = s; m; m &= m - 1) nb |= g_.neighbors(lowest(m));
    reach_[k] = nb & ~s;
    return place(k + 1, free & ~s);
  }

  VertexMask component_of(int v, VertexMask within) const {
    VertexMask comp = bit(v);
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= g_.neighbors(lowest(f));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  // Upper bounds on final quotient degrees and edge count.
  bool feasible(int k, VertexMask free) const {
    const int fresh = p_ - k;
    std::array<int, kMaxOrder> bound{};
    int twice_inner = 0;
    int edges = fresh * (fresh - 1) / 2;
    for (int i = 0; i < k; ++i) {
      int adjacent = 0;
      for (int j = 0; j < k; ++j) {
        if (j != i && (reach_[i] & blocks_[j])) ++adjacent;
      }
      const int outward = std::min(popcount(reach_[i] & free), fresh);
      bound[i] = adjacent + outward;
      twice_inner += adjacent;
      edges += outward;
    }
    if (edges + twice_inner / 2 < q_) return false;
    for (int i = k; i < p_; ++i) bound[i] = p_ - 1;
    std::sort(bound.begin(), bound.begin() + p_, std::greater<>());
    for (int i = 0; i < p_; ++i) {
      if (bound[i] < pattern_degrees_[i]) return false;
    }
    return true;
  }

  bool check_quotient() {
    Graph quotient(p_);
    for (int i = 0; i < p_; ++i) {
      for (int j = i + 1; j < p_; ++j) {
        if (reach_[i] & blocks_[j]) quotient.add_edge(i, j);
      }
    }
    if (quotient.size() < q_) return false;
    const auto degrees = sorted_degrees(quotient);
    for (int i = 0; i < p_; ++i) {
      if (degrees[i] < pattern_degrees_[i]) return false;
    }
    const EmbedResult r = find_subgraph_embedding(quotient, pattern_, budget_);
    if (r.status == EmbedStatus::Aborted) {
      throw SearchLimitError("minor search exceeded its node limit");
    }
    if (r.status != EmbedStatus::Found) return false;
    image_ = r.image;
    return true;
  }

  const Graph& g_;
  const Graph& pattern_;
  bool cover_;
  std::uint64_t& budget_;
  int p_;
  int q_;
  std::vector<int> pattern_degrees_;
  std::array<VertexMask, kMaxOrder> twins_{};
  std::array<VertexMask, kMaxOrder> blocks_{};
  std::array<VertexMask, kMaxOrder> reach_{};
  std::array<int, kMaxOrder> image_{};
};

MinorWitness witness_from_branches(const Graph& host, const Graph& pattern,
                                   const std::vector<VertexMask>& branches) {
  MinorWitness w;
  for (VertexMask b : branches) {
    std::vector<int> set;
    for (VertexMask m = b; m; m &= m - 1) set.push_back(lowest(m));
    w.branch_sets.push_back(std::move(set));
  }
  for (auto [x, y] : pattern.edges()) {
    bool placed = false;
    for (VertexMask m = branches[x]; m && !placed; m &= m - 1) {
      const int a = lowest(m);
      const VertexMask across = host.neighbors(a) & branches[y];
      if (across) {
        w.realized_edges.push_back({{x, y}, {a, lowest(across)}});
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("minor model lost a pattern edge");
  }
  return w;
}

// Search on already canonical graphs; returns the branch sets of a model.
std::optional<std::vector<VertexMask>> search_model(const Graph& host, const Graph& pattern,
                                                    std::uint64_t& budget) {
  const int p = pattern.order();
  if (p == 0) return std::vector<VertexMask>{};
  if (p > host.order() || pattern.size() > host.size()) return std::nullopt;

  std::uint64_t shortcut = kSubgraphShortcutNodes;
  const EmbedResult direct = find_subgraph_embedding(host, pattern, shortcut);
  if (direct.status == EmbedStatus::Found) {
    std::vector<VertexMask> branches(p);
    for (int x = 0; x < p; ++x) branches[x] = bit(direct.image[x]);
    return branches;
  }

  const ReducedHost reduced = reduce_host(host, pattern.min_degree());
  const Graph& r = reduced.graph;
  if (p > r.order() || pattern.size() > r.size()) return std::nullopt;

  auto lift = [&](const PartitionSearch& search, const std::vector<int>& to_reduced) {
    std::vector<VertexMask> branches(p);
    for (int x = 0; x < p; ++x) {
      for (VertexMask m = search.branch(x); m; m &= m - 1) {
        branches[x] |= reduced.reps[to_reduced[lowest(m)]];
      }
    }
    return branches;
  };

  if (pattern.is_connected()) {
    for (VertexMask comp : r.components()) {
      if (popcount(comp) < p) continue;
      const Graph part = induced_subgraph(r, comp);
      if (part.size() < pattern.size()) continue;
      std::vector<int> to_reduced;
      for (VertexMask m = comp; m; m &= m - 1) to_reduced.push_back(lowest(m));
      PartitionSearch search(part, pattern, true, budget);
      if (search.run()) return lift(search, to_reduced);
    }
    return std::nullopt;
  }
  std::vector<int> identity(r.order());
  for (int v = 0; v < r.order(); ++v) identity[v] = v;
  PartitionSearch search(r, pattern, false, budget);
  if (search.run()) return lift(search, identity);
  return std::nullopt;
}

}  // namespace

std::uint64_t default_node_limit() {
  constexpr std::uint64_t kDefault = 100000000;
  const char* env = std::getenv("KNOTLINK_NODE_LIMIT");
  if (!env || !*env) return kDefault;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (*end != '\0' || value == 0) {
    throw ParseError(0, std::string("KNOTLINK_NODE_LIMIT must be a positive integer, got '") +
                            env + "'");
  }
  return value;
}

MinorEngine::MinorEngine(std::uint64_t node_limit) : node_limit_(node_limit) {}

const MinorEngine::Entry& MinorEngine::lookup(const CanonicalLabeling& host,
                                              const CanonicalLabeling& pattern) {
  const auto key = std::make_pair(host.form, pattern.form);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const Graph h = host.form.graph();
  const Graph p = pattern.form.graph();
  std::uint64_t budget = node_limit_;
  Entry entry;
  try {
    if (auto branches = search_model(h, p, budget)) {
      entry.found = true;
      entry.witness = witness_from_branches(h, p, *branches);
    }
  } catch (const SearchLimitError&) {
    nodes_spent_ += node_limit_ - budget;
    throw;
  }
  nodes_spent_ += node_limit_ - budget;
  return cache_.emplace(key, std::move(entry)).first->second;
}

bool MinorEngine::has_minor(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return false;
  return lookup(canonical_labeling(host), canonical_labeling(pattern)).found;
}

std::optional<MinorWitness> MinorEngine::find_minor_witness(const Graph& host,
                                                            const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  const CanonicalLabeling hl = canonical_labeling(host);
  const CanonicalLabeling pl = canonical_labeling(pattern);
  const Entry& entry = lookup(hl, pl);
  if (!entry.found) return std::nullopt;

  std::array<int, kMaxOrder> host_vertex{};
  for (int v = 0; v < host.order(); ++v) host_vertex[hl.label[v]] = v;
  MinorWitness out;
  for (int x = 0; x < pattern.order(); ++x) {
    std::vector<int> set;
    for (int c : entry.witness.branch_sets[pl.label[x]]) set.push_back(host_vertex[c]);
    std::sort(set.begin(), set.end());
    out.branch_sets.push_back(std::move(set));
  }
  for (auto [x, y] : pattern.edges()) {
    const int cx = pl.label[x];
    const int cy = pl.label[y];
    const Edge key{std::min(cx, cy), std::max(cx, cy)};
    for (const auto& r : entry.witness.realized_edges) {
      if (r.pattern != key) continue;
      const Edge h = cx < cy ? r.host : Edge{r.host.second, r.host.first};
      out.realized_edges.push_back({{x, y}, {host_vertex[h.first], host_vertex[h.second]}});
      break;
    }
  }
  return out;
}

MinorEngine& default_engine() {
  thread_local MinorEngine engine;
  return engine;
}

bool has_minor(const Graph& host, const Graph& pattern) {
  return default_engine().has_minor(host, pattern);
}

std::optional<MinorWitness> find_minor_witness(const Graph& host, const Graph& pattern) {
  return default_engine().find_minor_witness(host, pattern);
}

Graph k33() { return join(Graph(3), Graph(3)); }

bool is_planar(const Graph& g) {
  return !has_minor(g, Graph::complete(5)) && !has_minor(g, k33());
}

std::optional<PlanarityObstruction> planarity_obstruction(const Graph& g) {
  if (auto w = find_minor_witness(g, Graph::complete(5))) return PlanarityObstruction{"K5", *w};
  if (auto w = find_minor_witness(g, k33())) return PlanarityObstruction{"K3,3", *w};
  return std::nullopt;
}

}  // namespace knotlink
