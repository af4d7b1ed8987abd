#include "knotlink/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "knotlink/errors.hpp"

namespace knotlink {

std::string CanonicalForm::bytes() const {
  std::string out;
  out.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(static_cast<char>(rows[i] >> 8));
    out.push_back(static_cast<char>(rows[i] & 0xff));
  }
  return out;
}

Graph CanonicalForm::graph() const {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rows[i] & (1u << j)) g.add_edge(i, j);
    }
  }
  return g;
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& key) const noexcept {
  std::size_t h = key.n;
  for (int i = 0; i < key.n; ++i) h = h * 1000003u ^ key.rows[i];
  return h;
}

namespace {

using Perm = std::array<int, kMaxOrder>;

struct Partition {
  std::array<VertexMask, kMaxOrder> cells{};
  int count = 0;
};

using Signature = std::array<std::uint8_t, kMaxOrder>;

// Split every cell by neighbor counts into the cells of the previous round until stable.
void refine(const Graph& g, Partition& p) {
  for (;;) {
    Partition next;
    bool split = false;
    for (int c = 0; c < p.count; ++c) {
      const VertexMask cell = p.cells[c];
      if (popcount(cell) == 1) {
        next.cells[next.count++] = cell;
        continue;
      }
      std::array<std::pair<Signature, int>, kMaxOrder> sigs;
      int k = 0;
      for (VertexMask m = cell; m; m &= m - 1) {
        const int v = lowest(m);
        Signature s{};
        for (int d = 0; d < p.count; ++d) {
          s[d] = static_cast<std::uint8_t>(popcount(g.neighbors(v) & p.cells[d]));
        }
        sigs[k++] = {s, v};
      }
      std::sort(sigs.begin(), sigs.begin() + k);
      VertexMask group = bit(sigs[0].second);
      for (int i = 1; i < k; ++i) {
        if (sigs[i].first != sigs[i - 1].first) {
          next.cells[next.count++] = group;
          group = 0;
          split = true;
        }
        group |= bit(sigs[i].second);
      }
      next.cells[next.count++] = group;
    }
    p = next;
    if (!split) return;
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {
    // Twins give automorphisms for free; these dominate complete partite inputs.
    VertexMask seen = 0;
    for (int u = 0; u < n_; ++u) {
      if (seen & bit(u)) continue;
      int prev = u;
      for (int v = u + 1; v < n_; ++v) {
        if (seen & bit(v)) continue;
        if ((g_.neighbors(u) & ~bit(v)) == (g_.neighbors(v) & ~bit(u))) {
          seen |= bit(v);
          Perm swap;
          std::iota(swap.begin(), swap.end(), 0);
          std::swap(swap[prev], swap[v]);
          generators_.push_back(swap);
          prev = v;
        }
      }
    }
  }

  CanonicalLabeling run() {
    Partition root;
    if (n_ > 0) root.cells[root.count++] = g_.vertices();
    int prefix[kMaxOrder];
    search(root, prefix, 0);
    CanonicalLabeling out;
    out.form.n = static_cast<std::uint8_t>(n_);
    out.form.rows = best_key_;
    for (int i = 0; i < n_; ++i) out.label[best_order_[i]] = i;
    return out;
  }

 private:
  using Key = std::array<std::uint16_t, kMaxOrder>;

  void search(Partition p, int* prefix, int depth) {
    refine(g_, p);
    if (p.count == n_) {
      leaf(p);
      return;
    }
    int target = 0;
    while (popcount(p.cells[target]) == 1) ++target;
    const VertexMask cell = p.cells[target];
    VertexMask explored = 0;
    for (VertexMask m = cell; m; m &= m - 1) {
      const int v = lowest(m);
      if (explored && same_orbit(v, explored, prefix, depth)) continue;
      explored |= bit(v);
      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.cells[child.count++] = bit(v);
          child.cells[child.count++] = cell & ~bit(v);
        } else {
          child.cells[child.count++] = p.cells[c];
        }
      }
      prefix[depth] = v;
      search(child, prefix, depth + 1);
    }
  }

  bool same_orbit(int v, VertexMask explored, const int* prefix, int depth) const {
    std::array<int, kMaxOrder> parent;
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gen : generators_) {
      bool fixes = true;
      for (int i = 0; i < depth && fixes; ++i) fixes = gen[prefix[i]] == prefix[i];
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x);
        const int b = find(gen[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    const int root = find(v);
    for (VertexMask m = explored; m; m &= m - 1) {
      if (find(lowest(m)) == root) return true;
    }
    return false;
  }

  void leaf(const Partition& p) {
    Perm order{};
    Perm position{};
    for (int i = 0; i < n_; ++i) {
      order[i] = lowest(p.cells[i]);
      position[order[i]] = i;
    }
    Key key{};
    for (int i = 0; i < n_; ++i) {
      std::uint16_t row = 0;
      for (VertexMask m = g_.neighbors(order[i]); m; m &= m - 1) {
        row |= static_cast<std::uint16_t>(1u << position[lowest(m)]);
      }
      key[i] = row;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_key_ = best_key_ = key;
      first_order_ = best_order_ = order;
      return;
    }
    if (key == first_key_) {
      record_automorphism(order, first_order_);
    } else if (key == best_key_) {
      record_automorphism(order, best_order_);
    } else if (key > best_key_) {
      best_key_ = key;
      best_order_ = order;
    }
  }

  void record_automorphism(const Perm& from, const Perm& to) {
    Perm gen;
    std::iota(gen.begin(), gen.end(), 0);
    for (int i = 0; i < n_; ++i) gen[from[i]] = to[i];
    generators_.push_back(gen);
  }

  const Graph& g_;
  int n_;
  std::vector<Perm> generators_;
  bool have_leaf_ = false;
  Key first_key_{}, best_key_{};
  Perm first_order_{}, best_order_{};
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return Canonizer(g).run(); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g) { return canonical_form(g).graph(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && canonical_form(g) == canonical_form(h);
}

std::vector<Graph> enumerate_graphs(int n, int min_edges) {
  if (n < 1 || n > 9) {
    throw CapacityError("graph enumeration supports 1..9 vertices, got " + std::to_string(n));
  }
  const int max_edges = n * (n - 1) / 2;
  min_edges = std::max(min_edges, 0);
  std::vector<Graph> out;
  std::set<CanonicalForm> level{canonical_form(Graph::complete(n))};
  for (int m = max_edges; m >= min_edges; --m) {
    for (const CanonicalForm& key : level) out.push_back(key.graph());
    if (m == min_edges) break;
    std::set<CanonicalForm> next;
    for (const CanonicalForm& key : level) {
      const Graph g = key.graph();
      for (auto [u, v] : g.edges()) next.insert(canonical_form(delete_edge(g, u, v)));
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace knotlink
