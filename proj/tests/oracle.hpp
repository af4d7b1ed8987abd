#pragma once

// Brute-force references for small graphs. Nothing here calls the library's
// canonical forms or minor search.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "knotlink/graph.hpp"

namespace oracle {

struct Small {
  int n = 0;
  std::vector<std::vector<char>> a;

  explicit Small(int order) : n(order), a(order, std::vector<char>(order, 0)) {}
  void link(int u, int v) { a[u][v] = a[v][u] = 1; }
};

inline Small from(const knotlink::Graph& g) {
  Small s(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) s.link(u, v);
    }
  }
  return s;
}

using Key = std::pair<int, std::uint64_t>;

// Smallest upper-triangle bit string over all vertex orders.
inline Key key(const Small& g) {
  std::vector<int> p(g.n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t bits = 0;
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) bits = (bits << 1) | static_cast<std::uint64_t>(g.a[p[i]][p[j]]);
    }
    best = std::min(best, bits);
  } while (std::next_permutation(p.begin(), p.end()));
  return {g.n, best};
}

inline Key key(const knotlink::Graph& g) { return key(from(g)); }

inline Small remove_vertex(const Small& g, int v) {
  Small out(g.n - 1);
  for (int i = 0, x = 0; i < g.n; ++i) {
    if (i == v) continue;
    for (int j = 0, y = 0; j < g.n; ++j) {
      if (j == v) continue;
      out.a[x][y] = g.a[i][j];
      ++y;
    }
    ++x;
  }
  return out;
}

inline Small contract(const Small& g, int u, int v) {
  Small merged = g;
  for (int w = 0; w < g.n; ++w) {
    if (w != u && w != v && g.a[v][w]) merged.link(u, w);
  }
  return remove_vertex(merged, v);
}

// Every minor of g, by key, with memoization across calls.
inline const std::set<Key>& minors(const Small& g) {
  static std::map<Key, std::set<Key>> memo;
  const Key k = key(g);
  if (auto it = memo.find(k); it != memo.end()) return it->second;
  std::set<Key> out{k};
  auto absorb = [&](const Small& h) {
    const auto& sub = minors(h);
    out.insert(sub.begin(), sub.end());
  };
  for (int v = 0; v < g.n; ++v) {
    if (g.n > 1) absorb(remove_vertex(g, v));
  }
  for (int u = 0; u < g.n; ++u) {
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.a[u][v]) continue;
      Small d = g;
      d.a[u][v] = d.a[v][u] = 0;
      absorb(d);
      absorb(contract(g, u, v));
    }
  }
  return memo.emplace(k, std::move(out)).first->second;
}

inline bool has_minor(const knotlink::Graph& host, const knotlink::Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  return minors(from(host)).count(key(pattern)) > 0;
}

inline knotlink::Graph k5() {
  knotlink::Graph g(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
  }
  return g;
}

inline knotlink::Graph k33() {
  knotlink::Graph g(6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 6; ++v) g.add_edge(u, v);
  }
  return g;
}

// Wagner: planar iff neither K5 nor K3,3 is a minor.
inline bool nonplanar(const knotlink::Graph& g) {
  return oracle::has_minor(g, oracle::k5()) || oracle::has_minor(g, oracle::k33());
}

// All graphs on n vertices, one per class, by brute force (n <= 6).
inline std::vector<knotlink::Graph> all_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<Key> seen;
  std::vector<knotlink::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    knotlink::Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if (mask & (1u << bit)) g.add_edge(u, v);
      }
    }
    if (seen.insert(key(g)).second) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
