#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotlink {

inline constexpr int kMaxOrder = 16;

using VertexMask = std::uint32_t;
using Edge = std::pair<int, int>;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
constexpr VertexMask low_mask(int n) { return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

/// Simple undirected graph on at most 16 vertices, stored as one bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph complete(int n);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;
  VertexMask vertices() const noexcept { return low_mask(n_); }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  int min_degree() const;
  bool has_edge(int u, int v) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  bool is_connected() const;
  /// Connected components as vertex masks, ordered by lowest vertex.
  std::vector<VertexMask> components() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::array<VertexMask, kMaxOrder> adj_{};
};

Graph contract_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);
/// Vertex v of `g` becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);
/// Subgraph induced on `keep`; vertices are renumbered in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask keep);

/// Parts occupy consecutive vertex ranges in the given order.
Graph complete_multipartite(std::span<const int> parts);
Graph cycle_graph(int n);
Graph path_graph(int n);

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);
/// Single-line form used inside knowledge-base records: lines joined by ';'.
std::string serialize_graph_inline(const Graph& g);
Graph parse_graph_inline(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace knotlink
