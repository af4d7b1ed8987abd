#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knotlink/canonical.hpp"
#include "knotlink/graph.hpp"

namespace knotlink {

struct MoveSet {
  bool delta_y = false;
  bool y_delta = false;
};

/// Replace triangle xyz by a new vertex (index n) joined to x, y and z.
Graph delta_y(const Graph& g, int x, int y, int z);
/// Delete the degree-3 vertex v and pairwise join its neighbors (existing edges stay single).
Graph y_delta(const Graph& g, int v);

enum class Move { DeltaY, YDelta };
std::string_view move_name(Move move);

struct GenerationEdge {
  int parent;  ///< member index
  int child;
  Move move;
  friend bool operator==(const GenerationEdge&, const GenerationEdge&) = default;
};

struct FamilyClosure {
  std::vector<std::string> seed_names;
  MoveSet moves;
  /// Canonical representatives, ordered by vertex count, then canonical key.
  std::vector<Graph> members;
  std::vector<CanonicalForm> keys;
  /// Every distinct (parent, child, move) observed, sorted.
  std::vector<GenerationEdge> edges;
  /// First-discovery parent of each member, -1 for seeds.
  std::vector<int> tree_parent;

  /// Member index of a graph isomorphic to g, or -1.
  int find(const Graph& g) const;
};

FamilyClosure compute_closure(std::span<const Graph> seeds, std::span<const std::string> seed_names,
                              MoveSet moves);

Graph petersen_graph();
/// The seven graphs of the ΔY/YΔ family of K6, in closure member order.
const std::vector<Graph>& petersen_family();

/// Nine-vertex graphs reachable from K7 by two ΔY moves, with the minor facts used
/// to single out H9.
struct H9Candidate {
  Graph graph;
  bool disjoint_triangles;  ///< the two moves used vertex-disjoint triangles
  bool minor_of_k333_minus_e;
  bool minor_of_k441_minus_e;
};
const std::vector<H9Candidate>& h9_candidates();

Graph h8();
Graph h9();

/// Names: "K<n>", "K<a,b,...>" (complete partite), "H8", "H9", "petersen".
Graph named_graph(std::string_view name);
/// Name of a well-known graph isomorphic to g, or empty.
std::string known_name(const Graph& g);

}  // namespace knotlink
