#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "knotlink/graph.hpp"

namespace knotlink {

/// Adjacency rows of the canonically relabeled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::uint8_t n = 0;
  std::array<std::uint16_t, kMaxOrder> rows{};

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  std::string bytes() const;
  Graph graph() const;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& key) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// Vertex v of the input becomes vertex label[v] of the canonical graph.
  std::array<int, kMaxOrder> label{};
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The canonical representative of the isomorphism class of `g`.
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

/// One graph per isomorphism class on `n` vertices with at least `min_edges` edges,
/// each in canonical labeling. Ordered by edge count descending, then by key.
std::vector<Graph> enumerate_graphs(int n, int min_edges);

}  // namespace knotlink
