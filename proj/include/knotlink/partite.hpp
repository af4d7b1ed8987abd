#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotlink/canonical.hpp"
#include "knotlink/graph.hpp"

namespace knotlink {

/// A vertex named by part (0 = a) and position within the part (0-based).
struct PartEndpoint {
  int part = 0;
  int index = 0;
  friend auto operator<=>(const PartEndpoint&, const PartEndpoint&) = default;
};

/// Normalized so that a.part < b.part.
struct RemovedEdge {
  PartEndpoint a;
  PartEndpoint b;
  friend auto operator<=>(const RemovedEdge&, const RemovedEdge&) = default;
};

/// A concrete complete partite graph with explicit removals.
struct PartiteSpec {
  std::vector<int> parts;
  std::vector<RemovedEdge> removed;
  /// Written as a single size s, meaning K_s (s parts of size one).
  bool complete_notation = false;

  int order() const;
  int deficiency() const { return static_cast<int>(removed.size()); }
};

/// A table entry: parts may be the symbolic "n", and any number of removals may be
/// left unspecified ("-e", "-2e", "-{(d,e),e}").
struct PartitePattern {
  std::vector<std::optional<int>> parts;  ///< nullopt marks the symbolic part
  std::vector<RemovedEdge> removed;
  int any_edges = 0;
  bool complete_notation = false;

  bool symbolic() const;
  int deficiency() const { return static_cast<int>(removed.size()) + any_edges; }
};

PartitePattern parse_pattern(std::string_view text);
/// A pattern with no symbolic part and no unspecified removals.
PartiteSpec parse_spec(std::string_view text);
std::string format_pattern(const PartitePattern& pattern);
std::string format_spec(const PartiteSpec& spec);
PartitePattern to_pattern(const PartiteSpec& spec);

/// Vertex of `e` in the graph built from `parts`.
int vertex_of(const std::vector<int>& parts, PartEndpoint e);
PartEndpoint endpoint_of(const std::vector<int>& parts, int vertex);

Graph build_graph(const PartiteSpec& spec);

struct Combined {
  PartiteSpec spec;
  int dropped = 0;  ///< removals between the merged parts, absorbed by the merge
};
/// Merge parts i and j into one part placed at min(i, j); part j's vertices follow part i's.
Combined combine_parts(const PartiteSpec& spec, int i, int j);

struct DeficientClass {
  PartiteSpec representative;  ///< lexicographically first removal set of the class
  Graph graph;
  CanonicalForm key;
  int labeled_count = 0;  ///< removal sets falling in this class
};

/// Isomorphism classes of `parts` with `fixed` removed plus k further cross edges,
/// optionally confined to the pair of parts `between`. Ordered by first representative.
std::vector<DeficientClass> enumerate_deficient(const std::vector<int>& parts, int k,
                                                const std::vector<RemovedEdge>& fixed = {},
                                                std::optional<std::pair<int, int>> between = {});

/// A pattern whose symbolic part ranges over 1..n_max.
struct DeficientFamily {
  PartitePattern base;
  int n_max = 7;
};

/// Replace the symbolic part by n.
PartitePattern instantiate_family(const DeficientFamily& family, int n);
/// All isomorphism classes named by a concrete pattern.
std::vector<DeficientClass> expand_pattern(const PartitePattern& pattern);

}  // namespace knotlink
