#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotlink/canonical.hpp"
#include "knotlink/graph.hpp"

namespace knotlink {

/// A minor model: one connected branch set per pattern vertex, plus a host edge
/// for every pattern edge.
struct MinorWitness {
  struct RealizedEdge {
    Edge pattern;  ///< (x, y) with x < y
    Edge host;     ///< host.first lies in branch x, host.second in branch y
  };
  std::vector<std::vector<int>> branch_sets;
  std::vector<RealizedEdge> realized_edges;
};

/// Independent check of a witness: disjoint nonempty connected branch sets and
/// correctly placed realized edges. On failure `why` receives the reason.
bool validate_witness(const Graph& host, const Graph& pattern, const MinorWitness& witness,
                      std::string* why = nullptr);
/// One branch set per line, then one realized edge per line.
std::string format_witness(const MinorWitness& witness);

/// Node limit from KNOTLINK_NODE_LIMIT, default 10^8.
std::uint64_t default_node_limit();

/// Branch-set minor search with a result cache keyed by canonical (host, pattern).
class MinorEngine {
 public:
  explicit MinorEngine(std::uint64_t node_limit = default_node_limit());

  bool has_minor(const Graph& host, const Graph& pattern);
  std::optional<MinorWitness> find_minor_witness(const Graph& host, const Graph& pattern);

  void clear_cache() { cache_.clear(); }
  std::size_t cache_size() const { return cache_.size(); }
  std::uint64_t node_limit() const { return node_limit_; }
  /// Search nodes spent by uncached queries since construction.
  std::uint64_t nodes_spent() const { return nodes_spent_; }

 private:
  struct Entry {
    bool found = false;
    MinorWitness witness;  // in canonical coordinates of the host and pattern
  };
  const Entry& lookup(const CanonicalLabeling& host, const CanonicalLabeling& pattern);

  std::uint64_t node_limit_;
  std::uint64_t nodes_spent_ = 0;
  std::map<std::pair<CanonicalForm, CanonicalForm>, Entry> cache_;
};

/// Per-thread engine used by the free functions below.
MinorEngine& default_engine();

bool has_minor(const Graph& host, const Graph& pattern);
std::optional<MinorWitness> find_minor_witness(const Graph& host, const Graph& pattern);

Graph k33();

/// Planar iff neither K5 nor K3,3 is a minor.
bool is_planar(const Graph& g);

struct PlanarityObstruction {
  std::string name;  ///< "K5" or "K3,3"
  MinorWitness witness;
};
std::optional<PlanarityObstruction> planarity_obstruction(const Graph& g);

enum class BoundTarget { K5, K6, K7 };

/// A graph on n >= min_order vertices with at least coefficient*n - constant edges
/// has the complete graph K_target as a minor.
struct BoundRule {
  BoundTarget target;
  int coefficient;
  int constant;
  int min_order;

  int threshold(int n) const { return coefficient * n - constant; }
  int target_order() const;
  std::string name() const;

  static BoundRule k5() { return {BoundTarget::K5, 3, 5, 5}; }
  static BoundRule k6() { return {BoundTarget::K6, 4, 9, 6}; }
  static BoundRule k7() { return {BoundTarget::K7, 5, 14, 7}; }
};

bool guarantees_minor(int n, int m, const BoundRule& rule);

struct BoundReport {
  int n = 0;
  BoundRule rule = BoundRule::k6();
  int threshold = 0;
  int checked = 0;
  std::vector<Graph> violations;
  /// A class with threshold-1 edges lacking the minor, if any.
  std::optional<Graph> below_threshold_witness;
};

BoundReport verify_bound_exhaustive(int n, const BoundRule& rule,
                                    MinorEngine& engine = default_engine());

}  // namespace knotlink
