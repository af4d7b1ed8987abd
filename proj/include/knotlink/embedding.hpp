#pragma once

#include <array>
#include <cstdint>

#include "knotlink/graph.hpp"

namespace knotlink {

enum class EmbedStatus { Found, None, Aborted };

struct EmbedResult {
  EmbedStatus status = EmbedStatus::None;
  /// Pattern vertex v maps to host vertex image[v]. Valid when Found.
  std::array<int, kMaxOrder> image{};
};

/// Injective map of pattern vertices into host vertices carrying every pattern edge
/// onto a host edge (not necessarily induced). `budget` is decremented per search
/// node; the search aborts when it reaches zero.
EmbedResult find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                    std::uint64_t& budget);

}  // namespace knotlink
