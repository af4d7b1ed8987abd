#include "knotlink/embedding.hpp"

namespace knotlink {

namespace {

class Embedder {
 public:
  Embedder(const Graph& host, const Graph& pattern, std::uint64_t& budget)
      : host_(host), pattern_(pattern), budget_(budget), p_(pattern.order()) {
    // Place high-degree vertices first, then whichever vertex has the most placed neighbors.
    VertexMask placed = 0;
    for (int i = 0; i < p_; ++i) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < p_; ++v) {
        if (placed & bit(v)) continue;
        const int links = popcount(pattern_.neighbors(v) & placed);
        if (links > best_links ||
            (links == best_links && pattern_.degree(v) > pattern_.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      order_[i] = best;
      placed |= bit(best);
    }
  }

  EmbedResult run() {
    EmbedResult out;
    if (p_ > host_.order()) return out;
    if (!extend(0, 0)) {
      out.status = aborted_ ? EmbedStatus::Aborted : EmbedStatus::None;
      return out;
    }
    out.status = EmbedStatus::Found;
    out.image = image_;
    return out;
  }

 private:
  bool extend(int pos, VertexMask used) {
    if (pos == p_) return true;
    if (budget_ == 0) {
      aborted_ = true;
      return false;
    }
    --budget_;
    const int v = order_[pos];
    VertexMask cand = host_.vertices() & ~used;
    for (VertexMask m = pattern_.neighbors(v); m; m &= m - 1) {
      const int w = lowest(m);
      if (placed_ & bit(w)) cand &= host_.neighbors(image_[w]);
    }
    const int need = pattern_.degree(v);
    placed_ |= bit(v);
    for (; cand; cand &= cand - 1) {
      const int h = lowest(cand);
      if (host_.degree(h) < need) continue;
      image_[v] = h;
      if (extend(pos + 1, used | bit(h))) return true;
      if (aborted_) break;
    }
    placed_ &= ~bit(v);
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::uint64_t& budget_;
  int p_;
  std::array<int, kMaxOrder> order_{};
  std::array<int, kMaxOrder> image_{};
  VertexMask placed_ = 0;
  bool aborted_ = false;
};

}  // namespace

EmbedResult find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                    std::uint64_t& budget) {
  return Embedder(host, pattern, budget).run();
}

}  // namespace knotlink
