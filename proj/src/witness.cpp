// Witness checking deliberately avoids the bit-mask helpers used by the search.
#include <algorithm>
#include <deque>
#include <sstream>

#include "knotlink/minor.hpp"

namespace knotlink {

namespace {

bool fail(std::string* why, const std::string& reason) {
  if (why) *why = reason;
  return false;
}

bool connected_in(const Graph& host, const std::vector<int>& set) {
  std::vector<bool> member(host.order(), false);
  for (int v : set) member[v] = true;
  std::vector<bool> reached(host.order(), false);
  std::deque<int> queue{set.front()};
  reached[set.front()] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w = 0; w < host.order(); ++w) {
      if (member[w] && !reached[w] && host.has_edge(u, w)) {
        reached[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == set.size();
}

}  // namespace

bool validate_witness(const Graph& host, const Graph& pattern, const MinorWitness& witness,
                      std::string* why) {
  if (static_cast<int>(witness.branch_sets.size()) != pattern.order()) {
    return fail(why, "branch set count differs from pattern order");
  }
  std::vector<int> owner(host.order(), -1);
  for (int x = 0; x < pattern.order(); ++x) {
    const auto& set = witness.branch_sets[x];
    if (set.empty()) return fail(why, "empty branch set " + std::to_string(x));
    for (int v : set) {
      if (v < 0 || v >= host.order()) return fail(why, "branch vertex out of range");
      if (owner[v] != -1) return fail(why, "vertex " + std::to_string(v) + " in two branch sets");
      owner[v] = x;
    }
    if (!connected_in(host, set)) return fail(why, "branch set " + std::to_string(x) + " disconnected");
  }
  std::vector<Edge> pending = pattern.edges();
  for (const auto& r : witness.realized_edges) {
    auto it = std::find(pending.begin(), pending.end(), r.pattern);
    if (it == pending.end()) return fail(why, "realized edge names an unknown or repeated pattern edge");
    pending.erase(it);
    const auto [a, b] = r.host;
    if (a < 0 || b < 0 || a >= host.order() || b >= host.order() || !host.has_edge(a, b)) {
      return fail(why, "realized edge is not a host edge");
    }
    if (owner[a] != r.pattern.first || owner[b] != r.pattern.second) {
      return fail(why, "realized edge joins the wrong branch sets");
    }
  }
  if (!pending.empty()) return fail(why, "some pattern edges are not realized");
  return true;
}

std::string format_witness(const MinorWitness& witness) {
  std::ostringstream out;
  for (std::size_t x = 0; x < witness.branch_sets.size(); ++x) {
    out << "branch " << x << ":";
    for (int v : witness.branch_sets[x]) out << ' ' << v;
    out << '\n';
  }
  for (const auto& r : witness.realized_edges) {
    out << "edge " << r.pattern.first << '-' << r.pattern.second << ": " << r.host.first << '-'
        << r.host.second << '\n';
  }
  return out.str();
}

}  // namespace knotlink
