#include "knotlink/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "knotlink/errors.hpp"

namespace knotlink {

Graph::Graph(int order) : n_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw CapacityError("graph order " + std::to_string(order) + " outside 0.." +
                        std::to_string(kMaxOrder));
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = low_mask(n) & ~bit(v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::size() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return n_ == 0 ? 0 : best;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
  }
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[u] & bit(v)) != 0;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexMask m = adj_[u] & ~low_mask(u + 1); m; m &= m - 1) out.emplace_back(u, lowest(m));
  }
  return out;
}

std::vector<VertexMask> Graph::components() const {
  std::vector<VertexMask> out;
  VertexMask left = vertices();
  while (left) {
    VertexMask comp = bit(lowest(left));
    VertexMask frontier = comp;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) next |= adj_[lowest(f)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

Graph contract_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw PreconditionError("cannot contract non-edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  }
  // Merge v into u, then drop v.
  Graph merged = g;
  for (VertexMask m = g.neighbors(v) & ~bit(u); m; m &= m - 1) merged.add_edge(u, lowest(m));
  return delete_vertex(merged, v);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("cannot delete missing vertex " + std::to_string(v));
  }
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Graph delete_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) {
    throw PreconditionError("cannot delete missing edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  }
  Graph out = g;
  out.remove_edge(u, v);
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > kMaxOrder) {
    throw CapacityError("union would have " + std::to_string(n) + " vertices");
  }
  Graph out(n);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  for (auto [a, b] : h.edges()) out.add_edge(a + g.order(), b + g.order());
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < h.order(); ++b) out.add_edge(a, g.order() + b);
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw PreconditionError("permutation size does not match graph order");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertices();
  std::array<int, kMaxOrder> index{};
  int n = 0;
  for (VertexMask m = keep; m; m &= m - 1) index[lowest(m)] = n++;
  Graph out(n);
  for (auto [u, v] : g.edges()) {
    if ((keep & bit(u)) && (keep & bit(v))) out.add_edge(index[u], index[v]);
  }
  return out;
}

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int size : parts) {
    if (size < 1) throw PreconditionError("part sizes must be positive");
    n += size;
  }
  if (n > kMaxOrder) throw CapacityError("complete partite graph would have " + std::to_string(n) + " vertices");
  Graph g(n);
  int start = 0;
  for (int size : parts) {
    for (int v = start; v < start + size; ++v) {
      for (int w = start + size; w < n; ++w) g.add_edge(v, w);
    }
    start += size;
  }
  return g;
}

Graph cycle_graph(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) {
    if (n >= 3 || v + 1 < n) g.add_edge(v, (v + 1) % n);
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  int line_no = 0;
  bool have_order = false;
  Graph g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++line_no;
    pos = end + 1;
    if (line.empty() || line.front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!have_order) {
      int n = 0;
      if (!parse_int(line, n)) throw ParseError(line_no, "expected vertex count");
      if (n < 1 || n > kMaxOrder) {
        throw ParseError(line_no, "vertex count must be in 1.." + std::to_string(kMaxOrder));
      }
      g = Graph(n);
      have_order = true;
    } else {
      const auto space = line.find_first_of(" \t");
      int u = 0;
      int v = 0;
      if (space == std::string_view::npos || !parse_int(line.substr(0, space), u) ||
          !parse_int(trim(line.substr(space + 1)), v)) {
        throw ParseError(line_no, "expected 'u v' edge line");
      }
      if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) {
        throw ParseError(line_no, "vertex index out of range");
      }
      if (u == v) throw ParseError(line_no, "self-loop");
      if (g.has_edge(u, v)) throw ParseError(line_no, "duplicate edge");
      g.add_edge(u, v);
    }
    if (end == text.size()) break;
  }
  if (!have_order) throw ParseError(line_no, "missing vertex count");
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_graph_inline(const Graph& g) {
  std::string text = serialize_graph(g);
  text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ';');
  return text;
}

Graph parse_graph_inline(std::string_view text) {
  std::string lines(text);
  std::replace(lines.begin(), lines.end(), ';', '\n');
  return parse_graph(lines);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.order() + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace knotlink
