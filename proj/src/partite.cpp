#include "knotlink/partite.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "knotlink/errors.hpp"

namespace knotlink {

int PartiteSpec::order() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool PartitePattern::symbolic() const {
  return std::any_of(parts.begin(), parts.end(), [](const auto& p) { return !p.has_value(); });
}

namespace {

class PatternParser {
 public:
  explicit PatternParser(std::string_view text) : text_(text) {}

  PartitePattern parse() {
    PartitePattern out;
    skip_space();
    do {
      skip_space();
      if (peek() == 'n') {
        if (out.symbolic()) fail("only one part may be symbolic");
        ++pos_;
        out.parts.emplace_back(std::nullopt);
      } else {
        const int size = number("part size");
        if (size < 1) fail("part sizes must be positive");
        out.parts.emplace_back(size);
      }
      skip_space();
    } while (accept(','));
    if (out.parts.size() == 1) {
      if (!out.parts.front()) fail("a lone symbolic part is not supported");
      const int s = *out.parts.front();
      if (s > kMaxOrder) fail("complete graph too large");
      out.parts.assign(s, 1);
      out.complete_notation = true;
    }
    if (accept('-')) {
      skip_space();
      if (peek() == '{') {
        ++pos_;
        do {
          skip_space();
          item(out);
          skip_space();
        } while (accept(','));
        expect('}');
      } else {
        item(out);
      }
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    validate(out);
    return out;
  }

 private:
  void item(PartitePattern& out) {
    if (peek() == '(') {
      ++pos_;
      const PartEndpoint a = endpoint();
      expect(',');
      const PartEndpoint b = endpoint();
      expect(')');
      if (a.part == b.part) fail("removed edge must join different parts");
      out.removed.push_back(a.part < b.part ? RemovedEdge{a, b} : RemovedEdge{b, a});
      return;
    }
    int count = 1;
    if (peek() >= '0' && peek() <= '9') count = number("edge count");
    expect('e');
    if (count < 1) fail("edge count must be positive");
    out.any_edges += count;
  }

  PartEndpoint endpoint() {
    skip_space();
    const char letter = peek();
    if (letter < 'a' || letter > 'z') fail("expected part letter");
    ++pos_;
    PartEndpoint e{letter - 'a', 0};
    if (peek() >= '0' && peek() <= '9') {
      const int index = number("vertex subscript");
      if (index < 1) fail("vertex subscripts start at 1");
      e.index = index - 1;
    }
    skip_space();
    return e;
  }

  void validate(const PartitePattern& p) {
    for (const RemovedEdge& r : p.removed) {
      for (const PartEndpoint& e : {r.a, r.b}) {
        if (e.part >= static_cast<int>(p.parts.size())) fail("part letter beyond the listed parts");
        const auto& size = p.parts[e.part];
        if (size && e.index >= *size) fail("vertex subscript beyond part size");
      }
    }
    for (std::size_t i = 0; i < p.removed.size(); ++i) {
      for (std::size_t j = i + 1; j < p.removed.size(); ++j) {
        if (p.removed[i] == p.removed[j]) fail("duplicate removed edge");
      }
    }
  }

  int number(const char* what) {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail(std::string("expected ") + what);
    return static_cast<int>(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void skip_space() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(0, "spec '" + std::string(text_) + "' at position " +
                            std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string endpoint_text(const PartitePattern& p, PartEndpoint e, bool subscripts) {
  std::string out(1, static_cast<char>('a' + e.part));
  const auto& size = p.parts[e.part];
  if (subscripts && (!size || *size > 1)) out += std::to_string(e.index + 1);
  return out;
}

}  // namespace

PartitePattern parse_pattern(std::string_view text) { return PatternParser(text).parse(); }

PartiteSpec parse_spec(std::string_view text) {
  const PartitePattern p = parse_pattern(text);
  if (p.symbolic()) throw ParseError(0, "spec '" + std::string(text) + "' has a symbolic part");
  if (p.any_edges > 0) {
    throw ParseError(0, "spec '" + std::string(text) + "' leaves removed edges unspecified");
  }
  PartiteSpec s;
  for (const auto& size : p.parts) s.parts.push_back(*size);
  s.removed = p.removed;
  s.complete_notation = p.complete_notation;
  return s;
}

PartitePattern to_pattern(const PartiteSpec& spec) {
  PartitePattern p;
  for (int size : spec.parts) p.parts.emplace_back(size);
  p.removed = spec.removed;
  p.complete_notation = spec.complete_notation;
  return p;
}

std::string format_pattern(const PartitePattern& p) {
  std::string out;
  if (p.complete_notation) {
    out = std::to_string(p.parts.size());
  } else {
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) out += ',';
      out += p.parts[i] ? std::to_string(*p.parts[i]) : "n";
    }
  }
  const int explicit_count = static_cast<int>(p.removed.size());
  if (explicit_count == 0 && p.any_edges == 0) return out;
  if (explicit_count == 0) {
    return out + "-" + (p.any_edges == 1 ? "" : std::to_string(p.any_edges)) + "e";
  }
  const bool subscripts = explicit_count >= 2;
  auto pair = [&](const RemovedEdge& r) {
    return "(" + endpoint_text(p, r.a, subscripts) + "," + endpoint_text(p, r.b, subscripts) + ")";
  };
  if (explicit_count == 1 && p.any_edges == 0) return out + "-" + pair(p.removed.front());
  out += "-{";
  for (int i = 0; i < explicit_count; ++i) {
    if (i) out += ',';
    out += pair(p.removed[i]);
  }
  for (int i = 0; i < p.any_edges; ++i) out += ",e";
  return out + "}";
}

std::string format_spec(const PartiteSpec& spec) { return format_pattern(to_pattern(spec)); }

int vertex_of(const std::vector<int>& parts, PartEndpoint e) {
  if (e.part < 0 || e.part >= static_cast<int>(parts.size()) || e.index < 0 ||
      e.index >= parts[e.part]) {
    throw PreconditionError("endpoint outside the partite graph");
  }
  return std::accumulate(parts.begin(), parts.begin() + e.part, 0) + e.index;
}

PartEndpoint endpoint_of(const std::vector<int>& parts, int vertex) {
  for (int i = 0; i < static_cast<int>(parts.size()); ++i) {
    if (vertex < parts[i]) return {i, vertex};
    vertex -= parts[i];
  }
  throw PreconditionError("vertex outside the partite graph");
}

Graph build_graph(const PartiteSpec& spec) {
  Graph g = complete_multipartite(spec.parts);
  for (const RemovedEdge& r : spec.removed) {
    if (r.a.part == r.b.part) throw PreconditionError("removed edge inside one part");
    const int u = vertex_of(spec.parts, r.a);
    const int v = vertex_of(spec.parts, r.b);
    if (!g.has_edge(u, v)) throw PreconditionError("edge removed twice: " + format_spec(spec));
    g.remove_edge(u, v);
  }
  return g;
}

Combined combine_parts(const PartiteSpec& spec, int i, int j) {
  const int p = static_cast<int>(spec.parts.size());
  if (i < 0 || j < 0 || i >= p || j >= p || i == j) {
    throw PreconditionError("combine_parts needs two distinct valid parts");
  }
  const int keep = std::min(i, j);
  const int gone = std::max(i, j);
  // Where each old part lands, and the offset its vertices receive.
  auto remap = [&](PartEndpoint e) -> PartEndpoint {
    if (e.part == i) return {keep, e.index};
    if (e.part == j) return {keep, spec.parts[i] + e.index};
    return {e.part > gone ? e.part - 1 : e.part, e.index};
  };
  Combined out;
  for (int k = 0; k < p; ++k) {
    if (k == keep) {
      out.spec.parts.push_back(spec.parts[i] + spec.parts[j]);
    } else if (k != gone) {
      out.spec.parts.push_back(spec.parts[k]);
    }
  }
  for (const RemovedEdge& r : spec.removed) {
    const bool inner = (r.a.part == i && r.b.part == j) || (r.a.part == j && r.b.part == i);
    if (inner) {
      ++out.dropped;
      continue;
    }
    PartEndpoint a = remap(r.a);
    PartEndpoint b = remap(r.b);
    if (b.part < a.part) std::swap(a, b);
    out.spec.removed.push_back({a, b});
  }
  return out;
}

std::vector<DeficientClass> enumerate_deficient(const std::vector<int>& parts, int k,
                                                const std::vector<RemovedEdge>& fixed,
                                                std::optional<std::pair<int, int>> between) {
  if (k < 0) throw PreconditionError("deficiency must be non-negative");
  PartiteSpec base{parts, fixed, false};
  const Graph start = build_graph(base);
  std::vector<Edge> pool;
  for (auto [u, v] : start.edges()) {
    if (between) {
      const int pu = endpoint_of(parts, u).part;
      const int pv = endpoint_of(parts, v).part;
      const auto [x, y] = *between;
      if (!((pu == x && pv == y) || (pu == y && pv == x))) continue;
    }
    pool.push_back({u, v});
  }
  std::vector<DeficientClass> out;
  std::map<CanonicalForm, std::size_t> seen;
  if (k > static_cast<int>(pool.size())) return out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  const int total = static_cast<int>(pool.size());
  for (;;) {
    Graph g = start;
    for (int idx : pick) g.remove_edge(pool[idx].first, pool[idx].second);
    const CanonicalForm key = canonical_form(g);
    auto [it, fresh] = seen.emplace(key, out.size());
    if (fresh) {
      DeficientClass c;
      c.representative = base;
      for (int idx : pick) {
        c.representative.removed.push_back(
            {endpoint_of(parts, pool[idx].first), endpoint_of(parts, pool[idx].second)});
      }
      c.graph = g;
      c.key = key;
      out.push_back(std::move(c));
    }
    ++out[it->second].labeled_count;
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[i] == total - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

PartitePattern instantiate_family(const DeficientFamily& family, int n) {
  if (n < 1) throw PreconditionError("symbolic part size must be at least 1");
  PartitePattern out = family.base;
  for (auto& size : out.parts) {
    if (!size) size = n;
  }
  for (const RemovedEdge& r : out.removed) {
    if (r.a.index >= *out.parts[r.a.part] || r.b.index >= *out.parts[r.b.part]) {
      throw PreconditionError("removed edge does not exist when n = " + std::to_string(n));
    }
  }
  return out;
}

std::vector<DeficientClass> expand_pattern(const PartitePattern& pattern) {
  if (pattern.symbolic()) throw PreconditionError("pattern still has a symbolic part");
  std::vector<int> parts;
  for (const auto& size : pattern.parts) parts.push_back(*size);
  int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total > kMaxOrder) throw CapacityError("partite graph has " + std::to_string(total) + " vertices");
  auto classes = enumerate_deficient(parts, pattern.any_edges, pattern.removed);
  for (auto& c : classes) c.representative.complete_notation = pattern.complete_notation;
  return classes;
}

}  // namespace knotlink
