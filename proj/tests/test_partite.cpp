#include <doctest.h>

#include <set>

#include "knotlink/canonical.hpp"
#include "knotlink/errors.hpp"
#include "knotlink/partite.hpp"
#include "oracle.hpp"

using namespace knotlink;

namespace {

// Classes of K_parts minus k edges, by brute force over all edge subsets.
std::size_t brute_classes(const std::vector<int>& parts, int k) {
  const Graph full = complete_multipartite(parts);
  const auto edges = full.edges();
  std::set<oracle::Key> keys;
  std::vector<int> pick(k);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == k) {
      Graph g = full;
      for (int i : pick) g.remove_edge(edges[i].first, edges[i].second);
      keys.insert(oracle::key(g));
      return;
    }
    for (int i = start; i < static_cast<int>(edges.size()); ++i) {
      pick[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return keys.size();
}

}  // namespace

TEST_SUITE("partite") {
  TEST_CASE("specs round trip") {
    for (const char* text : {"3,3,1", "4,3,1-(b,c)", "3,2,1,1,1-{(b1,c),(b1,d)}", "7", "5,5",
                             "4,3,1-{(b,c),e}", "n,2,2", "7-2e", "n,4-e", "2,2,1,1,1-(a,b)"}) {
      CAPTURE(text);
      CHECK(format_pattern(parse_pattern(text)) == text);
    }
    CHECK(format_spec(parse_spec("3, 2, 1, 1, 1 - {(b1,c), (b1,d)}")) == "3,2,1,1,1-{(b1,c),(b1,d)}");
    CHECK(format_spec(parse_spec("3,2,1-(a1,b1)")) == "3,2,1-(a,b)");
  }

  TEST_CASE("single size means a complete graph") {
    const PartiteSpec s = parse_spec("7");
    CHECK(s.complete_notation);
    CHECK(s.parts.size() == 7);
    CHECK(is_isomorphic(build_graph(s), Graph::complete(7)));
    CHECK(is_isomorphic(build_graph(parse_spec("6-(a,b)")), delete_edge(Graph::complete(6), 0, 1)));
  }

  TEST_CASE("parse errors give the position") {
    CHECK_THROWS_WITH_AS(parse_spec("3,3-(a,z)"),
                         "spec '3,3-(a,z)' at position 10: part letter beyond the listed parts",
                         ParseError);
    CHECK_THROWS_AS(parse_spec("3,,3"), ParseError);
    CHECK_THROWS_AS(parse_spec("3,3-(a,a)"), ParseError);
    CHECK_THROWS_AS(parse_spec("3,3-(a4,b)"), ParseError);
    CHECK_THROWS_AS(parse_spec("3,3-e"), ParseError);
    CHECK_THROWS_AS(parse_pattern("n"), ParseError);
    CHECK_THROWS_AS(parse_pattern("n,n"), ParseError);
    CHECK_THROWS_AS(parse_spec("3,3-{(a,b),(a,b)}"), ParseError);
  }

  TEST_CASE("graph construction") {
    const Graph g = build_graph(parse_spec("3,2,1,1-(b,c)"));
    CHECK(g.order() == 7);
    CHECK(g.size() == 3 * 4 + 2 * 2 + 1 - 1);
    CHECK_FALSE(g.has_edge(3, 5));
    CHECK(vertex_of({3, 2, 1, 1}, {1, 1}) == 4);
    CHECK(endpoint_of({3, 2, 1, 1}, 6).part == 3);
  }

  TEST_CASE("combining parts") {
    const auto c = combine_parts(parse_spec("3,2,1,1-(c,d)"), 2, 3);
    CHECK(format_spec(c.spec) == "3,2,2");
    CHECK(c.dropped == 1);
    const auto d = combine_parts(parse_spec("3,2,1,1-(b,c)"), 0, 1);
    CHECK(d.spec.parts == std::vector<int>{5, 1, 1});
    CHECK(d.dropped == 0);
    CHECK(build_graph(d.spec).size() == build_graph(parse_spec("5,1,1")).size() - 1);
  }

  TEST_CASE("deficient classes match brute force") {
    const std::vector<std::vector<int>> shapes = {{3, 2, 1}, {2, 2, 1, 1}, {3, 3, 1}, {4, 2, 1}, {2, 2, 2}};
    for (const auto& parts : shapes) {
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(k);
        CHECK(enumerate_deficient(parts, k).size() == brute_classes(parts, k));
      }
    }
  }

  TEST_CASE("deficient classes") {
    // K4,3,1 minus two edges between A and B: share an A vertex, share a B vertex, or disjoint.
    const auto ab = enumerate_deficient({4, 3, 1}, 2, {}, std::pair{0, 1});
    CHECK(ab.size() == 3);
    int labeled = 0;
    for (const auto& c : ab) labeled += c.labeled_count;
    CHECK(labeled == 66);
    const auto fixed = enumerate_deficient({4, 3, 1}, 1, {parse_spec("4,3,1-(b,c)").removed});
    for (const auto& c : fixed) CHECK(c.representative.removed.size() == 2);
  }

  TEST_CASE("patterns expand to classes") {
    CHECK(expand_pattern(parse_pattern("7-2e")).size() == 2);
    CHECK(expand_pattern(parse_pattern("5,5-e")).size() == 1);
    CHECK(expand_pattern(parse_pattern("4,4,1-e")).size() == 2);
    CHECK(expand_pattern(parse_pattern("3,3,1")).size() == 1);
  }

  TEST_CASE("parametric families") {
    const PartitePattern p = parse_pattern("n,2,2-e");
    CHECK(p.symbolic());
    const PartitePattern three = instantiate_family({p, 7}, 3);
    CHECK(format_pattern(three) == "3,2,2-e");
    CHECK(expand_pattern(three).size() == 2);
    CHECK_THROWS_AS(instantiate_family({p, 7}, 0), PreconditionError);
  }
}
