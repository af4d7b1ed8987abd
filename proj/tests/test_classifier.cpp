#include <doctest.h>

#include "knotlink/canonical.hpp"
#include "knotlink/classifier.hpp"
#include "knotlink/errors.hpp"
#include "knotlink/family.hpp"
#include "knotlink/partite.hpp"
#include "oracle.hpp"

using namespace knotlink;

namespace {

Graph spec(const char* text) { return build_graph(parse_spec(text)); }

Classifier& shared() {
  static Classifier c(KnowledgeBase::load_default());
  return c;
}

}  // namespace

TEST_SUITE("knowledge base") {
  TEST_CASE("shipping file parses") {
    const KnowledgeBase kb = KnowledgeBase::load_default();
    CHECK(kb.entries().size() > 30);
    CHECK(kb.entry_at_line(5).status == Status::Knotted);
    CHECK(kb.check_consistency().ok());
  }

  TEST_CASE("format errors name the line") {
    CHECK_THROWS_WITH_AS(KnowledgeBase::parse("# c\nKNOTTED\taxiom-external\t7\n"),
                         "line 2: expected 4 tab-separated fields", ParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("MAYBE\taxiom-external\t7\tX\n"), ParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("KNOTTED\tguess\t7\tX\n"), ParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("KNOTTED\tderived\t7-(a,z)\tX\n"), ParseError);
    CHECK_THROWS_AS(KnowledgeBase::parse("KNOTTED\tderived\tg:3;0 0\tX\n"), ParseError);
  }

  TEST_CASE("consistency flags contradictions") {
    const auto kb = KnowledgeBase::parse(
        "KNOTTED\taxiom-external\t7\tX\n"
        "NOT_KNOTTED\taxiom-external\t8\tY\n");
    CHECK_FALSE(kb.check_consistency().ok());
    const auto same = KnowledgeBase::parse(
        "KNOTTED\taxiom-external\t3,3,1,1\tX\n"
        "NOT_KNOTTED\taxiom-external\t1,1,3,3\tY\n");
    CHECK_FALSE(same.check_consistency().ok());
    const auto symbolic = KnowledgeBase::parse(
        "KNOTTED\taxiom-external\t5,5-(a,b)\tX\n"
        "NOT_KNOTTED\taxiom-external\tn,5\tY\n");
    CHECK_FALSE(symbolic.check_consistency().ok());
  }
}

TEST_SUITE("classifier") {
  TEST_CASE("linking examples") {
    Classifier& c = shared();
    CHECK(c.decide_linking(spec("3,3,1,1")).value == Value::Positive);
    CHECK(c.decide_linking(spec("6-(a,b)")).value == Value::Negative);
    CHECK(c.decide_linking(spec("3,3,1-(a,b)")).value == Value::Negative);
    CHECK(c.decide_linking(cycle_graph(5)).value == Value::Negative);
    CHECK(c.decide_linking(spec("2,2,1,1,1-(b,c)")).value == Value::Positive);
    CHECK(c.decide_linking(spec("2,2,1,1,1-(a,b)")).value == Value::Negative);
    CHECK(c.decide_linking(petersen_graph()).value == Value::Positive);
    const Verdict v = c.decide_linking(spec("4,4"));
    REQUIRE(v.steps.size() == 1);
    REQUIRE(v.steps[0].witness);
    CHECK(validate_witness(*v.steps[0].host, *v.steps[0].pattern, *v.steps[0].witness));
    CHECK(v.axioms().empty());
  }

  TEST_CASE("coning a graph links exactly the nonplanar ones") {
    Classifier& c = shared();
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& h : oracle::all_classes(n)) {
        const bool linked = c.decide_linking(join(h, Graph(1))).value == Value::Positive;
        REQUIRE(linked == oracle::nonplanar(h));
      }
    }
  }

  TEST_CASE("join rules") {
    Classifier& c = shared();
    const auto apex = c.join_apex_rule(join(k33(), Graph(1)), Mode::Linking);
    REQUIRE(apex);
    CHECK(apex->value == Value::Positive);
    CHECK_FALSE(c.join_apex_rule(cycle_graph(5), Mode::Linking));
    const auto knot = c.join_apex_rule(join(Graph::complete(5), Graph::complete(2)), Mode::Knotting);
    REQUIRE(knot);
    CHECK(knot->value == Value::Positive);
    CHECK(knot->steps[0].rule == Rule::JoinNonplanar);
    const auto flat = c.join_apex_rule(join(cycle_graph(6), Graph::complete(2)), Mode::Knotting);
    REQUIRE(flat);
    CHECK(flat->value == Value::Negative);
    CHECK(flat->steps[0].rule == Rule::JoinPlanar);
  }

  TEST_CASE("knotting examples") {
    Classifier& c = shared();
    const Verdict k7 = c.decide_knotting(Graph::complete(7));
    CHECK(k7.value == Value::Positive);
    CHECK(k7.steps[0].rule == Rule::EdgeBound);
    const Verdict k3311 = c.decide_knotting(spec("3,3,1,1"));
    CHECK(k3311.value == Value::Positive);
    const Verdict minus = c.decide_knotting(spec("3,3,1,1-(a,b)"));
    CHECK(minus.value == Value::Negative);
    const Verdict k55 = c.decide_knotting(spec("5,5-(a,b)"));
    CHECK(k55.value == Value::Positive);
    CHECK_FALSE(k55.axioms().empty());
    CHECK(c.decide_knotting(spec("4,4")).value == Value::Negative);
    CHECK(c.decide_knotting(h9()).value == Value::Positive);
    CHECK(c.decide_knotting(cycle_graph(5)).value == Value::Negative);
    CHECK_THROWS_AS(c.decide_knotting(Graph(13)), PreconditionError);
  }

  TEST_CASE("seeds") {
    Classifier& c = shared();
    const auto& seeds = c.seeds();
    CHECK(seeds.size() == 14 + 26 + 1);
    for (std::size_t i = 1; i < seeds.size(); ++i) {
      CHECK(seeds[i - 1].graph.order() <= seeds[i].graph.order());
    }
    for (const Seed& s : seeds) {
      const KbEntry& e = c.kb().entry_at_line(s.axiom_line);
      CHECK(e.status == Status::Knotted);
      CHECK(e.kind == EntryKind::AxiomExternal);
    }
  }

  TEST_CASE("without axioms nothing knotted is proved by a seed") {
    Classifier bare(KnowledgeBase::parse("# empty\n"));
    CHECK(bare.seeds().empty());
    CHECK(bare.decide_knotting(spec("5,5-(a,b)")).value == Value::Unknown);
    CHECK(bare.decide_knotting(Graph::complete(7)).value == Value::Positive);
  }

  TEST_CASE("knotted implies linked on eight vertices") {
    Classifier& c = shared();
    for (const Graph& g : enumerate_graphs(8, 20)) {
      if (c.decide_knotting(g).value == Value::Positive) {
        REQUIRE(c.decide_linking(g).value == Value::Positive);
      }
    }
  }

  TEST_CASE("verdicts respect edge addition") {
    Classifier& c = shared();
    for (const Graph& g : enumerate_graphs(7, 12)) {
      const Value v = c.decide_knotting(g).value;
      for (int a = 0; a < g.order(); ++a) {
        for (int b = a + 1; b < g.order(); ++b) {
          if (g.has_edge(a, b)) continue;
          Graph up = g;
          up.add_edge(a, b);
          const Value w = c.decide_knotting(up).value;
          if (v == Value::Positive) REQUIRE(w != Value::Negative);
          if (w == Value::Negative) REQUIRE(v != Value::Positive);
        }
      }
    }
  }

  TEST_CASE("census propagation rejects contradictory axioms") {
    Classifier liar(KnowledgeBase::parse("NOT_KNOTTED\taxiom-external\t7\tX\n"));
    std::vector<Graph> graphs{Graph::complete(7)};
    CHECK_THROWS_AS(propagate_census(graphs, liar), PropagationConflict);
  }

  TEST_CASE("census propagation from parents") {
    Classifier c(KnowledgeBase::parse("NOT_KNOTTED\taxiom-external\t7-(a,b)\tX\n"));
    const auto graphs = enumerate_graphs(7, 19);
    const auto verdicts = propagate_census(graphs, c);
    CHECK(verdicts.size() == graphs.size());
    int from_parent = 0;
    for (const auto& [key, v] : verdicts) {
      CHECK(v.value != Value::Unknown);
      if (!v.steps.empty() && v.steps[0].rule == Rule::UnknottedParent) ++from_parent;
    }
    CHECK(from_parent > 0);
  }
}
