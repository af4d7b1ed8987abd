#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotlink/canonical.hpp"
#include "knotlink/graph.hpp"
#include "knotlink/knowledge_base.hpp"
#include "knotlink/minor.hpp"

namespace knotlink {

enum class Value { Positive, Negative, Unknown };

enum class Rule {
  PetersenMinor,       ///< linking: a Petersen-family member is a minor
  PetersenExhaustive,  ///< linking: exhaustive search found none
  ApexLinking,         ///< a dominating vertex u; decided by planarity of G - u
  KbIdentity,          ///< R6: G is a NOT_KNOTTED entry
  EdgeBound,           ///< R1: m >= 5n - 14
  JoinNonplanar,       ///< R3: G = H + K2 with H nonplanar
  JoinPlanar,          ///< R4: G = H + K2 with H planar
  TwoApex,             ///< G - {u, v} planar for some pair u, v
  SeedMinor,           ///< R2: a knotted seed is a minor
  MinorOfUnknotted,    ///< R5: G is a minor of a NOT_KNOTTED entry
  UnknottedParent,     ///< census: G + e is NOT_KNOTTED
};

std::string_view rule_name(Rule r);

/// One rule application. Minor witnesses carry their host and pattern so the
/// certificate can be checked on its own.
struct Step {
  Rule rule;
  std::string summary;
  std::vector<int> axioms;  ///< knowledge-base lines consumed
  std::vector<int> apex;    ///< removed vertices for the join and apex rules
  std::optional<Graph> host;
  std::optional<Graph> pattern;
  std::optional<MinorWitness> witness;
};

struct Verdict {
  Value value = Value::Unknown;
  std::vector<Step> steps;
  std::vector<std::string> attempted;

  std::vector<int> axioms() const;
};

/// Status word for a verdict in the given mode ("LINKED", "UNKNOWN", ...).
std::string verdict_word(const Verdict& v, bool knotting);

enum class Mode { Linking, Knotting };

struct Seed {
  std::string name;
  Graph graph;
  int axiom_line;
};

class Classifier {
 public:
  explicit Classifier(KnowledgeBase kb, MinorEngine& engine = default_engine());

  Verdict decide_linking(const Graph& g);
  Verdict decide_knotting(const Graph& g);
  /// Join rules; nullopt when no dominating vertex (or adjacent dominating pair) exists.
  std::optional<Verdict> join_apex_rule(const Graph& g, Mode mode);

  /// Knotted seeds: the triangle-Y closures of K7 and K3,3,1,1, and K5,5 - e, each
  /// backed by a KNOTTED knowledge-base entry. Sorted by order.
  const std::vector<Seed>& seeds();
  const KnowledgeBase& kb() const { return kb_; }
  MinorEngine& engine() { return engine_; }

  /// Individual rules, exposed for census propagation.
  std::optional<Step> rule_kb_identity(const Graph& g);
  std::optional<Step> rule_edge_bound(const Graph& g);
  std::optional<Step> rule_two_apex(const Graph& g);
  std::optional<Step> rule_seed_minor(const Graph& g);
  std::optional<Step> rule_minor_of_unknotted(const Graph& g);

 private:
  bool planar(const Graph& g) { return !engine_.has_minor(g, k5_) && !engine_.has_minor(g, k33_); }

  KnowledgeBase kb_;
  MinorEngine& engine_;
  Graph k5_;
  Graph k33_;
  std::optional<std::vector<Seed>> seeds_;
};

struct AxiomCheck {
  const KbEntry* entry;
  Graph graph;
  Verdict verdict;  ///< exact linking decision for the entry's graph
  bool agrees;
};
/// Recompute every LINKED / NOT_LINKED entry with the exact decision. Symbolic
/// entries are checked at n = 1..n_max.
std::vector<AxiomCheck> confirm_linking_axioms(Classifier& classifier, int n_max = 7);

/// Verdicts for a family of same-order graphs closed under edge deletion, processed
/// from most to fewest edges: G is NOT_KNOTTED when some G + e in the set is.
/// Positive rules run on every graph; a graph both proved and refuted raises
/// PropagationConflict.
std::map<CanonicalForm, Verdict> propagate_census(const std::vector<Graph>& graphs,
                                                  Classifier& classifier);

}  // namespace knotlink
