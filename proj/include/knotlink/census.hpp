#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotlink/classifier.hpp"
#include "knotlink/report.hpp"

namespace knotlink {

/// Edges removed from K8, k = 0..8.
inline constexpr int kCensusMaxDeficiency = 8;
/// Expected knotted classes per k.
inline constexpr std::array<int, 9> kExpectedKnotted{1, 1, 2, 3, 4, 4, 6, 2, 0};
/// Expected isomorphism classes of K8 - ke, k = 0..6.
inline constexpr std::array<int, 7> kExpectedClasses{1, 1, 2, 5, 11, 24, 56};
/// Reference total of knotted 8-vertex graphs; compared, never enforced.
inline constexpr int kStatedKnottedTotal = 20;

struct CensusLevel {
  int k = 0;
  int classes = 0;
  int knotted = 0;
  int unknown = 0;
};

struct CensusGraph {
  int k = 0;
  Graph graph;
  std::string graph6;
  std::string edges;  ///< inline edge list
  Verdict verdict;
  bool reverified = false;  ///< reloaded from `edges` and classified again
};

struct NamedCheck {
  std::string name;
  int k = 0;
  bool found = false;  ///< present among the knotted classes at that k
};

struct CensusReport {
  std::array<CensusLevel, kCensusMaxDeficiency + 1> levels{};
  std::vector<CensusGraph> knotted;
  std::vector<CensusGraph> undecided;
  std::vector<NamedCheck> named;
  int total_knotted = 0;
  std::vector<std::string> notes;

  bool counts_match() const;
  bool classes_match() const;
  bool ok() const;
};

CensusReport run_census(Classifier& classifier);
Report census_report(const CensusReport& census, bool list, bool graph6);

}  // namespace knotlink
