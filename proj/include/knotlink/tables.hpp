#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotlink/classifier.hpp"
#include "knotlink/knowledge_base.hpp"
#include "knotlink/partite.hpp"
#include "knotlink/report.hpp"

namespace knotlink {

struct TableEntry {
  int line = 0;
  Status expected = Status::NotKnotted;
  std::string spec;
  std::string column;
  PartitePattern pattern;
  bool isomorphism_only = false;  ///< the printed removal is matched up to isomorphism
};

struct TableExpectation {
  int id = 0;
  std::string title;
  bool knotting = false;
  std::vector<TableEntry> entries;
};

TableExpectation parse_table(int id, std::string_view text);
/// Embedded expectation data; PreconditionError outside 1..8.
TableExpectation load_table(int id);

struct ClassOutcome {
  std::string spec;  ///< representative with the symbolic part filled in
  Graph graph;
  Verdict verdict;
  std::string error;  ///< classifier error text, if any
  bool search_limit = false;
  bool match = false;
};

struct EntryOutcome {
  const TableEntry* entry = nullptr;
  std::vector<ClassOutcome> classes;
  bool match() const;
  int unknown() const;
  std::vector<int> axioms() const;
};

struct TableResult {
  TableExpectation table;
  std::vector<EntryOutcome> entries;
  std::optional<ConsistencyReport> consistency;  ///< for the cited knotting table only
  struct AxiomAgreement {
    int line;
    std::string fact;
    std::string graph6;
    std::string stated;
    bool agrees;
  };
  /// Linking tables: cited linking facts recomputed by the exact decision.
  std::vector<AxiomAgreement> axiom_checks;
  int mismatches = 0;
  int unknowns = 0;
  int errors = 0;
  bool search_limit = false;
  int classes_checked = 0;

  bool ok() const;
};

/// Classify every entry. Parametric entries run at n = 1..n_max; an entry with
/// unspecified removals passes only if every class agrees.
TableResult run_table(int id, Classifier& classifier, int n_max = 7);
TableResult run_table(TableExpectation table, Classifier& classifier, int n_max = 7);
Report table_report(const TableResult& result);

}  // namespace knotlink
