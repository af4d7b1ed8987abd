#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotlink/graph.hpp"
#include "knotlink/minor.hpp"
#include "knotlink/partite.hpp"

namespace knotlink {

enum class Status { Knotted, NotKnotted, Linked, NotLinked };
enum class EntryKind { AxiomExternal, Derived };

std::string_view status_name(Status s);
Status parse_status(std::string_view text);
/// The status asserting the opposite property.
Status opposite(Status s);

struct KbEntry {
  int line = 0;
  Status status = Status::NotKnotted;
  EntryKind kind = EntryKind::AxiomExternal;
  std::string source;  ///< spec or "g:" text as written
  std::string citation;
  std::optional<PartitePattern> pattern;
  std::optional<Graph> graph;

  bool symbolic() const { return pattern && pattern->symbolic(); }
  /// Graphs named by the entry; a symbolic part is set to n (none if n < 1).
  std::vector<Graph> instances(int n) const;
  /// Instances with exactly `order` vertices.
  std::vector<Graph> instances_of_order(int order) const;
  /// "source [citation]"
  std::string label() const;
};

struct ConsistencyReport {
  int pairs_checked = 0;
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

class KnowledgeBase {
 public:
  static KnowledgeBase parse(std::string_view text);
  static KnowledgeBase load_file(const std::string& path);
  /// KNOTLINK_KB if set, otherwise the embedded shipping file.
  static KnowledgeBase load_default();
  static std::string_view shipping_text();

  const std::vector<KbEntry>& entries() const { return entries_; }
  std::vector<const KbEntry*> with_status(Status s) const;
  const KbEntry& entry_at_line(int line) const;

  /// No graph carries opposite statuses, and no positive entry is a minor of a
  /// negative one (symbolic parts instantiated at the order of the positive graph).
  ConsistencyReport check_consistency(MinorEngine& engine = default_engine(), int n_max = 7) const;

 private:
  std::vector<KbEntry> entries_;
};

}  // namespace knotlink
