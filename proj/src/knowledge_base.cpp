#include "knotlink/knowledge_base.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "knotlink/canonical.hpp"
#include "knotlink/embedded_data.hpp"
#include "knotlink/errors.hpp"

namespace knotlink {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Knotted: return "KNOTTED";
    case Status::NotKnotted: return "NOT_KNOTTED";
    case Status::Linked: return "LINKED";
    case Status::NotLinked: return "NOT_LINKED";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::Knotted, Status::NotKnotted, Status::Linked, Status::NotLinked}) {
    if (text == status_name(s)) return s;
  }
  throw ParseError(0, "unknown status '" + std::string(text) + "'");
}

Status opposite(Status s) {
  switch (s) {
    case Status::Knotted: return Status::NotKnotted;
    case Status::NotKnotted: return Status::Knotted;
    case Status::Linked: return Status::NotLinked;
    case Status::NotLinked: return Status::Linked;
  }
  return s;
}

std::vector<Graph> KbEntry::instances(int n) const {
  if (graph) return {*graph};
  PartitePattern concrete = *pattern;
  if (concrete.symbolic()) {
    if (n < 1) return {};
    concrete = instantiate_family({*pattern, n}, n);
  }
  int order = 0;
  for (const auto& size : concrete.parts) order += *size;
  if (order > kMaxOrder) return {};
  std::vector<Graph> out;
  for (auto& c : expand_pattern(concrete)) out.push_back(std::move(c.graph));
  return out;
}

std::vector<Graph> KbEntry::instances_of_order(int order) const {
  if (graph) return graph->order() == order ? std::vector<Graph>{*graph} : std::vector<Graph>{};
  int fixed = 0;
  for (const auto& size : pattern->parts) fixed += size.value_or(0);
  if (!symbolic()) return fixed == order ? instances(0) : std::vector<Graph>{};
  return instances(order - fixed);
}

std::string KbEntry::label() const { return source + " [" + citation + "]"; }

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

KnowledgeBase KnowledgeBase::parse(std::string_view text) {
  KnowledgeBase kb;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw ParseError(line_no, "expected 4 tab-separated fields");
    KbEntry e;
    e.line = line_no;
    try {
      e.status = parse_status(fields[0]);
      if (fields[1] == "axiom-external") {
        e.kind = EntryKind::AxiomExternal;
      } else if (fields[1] == "derived") {
        e.kind = EntryKind::Derived;
      } else {
        throw ParseError(0, "unknown entry kind '" + fields[1] + "'");
      }
      e.source = fields[2];
      if (e.source.rfind("g:", 0) == 0) {
        e.graph = parse_graph_inline(e.source.substr(2));
      } else {
        e.pattern = parse_pattern(e.source);
      }
    } catch (const ParseError& err) {
      throw ParseError(line_no, err.what());
    }
    e.citation = fields[3];
    if (e.citation.empty()) throw ParseError(line_no, "missing citation");
    kb.entries_.push_back(std::move(e));
  }
  return kb;
}

KnowledgeBase KnowledgeBase::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read knowledge base file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

KnowledgeBase KnowledgeBase::load_default() {
  if (const char* path = std::getenv("KNOTLINK_KB"); path && *path) return load_file(path);
  return parse(shipping_text());
}

std::string_view KnowledgeBase::shipping_text() { return embedded_kb(); }

std::vector<const KbEntry*> KnowledgeBase::with_status(Status s) const {
  std::vector<const KbEntry*> out;
  for (const KbEntry& e : entries_) {
    if (e.status == s) out.push_back(&e);
  }
  return out;
}

const KbEntry& KnowledgeBase::entry_at_line(int line) const {
  for (const KbEntry& e : entries_) {
    if (e.line == line) return e;
  }
  throw PreconditionError("no knowledge base entry at line " + std::to_string(line));
}

ConsistencyReport KnowledgeBase::check_consistency(MinorEngine& engine, int n_max) const {
  ConsistencyReport report;
  for (Status positive : {Status::Knotted, Status::Linked}) {
    const Status negative = opposite(positive);
    for (const KbEntry* p : with_status(positive)) {
      const int lo = p->symbolic() ? 1 : 0;
      const int hi = p->symbolic() ? n_max : 0;
      for (int n = lo; n <= hi; ++n) {
        for (const Graph& x : p->instances(n)) {
          const CanonicalForm key = canonical_form(x);
          for (const KbEntry* q : with_status(negative)) {
            for (const Graph& y : q->instances(q->symbolic() ? x.order() : 0)) {
              ++report.pairs_checked;
              if (canonical_form(y) == key) {
                report.problems.push_back(p->label() + " and " + q->label() +
                                          " name the same graph with opposite statuses");
              } else if (engine.has_minor(y, x)) {
                report.problems.push_back(p->label() + " is a minor of " + q->label());
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace knotlink
