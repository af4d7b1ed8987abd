#include "knotlink/tables.hpp"

#include <map>
#include <set>
#include <sstream>

#include "knotlink/embedded_data.hpp"
#include "knotlink/errors.hpp"

namespace knotlink {

namespace {

constexpr std::string_view kIsoOnlySuffix = " is matched up to isomorphism only";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, '\t')) out.push_back(field);
  return out;
}

bool is_knotting_status(Status s) { return s == Status::Knotted || s == Status::NotKnotted; }

Value expected_value(Status s) {
  return (s == Status::Knotted || s == Status::Linked) ? Value::Positive : Value::Negative;
}

// Cited classification: each class must be an axiom of the same status.
Verdict cited(const Graph& g, Status expected, const KnowledgeBase& kb) {
  Verdict v;
  v.attempted.emplace_back(rule_name(Rule::KbIdentity));
  const CanonicalForm key = canonical_form(g);
  for (const KbEntry* e : kb.with_status(expected)) {
    if (e->kind != EntryKind::AxiomExternal) continue;
    for (const Graph& x : e->instances_of_order(g.order())) {
      if (canonical_form(x) != key) continue;
      v.value = expected_value(expected);
      v.steps.push_back({Rule::KbIdentity, "is " + e->label(), {e->line}, {}, std::nullopt,
                         std::nullopt, std::nullopt});
      return v;
    }
  }
  return v;
}

bool witnesses_hold(const Verdict& v) {
  for (const Step& s : v.steps) {
    if (s.witness && s.host && s.pattern && !validate_witness(*s.host, *s.pattern, *s.witness)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TableExpectation parse_table(int id, std::string_view text) {
  TableExpectation t;
  t.id = id;
  std::set<std::string> iso_only;
  std::map<std::string, Status> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = line.substr(line.find_first_not_of("# ") == std::string::npos
                                               ? line.size()
                                               : line.find_first_not_of("# "));
      const std::string prefix = "table " + std::to_string(id) + ": ";
      if (t.title.empty() && body.rfind(prefix, 0) == 0) t.title = body.substr(prefix.size());
      if (body.size() > kIsoOnlySuffix.size() &&
          body.compare(body.size() - kIsoOnlySuffix.size(), kIsoOnlySuffix.size(), kIsoOnlySuffix) == 0) {
        iso_only.insert(body.substr(0, body.size() - kIsoOnlySuffix.size()));
      }
      continue;
    }
    const auto fields = split_tabs(line);
    if (fields.size() != 3) throw ParseError(line_no, "expected STATUS<TAB>spec<TAB>column");
    TableEntry e;
    e.line = line_no;
    try {
      e.expected = parse_status(fields[0]);
      e.pattern = parse_pattern(fields[1]);
    } catch (const ParseError& err) {
      throw ParseError(line_no, err.what());
    }
    e.spec = fields[1];
    e.column = fields[2];
    if (t.entries.empty()) {
      t.knotting = is_knotting_status(e.expected);
    } else if (t.knotting != is_knotting_status(e.expected)) {
      throw ParseError(line_no, "table mixes linking and knotting statuses");
    }
    if (auto it = seen.find(e.spec); it != seen.end() && it->second != e.expected) {
      throw ParseError(line_no, "spec '" + e.spec + "' listed under both statuses");
    }
    seen.emplace(e.spec, e.expected);
    t.entries.push_back(std::move(e));
  }
  for (TableEntry& e : t.entries) e.isomorphism_only = iso_only.count(e.spec) > 0;
  return t;
}

TableExpectation load_table(int id) {
  const std::string_view text = embedded_table(id);
  if (text.empty()) throw PreconditionError("no table " + std::to_string(id) + " (expected 1..8)");
  return parse_table(id, text);
}

bool EntryOutcome::match() const {
  if (classes.empty()) return false;
  for (const ClassOutcome& c : classes) {
    if (!c.match) return false;
  }
  return true;
}

int EntryOutcome::unknown() const {
  int n = 0;
  for (const ClassOutcome& c : classes) n += c.verdict.value == Value::Unknown ? 1 : 0;
  return n;
}

std::vector<int> EntryOutcome::axioms() const {
  std::set<int> lines;
  for (const ClassOutcome& c : classes) {
    for (int a : c.verdict.axioms()) lines.insert(a);
  }
  return {lines.begin(), lines.end()};
}

bool TableResult::ok() const {
  for (const auto& c : axiom_checks) {
    if (!c.agrees) return false;
  }
  return mismatches == 0 && unknowns == 0 && errors == 0 && (!consistency || consistency->ok());
}

TableResult run_table(int id, Classifier& classifier, int n_max) {
  return run_table(load_table(id), classifier, n_max);
}

TableResult run_table(TableExpectation table, Classifier& classifier, int n_max) {
  TableResult r;
  r.table = std::move(table);
  const bool axiomatic = r.table.id == 2;
  for (const TableEntry& e : r.table.entries) {
    EntryOutcome out;
    out.entry = &e;
    std::vector<PartitePattern> concrete;
    if (e.pattern.symbolic()) {
      for (int n = 1; n <= n_max; ++n) concrete.push_back(instantiate_family({e.pattern, n_max}, n));
    } else {
      concrete.push_back(e.pattern);
    }
    for (const PartitePattern& p : concrete) {
      std::vector<DeficientClass> classes;
      try {
        classes = expand_pattern(p);
      } catch (const Error& err) {
        ClassOutcome c;
        c.spec = format_pattern(p);
        c.error = err.what();
        out.classes.push_back(std::move(c));
        continue;
      }
      for (const DeficientClass& cls : classes) {
        ClassOutcome c;
        c.spec = format_spec(cls.representative);
        c.graph = cls.graph;
        try {
          if (axiomatic) {
            c.verdict = cited(cls.graph, e.expected, classifier.kb());
          } else if (r.table.knotting) {
            c.verdict = classifier.decide_knotting(cls.graph);
          } else {
            c.verdict = classifier.decide_linking(cls.graph);
          }
          c.match = c.verdict.value == expected_value(e.expected) && witnesses_hold(c.verdict);
        } catch (const SearchLimitError& err) {
          c.error = err.what();
          c.search_limit = true;
        } catch (const Error& err) {
          c.error = err.what();
        }
        out.classes.push_back(std::move(c));
      }
    }
    for (const ClassOutcome& c : out.classes) {
      ++r.classes_checked;
      if (!c.error.empty()) {
        ++r.errors;
        r.search_limit = r.search_limit || c.search_limit;
      } else if (c.verdict.value == Value::Unknown) {
        ++r.unknowns;
      } else if (!c.match) {
        ++r.mismatches;
      }
    }
    r.entries.push_back(std::move(out));
  }
  if (axiomatic) r.consistency = classifier.kb().check_consistency(classifier.engine(), n_max);
  if (!r.table.knotting) {
    for (AxiomCheck& c : confirm_linking_axioms(classifier, n_max)) {
      r.axiom_checks.push_back({c.entry->line, c.entry->label(), to_graph6(c.graph),
                                std::string(status_name(c.entry->status)), c.agrees});
    }
  }
  return r;
}

Report table_report(const TableResult& r) {
  Report rep;
  const bool knotting = r.table.knotting;
  rep.add("table", {{"id", std::to_string(r.table.id)}, {"title", r.table.title}});
  for (const EntryOutcome& e : r.entries) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"spec", e.entry->spec},
        {"column", e.entry->column},
        {"expected", std::string(status_name(e.entry->expected))},
        {"result", e.match() ? "match" : "MISMATCH"},
        {"classes", std::to_string(e.classes.size())},
    };
    if (knotting) fields.emplace_back("axioms", e.axioms().empty() ? "none" : join_ints(e.axioms()));
    if (e.entry->isomorphism_only) fields.emplace_back("note", "matched up to isomorphism");
    rep.add("entry", std::move(fields));
    for (const ClassOutcome& c : e.classes) {
      std::vector<std::pair<std::string, std::string>> cf{{"spec", c.spec}};
      if (!c.error.empty()) {
        cf.emplace_back("verdict", "ERROR");
        cf.emplace_back("error", c.error);
      } else {
        cf.emplace_back("verdict", verdict_word(c.verdict, knotting));
      }
      rep.add("class", std::move(cf), 1);
      if (c.error.empty()) add_verdict(rep, c.verdict, 2);
    }
  }
  for (const auto& c : r.axiom_checks) {
    rep.add("axiom-check", {{"line", std::to_string(c.line)},
                            {"fact", c.fact},
                            {"graph6", c.graph6},
                            {"stated", c.stated},
                            {"exact", c.agrees ? "agrees" : "DISAGREES"}});
  }
  if (r.consistency) {
    std::vector<std::pair<std::string, std::string>> fields{
        {"pairs", std::to_string(r.consistency->pairs_checked)},
        {"problems", std::to_string(r.consistency->problems.size())}};
    rep.add("consistency", std::move(fields));
    for (const std::string& p : r.consistency->problems) rep.add("problem", {{"what", p}}, 1);
  }
  rep.add("summary", {{"entries", std::to_string(r.entries.size())},
                      {"classes", std::to_string(r.classes_checked)},
                      {"mismatches", std::to_string(r.mismatches)},
                      {"unknown", std::to_string(r.unknowns)},
                      {"errors", std::to_string(r.errors)},
                      {"status", r.ok() ? "ok" : "FAIL"}});
  return rep;
}

}  // namespace knotlink
