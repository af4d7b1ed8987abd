// One PASS/FAIL line per acceptance criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "knotlink/canonical.hpp"
#include "knotlink/census.hpp"
#include "knotlink/commands.hpp"
#include "knotlink/family.hpp"
#include "knotlink/partite.hpp"
#include "knotlink/tables.hpp"
#include "oracle.hpp"

using namespace knotlink;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& what, double limit_seconds,
               const std::function<Outcome()>& body) {
  default_engine().clear_cache();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = out.ok && secs < limit_seconds;
  if (!pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs, limit %.0fs", secs, limit_seconds);
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " (" << timing
            << ")";
  if (!out.detail.empty()) std::cout << " -- " << out.detail;
  std::cout << std::endl;
}

Classifier fresh() { return Classifier(KnowledgeBase::load_default()); }

Outcome tables_green(std::initializer_list<int> ids, bool knotting) {
  Classifier c = fresh();
  std::ostringstream detail;
  bool ok = true;
  for (int id : ids) {
    const TableResult r = run_table(id, c);
    detail << "table " << id << ": " << r.classes_checked << " classes, " << r.mismatches
           << " mismatches, " << r.unknowns << " unknown, " << r.errors << " errors; ";
    ok = ok && r.ok();
    for (const EntryOutcome& e : r.entries) {
      // Linking tables use no axioms at all.
      if (!knotting && !e.axioms().empty()) ok = false;
    }
    if (knotting) {
      const Report report = table_report(r);
      for (const ReportLine& line : report.lines()) {
        if (line.tag != "entry") continue;
        bool has_axioms = false;
        for (const auto& f : line.fields) has_axioms = has_axioms || f.first == "axioms";
        ok = ok && has_axioms;
      }
    }
  }
  return {ok, detail.str()};
}

bool linking_of(Classifier& c, const char* spec, Value expected) {
  return c.decide_linking(build_graph(parse_spec(spec))).value == expected;
}

std::string capture_cli(const std::string& args) {
#ifdef KNOTLINK_CLI
  const std::string cmd = std::string(KNOTLINK_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  pclose(pipe);
  return out;
#else
  (void)args;
  return {};
#endif
}

}  // namespace

int main() {
  criterion(1, "K6 family under both moves has 7 members including K6, K3,3,1, K4,4-e, petersen", 5,
            [] {
              const CommandResult r = cmd_family("k6", {true, true});
              const Graph seeds[] = {Graph::complete(6)};
              const std::string names[] = {"K6"};
              const FamilyClosure f = compute_closure(seeds, names, {true, true});
              const int k331[] = {3, 3, 1};
              const bool named = f.find(Graph::complete(6)) >= 0 &&
                                 f.find(complete_multipartite(k331)) >= 0 &&
                                 f.find(delete_edge(named_graph("K4,4"), 0, 4)) >= 0 &&
                                 f.find(petersen_graph()) >= 0;
              return Outcome{f.members.size() == 7 && named && r.exit_code == kExitOk,
                             std::to_string(f.members.size()) + " members"};
            });

  criterion(2, "linking tables 1, 3, 5, 6 reproduce with no axioms", 300, [] {
    Outcome o = tables_green({1, 3, 5, 6}, false);
    Classifier c = fresh();
    const bool spot = linking_of(c, "2,2,1,1,1-(b,c)", Value::Positive) &&
                      linking_of(c, "2,2,1,1,1-(a,b)", Value::Negative);
    o.ok = o.ok && spot;
    o.detail += spot ? "2,2,1,1,1-(b,c) LINKED, -(a,b) NOT_LINKED" : "spot check failed";
    return o;
  });

  criterion(3, "knotting tables 4, 7, 8 reproduce with per-entry axioms; cited table consistent", 600,
            [] {
              Outcome o = tables_green({4, 7, 8}, true);
              Classifier c = fresh();
              const TableResult t2 = run_table(2, c);
              const bool consistent = t2.ok() && t2.consistency && t2.consistency->ok();
              o.ok = o.ok && consistent;
              o.detail += "table 2 consistency " +
                          std::string(consistent ? "ok" : "FAILED") + " (" +
                          std::to_string(t2.consistency ? t2.consistency->pairs_checked : 0) +
                          " pairs)";
              return o;
            });

  criterion(4, "eight-vertex census counts, class totals, named graphs, total discrepancy", 600, [] {
    Classifier c = fresh();
    const CensusReport r = run_census(c);
    std::ostringstream d;
    d << "knotted per k:";
    for (const CensusLevel& l : r.levels) d << ' ' << l.knotted;
    d << "; total " << r.total_knotted << " vs stated " << kStatedKnottedTotal;
    const bool noted = r.total_knotted == kStatedKnottedTotal || !r.notes.empty();
    return Outcome{r.ok() && noted, d.str()};
  });

  criterion(5, "edge bounds hold exhaustively; K6-e lacks a K6 minor", 900, [] {
    struct Case {
      BoundRule rule;
      int lo, hi;
    };
    const Case cases[] = {{BoundRule::k6(), 6, 8}, {BoundRule::k7(), 7, 8}, {BoundRule::k5(), 5, 7}};
    int violations = 0;
    int checked = 0;
    for (const Case& c : cases) {
      for (int n = c.lo; n <= c.hi; ++n) {
        const BoundReport r = verify_bound_exhaustive(n, c.rule);
        violations += static_cast<int>(r.violations.size());
        checked += r.checked;
      }
    }
    const bool sharp = !has_minor(delete_edge(Graph::complete(6), 0, 1), Graph::complete(6));
    return Outcome{violations == 0 && sharp && checked > 0,
                   std::to_string(checked) + " classes checked, " + std::to_string(violations) +
                       " violations"};
  });

  criterion(6, "property suites: minor oracle, move round trips, relabeling, coning", 600, [] {
    std::ostringstream d;
    bool ok = true;
    // Minor search against brute force, hosts up to 5 vertices.
    std::vector<Graph> small;
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : oracle::all_classes(n)) small.push_back(g);
    }
    int pairs = 0;
    for (const Graph& h : small) {
      for (const Graph& p : small) {
        if (p.order() > h.order()) continue;
        const auto w = find_minor_witness(h, p);
        ok = ok && w.has_value() == oracle::has_minor(h, p) && (!w || validate_witness(h, p, *w));
        ++pairs;
      }
    }
    d << pairs << " minor pairs";
    std::mt19937 rng(1);
    int trips = 0;
    while (trips < 1000) {
      const int n = 3 + static_cast<int>(rng() % 12);
      Graph g(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng() % 2) g.add_edge(u, v);
        }
      }
      const int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n),
                z = static_cast<int>(rng() % n);
      if (x == y || y == z || x == z || !g.has_edge(x, y) || !g.has_edge(y, z) || !g.has_edge(x, z)) {
        continue;
      }
      ok = ok && y_delta(delta_y(g, x, y, z), n).edges() == g.edges();
      ++trips;
    }
    d << ", " << trips << " round trips";
    int relabels = 0;
    for (; relabels < 1000; ++relabels) {
      const int n = 1 + static_cast<int>(rng() % 16);
      Graph g(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng() % 3 == 0) g.add_edge(u, v);
        }
      }
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      ok = ok && canonical_form(relabel(g, perm)) == canonical_form(g);
    }
    d << ", " << relabels << " relabelings";
    Classifier c = fresh();
    int coned = 0;
    for (int n = 1; n <= 6; ++n) {
      for (const Graph& h : oracle::all_classes(n)) {
        const bool linked = c.decide_linking(join(h, Graph(1))).value == Value::Positive;
        ok = ok && linked == oracle::nonplanar(h);
        ++coned;
      }
    }
    d << ", " << coned << " coned graphs";
    return Outcome{ok, d.str()};
  });

  criterion(7, "porcelain output is byte-identical across runs", 600, [] {
    auto run = [] {
      default_engine().clear_cache();
      Classifier c = fresh();
      std::string out = cmd_table(8, 7, c).report.porcelain();
      out += cmd_census8(true, true, c).report.porcelain();
      out += cmd_family("k7", {true, false}).report.porcelain();
      out += cmd_classify("3,2,2,1,1-{(d,e),e}", true, true, c).report.porcelain();
      return out;
    };
    const std::string first = run();
    const std::string second = run();
    bool ok = first == second && !first.empty();
    std::string detail = std::to_string(first.size()) + " bytes in process";
#ifdef KNOTLINK_CLI
    const std::string args = "census8 --list --graph6 --porcelain";
    const std::string a = capture_cli(args);
    const std::string b = capture_cli(args);
    ok = ok && a == b && !a.empty();
    detail += ", " + std::to_string(a.size()) + " bytes from two CLI runs";
#endif
    return Outcome{ok, detail};
  });

  return failures == 0 ? 0 : 1;
}
