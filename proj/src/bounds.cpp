#include "knotlink/errors.hpp"
#include "knotlink/minor.hpp"

namespace knotlink {

int BoundRule::target_order() const {
  switch (target) {
    case BoundTarget::K5: return 5;
    case BoundTarget::K6: return 6;
    case BoundTarget::K7: return 7;
  }
  return 0;
}

std::string BoundRule::name() const { return "K" + std::to_string(target_order()); }

bool guarantees_minor(int n, int m, const BoundRule& rule) {
  if (n < rule.min_order) {
    throw PreconditionError(rule.name() + " edge bound needs at least " +
                            std::to_string(rule.min_order) + " vertices, got " +
                            std::to_string(n));
  }
  return m >= rule.threshold(n);
}

BoundReport verify_bound_exhaustive(int n, const BoundRule& rule, MinorEngine& engine) {
  if (n > 8) throw CapacityError("exhaustive bound verification supports n <= 8");
  if (n < rule.min_order) {
    throw PreconditionError(rule.name() + " edge bound needs at least " +
                            std::to_string(rule.min_order) + " vertices");
  }
  BoundReport report;
  report.n = n;
  report.rule = rule;
  report.threshold = rule.threshold(n);
  const Graph target = Graph::complete(rule.target_order());
  for (const Graph& g : enumerate_graphs(n, report.threshold - 1)) {
    const bool has = engine.has_minor(g, target);
    if (g.size() >= report.threshold) {
      ++report.checked;
      if (!has) report.violations.push_back(g);
    } else if (!has && !report.below_threshold_witness) {
      report.below_threshold_witness = g;
    }
  }
  return report;
}

}  // namespace knotlink
