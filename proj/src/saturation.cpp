#include "forestsat/saturation.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>

#include "forestsat/enumeration.hpp"
#include "forestsat/graph6.hpp"

namespace forestsat {

std::string to_string(SaturationStatus status) {
  switch (status) {
    case SaturationStatus::Saturated:
      return "Saturated";
    case SaturationStatus::ContainsH:
      return "ContainsH";
    case SaturationStatus::NonSaturatingEdge:
      return "NonSaturatingEdge";
  }
  return "?";
}

bool is_free(const Graph& g, const LinearForestSpec& spec) { return !contains(g, spec); }

SaturationVerdict is_saturated(const Graph& g, const LinearForestSpec& spec) {
  SaturationVerdict verdict;
  if (auto found = contains_linear_forest(g, spec)) {
    verdict.status = SaturationStatus::ContainsH;
    verdict.embedding = std::move(found);
    return verdict;
  }
  for (const Edge& e : complement_edges(g)) {
    if (!contains(g.with_edge(e.u, e.v), spec)) {
      verdict.status = SaturationStatus::NonSaturatingEdge;
      verdict.edge = e;
      return verdict;
    }
  }
  return verdict;
}

bool is_saturated_brute_force(const Graph& g, const LinearForestSpec& spec) {
  if (brute_force_contains(g, spec)) return false;
  for (const Edge& e : complement_edges(g))
    if (!brute_force_contains(g.with_edge(e.u, e.v), spec)) return false;
  return true;
}

bool sat_formula_in_range(int n, int t) { return t >= 1 && 3 * n >= 10 * t + 30; }

int sat_formula(int n, int t) {
  if (!sat_formula_in_range(n, t))
    throw std::invalid_argument("sat_formula: (n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                                ") outside n >= ceil(10t/3) + 10, t >= 1");
  return std::min(n - n / 10, 3 * t + 18);
}

std::optional<ReferenceValue> reference_value(int n, const LinearForestSpec& spec) {
  const int t = spec.t;
  if (spec.paths.empty()) {
    if (t >= 1 && n >= 3 * t - 3) return ReferenceValue{3 * t - 3, "sat(n,tP2) = 3t-3 for n >= 3t-3", false};
    return std::nullopt;
  }
  if (spec.paths.size() != 1 || t < 1) return std::nullopt;
  switch (spec.paths.front()) {
    case 3:
      return ReferenceValue{3 * t, "sat(n,P3+tP2) = 3t for n sufficiently large", true};
    case 4:
      return ReferenceValue{3 * t + 7, "sat(n,P4+tP2) = 3t+7 for n sufficiently large", true};
    case 5:
      if (n >= 3 * t + 8)
        return ReferenceValue{std::min((5 * n - 4 + 5) / 6, 3 * t + 12),
                              "sat(n,P5+tP2) = min{ceil((5n-4)/6), 3t+12} for n >= 3t+8", false};
      return std::nullopt;
    case 6:
      if (sat_formula_in_range(n, t))
        return ReferenceValue{sat_formula(n, t),
                              "sat(n,P6+tP2) = min{n-floor(n/10), 3t+18} for n >= 10t/3+10", false};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

int default_edge_bound(int n, const LinearForestSpec& spec) {
  if (spec.paths.size() == 1 && spec.paths.front() == 6 && sat_formula_in_range(n, spec.t))
    return sat_formula(n, spec.t);
  return n * (n - 1) / 2;
}

namespace {

struct LocalBest {
  int min_edges = std::numeric_limits<int>::max();
  std::vector<CanonicalForm> forms;
  long examined = 0;

  void offer(const Graph& g, const LinearForestSpec& spec) {
    ++examined;
    const int e = g.edge_count();
    if (e > min_edges) return;
    if (!is_saturated(g, spec).saturated()) return;
    if (e < min_edges) {
      min_edges = e;
      forms.clear();
    }
    forms.push_back(canonical_form(g));
  }
};

SearchReport merge(int n, const LinearForestSpec& spec, int bound, std::string source,
                   const std::vector<LocalBest>& locals) {
  SearchReport report;
  report.n = n;
  report.spec = spec;
  report.edge_bound = bound;
  report.source = std::move(source);
  report.vacuous = is_vacuous(n, spec);
  report.reference = reference_value(n, spec);
  int best = std::numeric_limits<int>::max();
  for (const auto& l : locals) {
    report.examined += l.examined;
    best = std::min(best, l.min_edges);
  }
  if (best == std::numeric_limits<int>::max()) return report;
  report.min_edges = best;
  for (const auto& l : locals)
    if (l.min_edges == best) report.extremal.insert(report.extremal.end(), l.forms.begin(), l.forms.end());
  std::sort(report.extremal.begin(), report.extremal.end());
  report.extremal.erase(std::unique(report.extremal.begin(), report.extremal.end()), report.extremal.end());

  if (n <= kBruteForceMaxOrder && spec.vertex_demand() <= kBruteForceMaxDemand) {
    report.reverified = std::all_of(report.extremal.begin(), report.extremal.end(), [&](const CanonicalForm& f) {
      const Graph g = parse_graph6(f.str());
      return g.edge_count() == best && is_saturated_brute_force(g, spec);
    });
  }
  return report;
}

int resolve_bound(int n, const LinearForestSpec& spec, std::optional<int> edge_bound) {
  const int bound = edge_bound.value_or(default_edge_bound(n, spec));
  if (bound < 0) throw std::invalid_argument("min_sat_search: negative edge bound");
  return bound;
}

}  // namespace

SearchReport min_sat_search(int n, const LinearForestSpec& spec, std::optional<int> edge_bound, int jobs) {
  if (n < 0 || n > kEnumerationMaxOrder)
    throw std::invalid_argument("min_sat_search: built-in enumeration covers n <= " +
                                std::to_string(kEnumerationMaxOrder));
  const int bound = resolve_bound(n, spec, edge_bound);
  std::vector<LocalBest> locals(std::max(jobs, 1));
  EnumFilter filter;
  filter.max_edges = bound;
  enumerate_graphs_parallel(n, filter, jobs,
                            [&](const Graph& g, int worker) { locals[worker].offer(g, spec); });
  return merge(n, spec, bound, "enumeration", locals);
}

SearchReport min_sat_search(int n, const LinearForestSpec& spec, const std::vector<Graph>& candidates,
                            std::optional<int> edge_bound, int jobs) {
  const int bound = resolve_bound(n, spec, edge_bound);
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (candidates[i].order() != n)
      throw std::invalid_argument("min_sat_search: candidate " + std::to_string(i + 1) + " has order " +
                                  std::to_string(candidates[i].order()) + ", expected " + std::to_string(n));
  std::vector<LocalBest> locals(std::max(jobs, 1));
  parallel_for(candidates.size(), jobs, [&](std::size_t i, int worker) {
    if (candidates[i].edge_count() <= bound) locals[worker].offer(candidates[i], spec);
  });
  return merge(n, spec, bound, "stream", locals);
}

}  // namespace forestsat
