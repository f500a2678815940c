#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forestsat/canonical.hpp"
#include "forestsat/graph.hpp"
#include "forestsat/linear_forest.hpp"

namespace forestsat {

enum class SaturationStatus { Saturated, ContainsH, NonSaturatingEdge };

std::string to_string(SaturationStatus status);

struct SaturationVerdict {
  SaturationStatus status = SaturationStatus::Saturated;
  /// Set for ContainsH.
  std::optional<Embedding> embedding;
  /// Set for NonSaturatingEdge: a non-edge whose addition leaves g H-free.
  std::optional<Edge> edge;

  bool saturated() const { return status == SaturationStatus::Saturated; }
};

bool is_free(const Graph& g, const LinearForestSpec& spec);

/// Free check first, then every non-edge in order; stops at the first failure.
SaturationVerdict is_saturated(const Graph& g, const LinearForestSpec& spec);

/// Same predicate decided with brute_force_contains only.
bool is_saturated_brute_force(const Graph& g, const LinearForestSpec& spec);

/// Fewer vertices than the target needs: only K_n is (vacuously) saturated.
inline bool is_vacuous(int n, const LinearForestSpec& spec) { return n < spec.vertex_demand(); }

/// min{n - floor(n/10), 3t + 18}, defined for n >= ceil(10t/3) + 10.
int sat_formula(int n, int t);
bool sat_formula_in_range(int n, int t);

/// Known value from the literature for the small linear forests, if the
/// parameters fall inside the stated range.
struct ReferenceValue {
  int value = 0;
  std::string source;
  /// True when the result only holds for sufficiently large n.
  bool asymptotic = false;
};
std::optional<ReferenceValue> reference_value(int n, const LinearForestSpec& spec);

struct SearchReport {
  int n = 0;
  LinearForestSpec spec;
  int edge_bound = 0;
  std::string source;
  bool vacuous = false;
  std::optional<int> min_edges;
  /// Canonical graph6 of every minimum attainer, sorted.
  std::vector<CanonicalForm> extremal;
  long examined = 0;
  /// Extremal graphs re-checked with the brute-force oracle (n <= 10).
  bool reverified = false;
  std::optional<ReferenceValue> reference;
};

/// Default edge bound: sat_formula(n, t) for in-range P6 + tP2, else C(n,2).
int default_edge_bound(int n, const LinearForestSpec& spec);

/// Exhaustive search over the built-in enumeration (n <= 10).
SearchReport min_sat_search(int n, const LinearForestSpec& spec, std::optional<int> edge_bound = {},
                            int jobs = 1);
/// Search over an externally supplied set of order-n graphs. Duplicates up
/// to isomorphism are tolerated; extremal graphs are deduplicated.
SearchReport min_sat_search(int n, const LinearForestSpec& spec, const std::vector<Graph>& candidates,
                            std::optional<int> edge_bound = {}, int jobs = 1);

}  // namespace forestsat
