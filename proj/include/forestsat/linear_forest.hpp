#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "forestsat/graph.hpp"

namespace forestsat {

class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(const std::string& what, int column)
      : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}
  int column() const { return column_; }

 private:
  int column_;
};

/// Target H = P_{k1} + ... + P_{km} + t P2. Paths of order 2 are folded into t.
struct LinearForestSpec {
  /// Path orders, each >= 3, sorted descending.
  std::vector<int> paths;
  int t = 0;

  LinearForestSpec() = default;
  LinearForestSpec(std::vector<int> path_orders, int pairs);

  int vertex_demand() const;
  bool empty() const { return paths.empty() && t == 0; }
  /// Order of the single long path when the target is P_k + tP2 (k = 2 for pure tP2).
  std::optional<int> single_path_order() const;

  /// Round-trips through parse: "P6+2P2", "3P2", "P5+P2".
  std::string to_string() const;
  /// Grammar: term ('+' term)*, term = [count] 'P' order, order >= 2.
  static LinearForestSpec parse(std::string_view text);

  /// The target itself as a graph: paths first, then the P2 pairs.
  Graph as_graph() const;

  friend bool operator==(const LinearForestSpec&, const LinearForestSpec&) = default;
};

/// A copy of a linear forest inside a host graph.
struct Embedding {
  std::vector<std::vector<int>> paths;
  std::vector<Edge> pairs;

  VertexSet vertices() const;
  /// Checks disjointness, adjacency and that the shape matches `spec`.
  bool valid_in(const Graph& g, const LinearForestSpec& spec) const;
};

/// A path on k vertices, if one exists (k >= 1).
std::optional<std::vector<int>> contains_path(const Graph& g, int k);

/// Longest paths by backtracking; the tP2 residue is settled by a maximum
/// matching on the unused vertices.
std::optional<Embedding> contains_linear_forest(const Graph& g, const LinearForestSpec& spec);
inline bool contains(const Graph& g, const LinearForestSpec& spec) {
  return contains_linear_forest(g, spec).has_value();
}

inline constexpr int kBruteForceMaxDemand = 12;
inline constexpr int kBruteForceMaxOrder = 10;

/// Exhaustive injective assignment of the target's vertices; independent of
/// the path/matching machinery. Throws std::invalid_argument over the limits.
bool brute_force_contains(const Graph& g, const LinearForestSpec& spec);

/// Generic subgraph containment of `pattern` in `host` by exhaustive
/// injective assignment with adjacency pruning.
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace forestsat
