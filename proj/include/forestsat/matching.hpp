#pragma once

#include <vector>

#include "forestsat/graph.hpp"

namespace forestsat {

struct Matching {
  std::vector<Edge> edges;

  int size() const { return static_cast<int>(edges.size()); }
  /// True if every pair is an edge of g and the pairs are vertex-disjoint.
  bool valid_in(const Graph& g) const;
};

/// Maximum matching of the subgraph induced by `allowed` (Edmonds' blossom
/// algorithm seeded with a greedy matching).
Matching max_matching(const Graph& g, VertexSet allowed);
Matching max_matching(const Graph& g);
int matching_number(const Graph& g, VertexSet allowed);
int matching_number(const Graph& g);

/// Minimiser of (|G| + |S| - o(G - S)) / 2 over all vertex subsets S.
struct DeficiencyCertificate {
  VertexSet witness_set = 0;
  int odd_components = 0;
  int value = 0;
};

inline constexpr int kBergeTutteMaxOrder = 20;

/// Scans all 2^n subsets; ties go to the numerically least mask.
/// Throws std::invalid_argument above kBergeTutteMaxOrder.
DeficiencyCertificate berge_tutte_min(const Graph& g);

/// Number of odd-order components of g - removed.
int odd_components(const Graph& g, VertexSet removed);

bool verify_berge_tutte(const Graph& g);

}  // namespace forestsat
