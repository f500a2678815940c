#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "forestsat/graph.hpp"

namespace forestsat {

/// Result of a canonical labeling search.
struct CanonicalLabeling {
  /// label[v] is the canonical position of vertex v.
  std::vector<int> label;
  /// g relabeled by `label`.
  Graph graph;
  /// Automorphisms found during the search; they generate the full group
  /// of automorphisms preserving the initial colouring.
  std::vector<std::vector<int>> generators;
  /// orbit[v] is the smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
};

/// Canonical labeling of g. `colours` is an ordered partition of the vertex
/// set; automorphisms must preserve it. Empty means the unit partition.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colours = {});

/// graph6 text of the canonically relabeled graph. Equal iff isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& str() const { return bytes_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

CanonicalForm canonical_form(const Graph& g);
/// Canonical form of g with the given colour classes kept fixed.
CanonicalForm canonical_form(const Graph& g, std::span<const VertexSet> colours);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace forestsat
