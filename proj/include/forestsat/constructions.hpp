#pragma once

#include <map>
#include <optional>
#include <string>

#include "forestsat/graph.hpp"

namespace forestsat {

// Labeling convention: the fixed part comes first (clique or tree core,
// then triangles), isolated vertices last.

Graph complete(int n);
Graph empty(int n);
/// Star S_n of order n: centre 0, leaves 1..n-1.
Graph star(int n);
/// Path P_n: 0-1-...-(n-1).
Graph path(int n);
/// Book B_k: spine 0-1, page vertices 2..k+1.
Graph book(int k);
/// Fan F_k: centre 0, triangles {0, 2i+1, 2i+2}.
Graph fan(int k);

/// K_{t-2} joined with the empty graph on n-t+2 vertices (K_t-saturated).
Graph ehm(int n, int t);

/// (t-1)K3 + empty(n-3t+3), n >= 3t-3.
Graph tp2_extremal(int n, int t);
/// tK3 + empty(n-3t), n >= 3t+2.
Graph p3_extremal(int n, int t);
/// K5 + (t-1)K3 + empty(n-3t-2), n >= 3t+4.
Graph p4_extremal(int n, int t);
/// K6 + (t-1)K3 + empty(n-3t-3), n >= 3t+5.
Graph p5_extremal(int n, int t);
/// K7 + (t-1)K3 + empty(n-3t-4), n >= 3t+6.
Graph p6_extremal(int n, int t);

/// Order-10 spider: centre 0, branch vertices 1..3, two leaves under each.
Graph tree_t();
/// Order n = 10 + r tree, 0 <= r <= 9: a star S_{4+r/3} whose leaves all get
/// two pendant leaves except the last, which takes the remaining 2 + r%3.
Graph tree_t_star(int n);
/// (q-1) copies of tree_t() followed by tree_t_star(10 + r), n = 10q + r.
Graph g_star(int n);

/// Largest t for which g_star(n) is claimed (P6 + tP2)-saturated: 3q + floor(r/3) - 3.
int g_star_max_t(int n);

std::optional<int> is_book(const Graph& g);
std::optional<int> is_fan(const Graph& g);

/// Human-readable name built from component names, e.g. "K7+2K3+5K1".
std::string describe(const Graph& g);

/// Named parametric builder.
struct ConstructionRecipe {
  std::string name;
  std::map<std::string, int> params;

  Graph build() const;
};

/// Recipe names accepted by ConstructionRecipe::build, with their parameters.
const std::map<std::string, std::string>& recipe_catalogue();

}  // namespace forestsat
