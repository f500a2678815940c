#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "forestsat/graph.hpp"

namespace oracle {

using forestsat::Graph;

/// Edge list as an integer over the C(n,2) pairs (i<j), pair index row-major.
inline std::uint64_t edge_code(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx) {
      if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << idx;
    }
  return code;
}

/// Minimum edge code over all vertex permutations: a certificate of the
/// isomorphism class, practical up to order 8.
inline std::uint64_t permutation_certificate(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_code(g, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && permutation_certificate(a) == permutation_certificate(b);
}

inline Graph from_code(int n, std::uint64_t code) {
  Graph g(n);
  int idx = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++idx)
      if ((code >> idx) & 1U) g.add_edge(i, j);
  return g;
}

/// One representative (the minimum-certificate labeling) per class, from all
/// 2^C(n,2) labeled graphs.
inline std::vector<Graph> labeled_dedup(int n) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> certs;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code)
    certs.insert(permutation_certificate(from_code(n, code)));
  std::vector<Graph> out;
  for (auto c : certs) out.push_back(from_code(n, c));
  return out;
}

/// Matching number by trying every edge subset recursively.
inline int matching_number(const Graph& g) {
  const auto edges = g.edges();
  std::function<int(std::size_t, std::uint64_t)> best = [&](std::size_t i, std::uint64_t used) -> int {
    if (i == edges.size()) return 0;
    int skip = best(i + 1, used);
    const auto& e = edges[i];
    const std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    if ((used & mask) == 0) skip = std::max(skip, 1 + best(i + 1, used | mask));
    return skip;
  };
  return best(0, 0);
}

/// Order of the longest path, by extending every simple vertex sequence.
inline int longest_path_order(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  std::function<void(int, std::uint64_t, int)> walk = [&](int v, std::uint64_t used, int len) {
    best = std::max(best, len);
    for (int u = 0; u < g.order(); ++u)
      if (!((used >> u) & 1U) && g.has_edge(v, u)) walk(u, used | (std::uint64_t{1} << u), len + 1);
  };
  for (int v = 0; v < g.order(); ++v) walk(v, std::uint64_t{1} << v, 1);
  return best;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (const auto& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
