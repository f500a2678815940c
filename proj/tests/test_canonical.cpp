#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "forestsat/canonical.hpp"
#include "forestsat/constructions.hpp"
#include "forestsat/graph6.hpp"
#include "oracles.hpp"

using namespace forestsat;

TEST_CASE("relabeled paths share a canonical form") {
  Graph a(3, {{0, 1}, {1, 2}});
  Graph b(3, {{1, 0}, {0, 2}});
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("K3+K1 and S4 are distinguished") {
  CHECK(canonical_form(disjoint_union(complete(3), empty(1))) != canonical_form(star(4)));
}

TEST_CASE("labeled graphs on 4 vertices fall into 11 canonical forms") {
  std::set<CanonicalForm> forms;
  for (std::uint64_t code = 0; code < 64; ++code) forms.insert(canonical_form(oracle::from_code(4, code)));
  CHECK(forms.size() == 11);
}

TEST_CASE("canonical form is invariant under random relabeling") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const Graph g = oracle::random_graph(rng, n, p);
    const Graph h = oracle::permuted(g, oracle::random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical form separates every pair of non-isomorphic graphs of order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const auto classes = oracle::labeled_dedup(n);
    std::set<CanonicalForm> forms;
    for (const Graph& g : classes) forms.insert(canonical_form(g));
    CHECK(forms.size() == classes.size());
  }
}

TEST_CASE("canonical labeling output is consistent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const CanonicalLabeling lab = canonical_labeling(g);
    CHECK(oracle::permuted(g, lab.label) == lab.graph);
    for (const auto& gen : lab.generators) CHECK(oracle::permuted(g, gen) == g);
  }
}

TEST_CASE("orbits of symmetric graphs") {
  // Star: the centre is alone, the leaves form one orbit.
  const CanonicalLabeling lab = canonical_labeling(star(6));
  for (int v = 2; v < 6; ++v) CHECK(lab.orbit[v] == lab.orbit[1]);
  CHECK(lab.orbit[0] != lab.orbit[1]);

  // Spider tree T: centre, branch vertices, leaves.
  const CanonicalLabeling t = canonical_labeling(tree_t());
  std::set<int> orbits(t.orbit.begin(), t.orbit.end());
  CHECK(orbits.size() == 3);
}

TEST_CASE("large symmetric graphs canonicalise quickly") {
  const Graph g = disjoint_union(p6_extremal(38, 4), empty(10));
  const Graph h = oracle::permuted(g, [] {
    std::mt19937_64 rng(5);
    return oracle::random_permutation(rng, 48);
  }());
  CHECK(canonical_form(g) == canonical_form(h));
  CHECK(canonical_form(empty(64)) == canonical_form(empty(64)));
  CHECK(isomorphic(g_star(40), oracle::permuted(g_star(40), [] {
    std::mt19937_64 rng(6);
    return oracle::random_permutation(rng, 40);
  }())));
}

TEST_CASE("colour classes restrict the isomorphism") {
  const Graph p = path(4);
  const VertexSet end0[] = {bit(0), bit(1) | bit(2) | bit(3)};
  const VertexSet end3[] = {bit(3), bit(0) | bit(1) | bit(2)};
  const VertexSet mid1[] = {bit(1), bit(0) | bit(2) | bit(3)};
  CHECK(canonical_form(p, end0) == canonical_form(p, end3));
  CHECK(canonical_form(p, end0) != canonical_form(p, mid1));
  const VertexSet bad[] = {bit(0)};
  CHECK_THROWS_AS(canonical_labeling(p, bad), std::invalid_argument);
}
