#include <algorithm>

#include "doctest.h"
#include "forestsat/constructions.hpp"
#include "forestsat/graph6.hpp"
#include "forestsat/matching.hpp"
#include "forestsat/saturation.hpp"
#include "oracles.hpp"

using namespace forestsat;

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d = degree_vector(g);
  std::sort(d.rbegin(), d.rend());
  return d;
}

LinearForestSpec p6(int t) { return LinearForestSpec({6}, t); }

}  // namespace

TEST_CASE("basic families") {
  CHECK(complete(6).edge_count() == 15);
  CHECK(empty(4).edge_count() == 0);
  CHECK(star(5).degree(0) == 4);
  CHECK(path(5).edge_count() == 4);
  CHECK(sorted_degrees(book(4)) == std::vector<int>{5, 5, 2, 2, 2, 2});
  CHECK(sorted_degrees(fan(3)) == std::vector<int>{6, 2, 2, 2, 2, 2, 2});
  CHECK(isomorphic(book(1), complete(3)));
  CHECK(isomorphic(fan(1), complete(3)));
  CHECK(ehm(7, 4).edge_count() == 1 + 2 * 5);
  CHECK_THROWS_AS(book(0), std::invalid_argument);
  CHECK_THROWS_AS(ehm(5, 2), std::invalid_argument);
}

TEST_CASE("extremal constructions have the stated sizes") {
  for (int t = 1; t <= 4; ++t) {
    CHECK(tp2_extremal(3 * t - 3 + 2, t).edge_count() == 3 * t - 3);
    CHECK(p3_extremal(3 * t + 2, t).edge_count() == 3 * t);
    CHECK(p4_extremal(3 * t + 4, t).edge_count() == 3 * t + 7);
    CHECK(p5_extremal(3 * t + 5, t).edge_count() == 3 * t + 12);
    CHECK(p6_extremal(3 * t + 6, t).edge_count() == 3 * t + 18);
  }
  CHECK_THROWS_AS(p6_extremal(3 * 2 + 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(p4_extremal(9, 2), std::invalid_argument);
}

TEST_CASE("small extremal constructions are saturated") {
  for (int t = 1; t <= 3; ++t)
    for (int n = std::max(3 * t - 3, 2); n <= 3 * t + 3; ++n)
      CHECK(is_saturated(tp2_extremal(n, t), LinearForestSpec({}, t)).saturated());
  for (int t = 1; t <= 2; ++t) {
    for (int n = 3 * t + 4; n <= 3 * t + 8; ++n)
      CHECK(is_saturated(p4_extremal(n, t), LinearForestSpec({4}, t)).saturated());
    for (int n = 3 * t + 5; n <= 3 * t + 9; ++n)
      CHECK(is_saturated(p5_extremal(n, t), LinearForestSpec({5}, t)).saturated());
  }
}

TEST_CASE("triangles plus isolated vertices are not P3 + tP2-saturated") {
  // t = 1: a pendant edge on the triangle leaves no room for a disjoint P2.
  // t >= 2: an edge between two triangles gives 6 vertices, one short of P3 + 2P2.
  for (int t = 1; t <= 2; ++t)
    for (int n = 3 * t + 2; n <= 3 * t + 4; ++n) {
      CAPTURE(n);
      CAPTURE(t);
      const Graph g = p3_extremal(n, t);
      const LinearForestSpec h({3}, t);
      const SaturationVerdict v = is_saturated(g, h);
      CHECK(v.status == SaturationStatus::NonSaturatingEdge);
      CHECK(!is_saturated_brute_force(g, h));
      CHECK(!brute_force_contains(g.with_edge(0, 3), h));
    }
}

TEST_CASE("K7 plus triangles is saturated over a grid of orders") {
  for (int t = 1; t <= 4; ++t)
    for (int n = 3 * t + 6; n <= 3 * t + 14; ++n) {
      CAPTURE(n);
      CAPTURE(t);
      CHECK(is_saturated(p6_extremal(n, t), p6(t)).saturated());
    }
}

TEST_CASE("tree T and its variants") {
  const Graph t = tree_t();
  CHECK(t.order() == 10);
  CHECK(t.edge_count() == 9);
  CHECK(oracle::longest_path_order(t) == 5);
  CHECK(isomorphic(tree_t_star(10), t));
  const Graph t13 = tree_t_star(13);
  CHECK(t13.order() == 13);
  CHECK(t13.edge_count() == 12);
  CHECK(t13.degree(0) == 4);
  for (int n = 10; n <= 19; ++n) {
    const Graph s = tree_t_star(n);
    CHECK(s.order() == n);
    CHECK(is_connected(s));
    CHECK(s.edge_count() == n - 1);
    CHECK(oracle::longest_path_order(s) == 5);
    CHECK(!contains_path(s, 6));
    CHECK(s.vertices_of_degree(0) == 0);
  }
  CHECK_THROWS_AS(tree_t_star(20), std::invalid_argument);
}

TEST_CASE("G* sizes") {
  for (int n = 14; n <= 30; ++n) {
    const Graph g = g_star(n);
    CHECK(g.order() == n);
    CHECK(g.edge_count() == n - n / 10);
    CHECK(g.min_degree() >= 1);
  }
  CHECK(isomorphic(g_star(20), disjoint_union(tree_t(), tree_t())));
  CHECK(g_star_max_t(14) == 1);
  CHECK(g_star_max_t(20) == 3);
  CHECK(g_star_max_t(29) == 6);
}

TEST_CASE("G* saturation at its claimed range") {
  CHECK(is_saturated(g_star(14), p6(1)).saturated());
  CHECK(is_saturated(g_star(20), p6(3)).saturated());
  CHECK(is_saturated(g_star(23), p6(g_star_max_t(23))).saturated());
}

TEST_CASE("book and fan recognition") {
  for (int k = 1; k <= 6; ++k) {
    CHECK(is_book(book(k)) == k);
    CHECK(is_fan(fan(k)) == k);
    std::mt19937_64 rng(k);
    CHECK(is_book(oracle::permuted(book(k), oracle::random_permutation(rng, k + 2))) == k);
  }
  CHECK(!is_book(fan(2)));
  CHECK(!is_fan(book(3)));
  CHECK(!is_book(complete(5)));
  CHECK(!is_fan(path(5)));
}

TEST_CASE("describe") {
  CHECK(describe(disjoint_union(complete(3), empty(3))) == "K3+3K1");
  CHECK(describe(star(4)) == "S4");
  CHECK(describe(p6_extremal(16, 2)) == "K7+K3+6K1");
  CHECK(describe(g_star(23)) == "T*13+T");
  CHECK(describe(book(4)) == "B4");
  CHECK(describe(fan(3)) == "F3");
  CHECK(describe(path(5)) == "P5");
  CHECK(describe(Graph(0)) == "K0");
}

TEST_CASE("recipes") {
  const Graph g = ConstructionRecipe{"p6-extremal", {{"n", 16}, {"t", 2}}}.build();
  CHECK(g == p6_extremal(16, 2));
  CHECK(ConstructionRecipe{"book", {{"k", 3}}}.build() == book(3));
  CHECK(ConstructionRecipe{"g-star", {{"n", 23}}}.build() == g_star(23));
  CHECK_THROWS_AS((ConstructionRecipe{"nonsense", {}}.build()), std::invalid_argument);
  CHECK_THROWS_AS((ConstructionRecipe{"book", {}}.build()), std::invalid_argument);
  CHECK(recipe_catalogue().size() == 15);
  CHECK((ConstructionRecipe{"tree-t", {}}.build() == tree_t()));
}
