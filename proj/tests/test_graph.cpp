#include <random>

#include "doctest.h"
#include "forestsat/constructions.hpp"
#include "forestsat/enumeration.hpp"
#include "forestsat/graph.hpp"
#include "forestsat/graph6.hpp"
#include "oracles.hpp"

using namespace forestsat;

namespace {

std::vector<int> sizes(const Graph& g) {
  std::vector<int> out;
  for (VertexSet c : components(g)) out.push_back(popcount(c));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST_CASE("degree vectors") {
  CHECK(degree_vector(complete(3)) == std::vector<int>{2, 2, 2});
  CHECK(degree_vector(tree_t()) == std::vector<int>{3, 3, 3, 3, 1, 1, 1, 1, 1, 1});
  CHECK(degree_vector(empty(5)) == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("components") {
  CHECK(sizes(disjoint_union(complete(3), empty(2))) == std::vector<int>{3, 1, 1});
  CHECK(sizes(p6_extremal(16, 3)) == std::vector<int>{7, 3, 3, 1, 1, 1});
  CHECK(components(path(6)).size() == 1);
  CHECK(components(Graph(0)).empty());
}

TEST_CASE("complement edges") {
  CHECK(complement_edges(complete(4)).empty());
  CHECK(complement_edges(empty(3)).size() == 3);
  const auto p3 = complement_edges(path(3));
  REQUIRE(p3.size() == 1);
  CHECK(p3.front() == Edge(0, 2));
}

TEST_CASE("disjoint union and join") {
  const Graph two_triangles = disjoint_union(complete(3), complete(3));
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK(!two_triangles.has_edge(0, 3));
  CHECK(disjoint_union(empty(0), tree_t()) == tree_t());

  const Graph mixed = disjoint_union(tree_t(), tree_t_star(13));
  CHECK(mixed.order() == 23);
  CHECK(mixed.edge_count() == 21);

  CHECK(join(complete(2), empty(4)).edge_count() == 9);
  CHECK(join(empty(1), empty(5)) == star(6));
  CHECK(join(empty(0), fan(2)) == fan(2));

  CHECK_THROWS_AS(disjoint_union(empty(40), empty(30)), std::out_of_range);
}

TEST_CASE("degree sum equals twice the edge count") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    int sum = 0;
    for (int d : degree_vector(g)) sum += d;
    CHECK(sum == 2 * g.edge_count());
  }
}

TEST_CASE("edge and vertex validation") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(Graph(65), std::out_of_range);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.isolate(1);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("graph6 known encodings") {
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(parse_graph6("Bg") == path(3));
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);     // missing body
  CHECK_THROWS_AS(parse_graph6("Bx"), Graph6Error);    // padding bit set
  CHECK_THROWS_AS(parse_graph6("B!"), Graph6Error);    // byte below 63
  CHECK_THROWS_AS(parse_graph6("~?A?"), Graph6Error);  // order 128 over cap
  CHECK_THROWS_AS(parse_graph6("~??}"), Graph6Error);  // order 62 must use the short form
}

TEST_CASE("graph6 long form for orders 63 and 64") {
  std::mt19937_64 rng(3);
  for (int n : {63, 64}) {
    const Graph g = oracle::random_graph(rng, n, 0.1);
    const std::string text = to_graph6(g);
    CHECK(text[0] == '~');
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("graph6 round trip on every graph of order <= 7") {
  long count = 0;
  for (int n = 0; n <= 7; ++n) {
    enumerate_graphs(n, {}, [&](const Graph& g) {
      const std::string text = to_graph6(g);
      CHECK(to_graph6(parse_graph6(text)) == text);
      CHECK(parse_graph6(text) == g);
      ++count;
    });
  }
  CHECK(count == 1253);
}

TEST_CASE("graph6 strings produced by an external encoder") {
  // networkx.to_graph6_bytes(path_graph(64)) and (star_graph(6)).
  const std::string path64 =
      "~?@?hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@"
      "?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G?"
      "??????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_???????"
      "??G?????????@";
  CHECK(to_graph6(path(64)) == path64);
  CHECK(parse_graph6(path64) == path(64));
  CHECK(to_graph6(star(7)) == "FsaC?");
}
