#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace forestsat {

/// Largest supported order: one adjacency row per machine word.
inline constexpr int kMaxOrder = 64;

/// Bit v set means vertex v is in the set.
using VertexSet = std::uint64_t;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

/// Visits the members of a vertex set in increasing order.
template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(lowest(s));
    s &= s - 1;
  }
}

struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..order-1, adjacency kept as bit rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return order_; }
  VertexSet vertices() const { return first_n(order_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighbors(int v) const { return adj_[v] | bit(v); }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  /// Removes every edge at v; v stays as an isolated vertex.
  void isolate(int v);

  Graph with_edge(int u, int v) const;
  std::vector<Edge> edges() const;

  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;

  /// Vertices of degree exactly d.
  VertexSet vertices_of_degree(int d) const;
  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Degrees in non-increasing order.
std::vector<int> degree_vector(const Graph& g);

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

std::vector<Edge> complement_edges(const Graph& g);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
/// True if the component induced by `comp` has exactly |comp|-1 edges.
bool is_tree_component(const Graph& g, VertexSet comp);

}  // namespace forestsat
