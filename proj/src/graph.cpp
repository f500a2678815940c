#include "forestsat/graph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace forestsat {

namespace {

void check_order(int order) {
  if (order < 0 || order > kMaxOrder)
    throw std::out_of_range("graph order " + std::to_string(order) + " outside 0.." +
                            std::to_string(kMaxOrder));
}

}  // namespace

Graph::Graph(int order) : order_(order) { check_order(order); }

Graph::Graph(int order, const std::vector<Edge>& edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= order_ || v >= order_)
    throw std::invalid_argument("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

void Graph::isolate(int v) {
  for_each_vertex(adj_[v], [&](int u) { adj_[u] &= ~bit(v); });
  adj_[v] = 0;
}

Graph Graph::with_edge(int u, int v) const {
  Graph copy = *this;
  copy.add_edge(u, v);
  return copy;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < order_; ++v)
    for_each_vertex(adj_[v] & ~first_n(v + 1), [&](int u) { out.emplace_back(v, u); });
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph out(next);
  for_each_vertex(keep, [&](int v) {
    for_each_vertex(adj_[v] & keep, [&](int u) { out.adj_[index[v]] |= bit(index[u]); });
  });
  return out;
}

VertexSet Graph::vertices_of_degree(int d) const {
  VertexSet out = 0;
  for (int v = 0; v < order_; ++v)
    if (degree(v) == d) out |= bit(v);
  return out;
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.order_ == b.order_ &&
         std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
}

std::vector<int> degree_vector(const Graph& g) {
  std::vector<int> out;
  out.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (left != 0) {
    VertexSet comp = bit(lowest(left));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

std::vector<Edge> complement_edges(const Graph& g) {
  std::vector<Edge> out;
  for (int v = 0; v < g.order(); ++v)
    for_each_vertex(~g.neighbors(v) & g.vertices() & ~first_n(v + 1),
                    [&](int u) { out.emplace_back(v, u); });
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(g.order() + e.u, g.order() + e.v);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree_component(const Graph& g, VertexSet comp) {
  int twice = 0;
  for_each_vertex(comp, [&](int v) { twice += popcount(g.neighbors(v) & comp); });
  return twice / 2 == popcount(comp) - 1;
}

}  // namespace forestsat
