#include "forestsat/canonical.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "forestsat/graph6.hpp"

namespace forestsat {

namespace {

using Rows = std::array<VertexSet, kMaxOrder>;

constexpr int kNoUnwind = INT_MAX;

// Splits cells by neighbour counts into every other cell until the ordered
// partition is equitable. Fragments are ordered by ascending count, so the
// result depends only on the ordered partition and the graph structure.
void refine(const Graph& g, std::vector<VertexSet>& cells) {
  const int n = g.order();
  bool changed = true;
  while (changed && static_cast<int>(cells.size()) < n) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexSet splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        const VertexSet cell = cells[c];
        if (popcount(cell) == 1) continue;
        std::array<VertexSet, kMaxOrder + 1> by_count{};
        int lo = kMaxOrder + 1;
        int hi = -1;
        for_each_vertex(cell, [&](int v) {
          const int k = popcount(g.neighbors(v) & splitter);
          by_count[k] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        });
        if (lo == hi) continue;
        std::vector<VertexSet> fragments;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k] != 0) fragments.push_back(by_count[k]);
        cells.erase(cells.begin() + static_cast<long>(c));
        cells.insert(cells.begin() + static_cast<long>(c), fragments.begin(), fragments.end());
        c += fragments.size() - 1;
        changed = true;
      }
    }
  }
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a < b) std::swap(a, b);
    if (a != b) parent[a] = b;
  }
  std::vector<int> parent;
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run(std::vector<VertexSet> cells) {
    descend(std::move(cells), 0);
    CanonicalLabeling out;
    out.label = best_label_;
    out.graph = Graph(n_);
    for (int v = 0; v < n_; ++v)
      for_each_vertex(best_rows_[v] & ~first_n(v + 1), [&](int u) { out.graph.add_edge(v, u); });
    out.generators = std::move(gens_);
    UnionFind uf(n_);
    for (const auto& gen : out.generators)
      for (int v = 0; v < n_; ++v) uf.unite(v, gen[v]);
    out.orbit.resize(n_);
    for (int v = 0; v < n_; ++v) out.orbit[v] = uf.find(v);
    return out;
  }

 private:
  int descend(std::vector<VertexSet> cells, int depth) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (popcount(cells[target]) == 1) ++target;
    const VertexSet cell = cells[target];

    std::vector<int> explored;
    int result = kNoUnwind;
    for_each_vertex(cell, [&](int v) {
      if (result != kNoUnwind) return;
      if (pruned(v, explored)) return;
      explored.push_back(v);
      std::vector<VertexSet> child = cells;
      child[target] = bit(v);
      child.insert(child.begin() + static_cast<long>(target) + 1, cell & ~bit(v));
      path_.push_back(v);
      const int back = descend(std::move(child), depth + 1);
      path_.pop_back();
      if (back < depth) result = back;
    });
    return result;
  }

  // v is skipped when an automorphism fixing the current path maps an
  // already explored sibling onto it.
  bool pruned(int v, const std::vector<int>& explored) const {
    if (explored.empty()) return false;
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gen : gens_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(), [&](int p) { return gen[p] == p; });
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) uf.unite(x, gen[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
  }

  int leaf(const std::vector<VertexSet>& cells) {
    std::vector<int> label(n_);
    for (int i = 0; i < n_; ++i) label[lowest(cells[i])] = i;
    Rows rows{};
    for (int v = 0; v < n_; ++v)
      for_each_vertex(g_.neighbors(v), [&](int u) { rows[label[v]] |= bit(label[u]); });

    if (!have_leaf_) {
      have_leaf_ = true;
      first_label_ = best_label_ = label;
      first_rows_ = best_rows_ = rows;
      first_path_ = path_;
      return kNoUnwind;
    }
    if (same(rows, first_rows_)) {
      gens_.push_back(automorphism(first_label_, label));
      std::size_t d = 0;
      while (d < path_.size() && d < first_path_.size() && path_[d] == first_path_[d]) ++d;
      return static_cast<int>(d);
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      gens_.push_back(automorphism(best_label_, label));
    } else if (cmp > 0) {
      best_label_ = label;
      best_rows_ = rows;
    }
    return kNoUnwind;
  }

  std::vector<int> automorphism(const std::vector<int>& reference, const std::vector<int>& label) const {
    std::vector<int> inverse(n_);
    for (int v = 0; v < n_; ++v) inverse[reference[v]] = v;
    std::vector<int> gen(n_);
    for (int v = 0; v < n_; ++v) gen[v] = inverse[label[v]];
    return gen;
  }

  bool same(const Rows& a, const Rows& b) const { return std::equal(a.begin(), a.begin() + n_, b.begin()); }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<int> first_path_;
  bool have_leaf_ = false;
  std::vector<int> first_label_;
  std::vector<int> best_label_;
  Rows first_rows_{};
  Rows best_rows_{};
  std::vector<std::vector<int>> gens_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const VertexSet> colours) {
  if (g.order() == 0) return CanonicalLabeling{{}, Graph(0), {}, {}};
  std::vector<VertexSet> cells;
  VertexSet seen = 0;
  for (VertexSet c : colours) {
    if ((c & seen) != 0 || (c & ~g.vertices()) != 0)
      throw std::invalid_argument("canonical_labeling: colours must partition the vertex set");
    seen |= c;
    if (c != 0) cells.push_back(c);
  }
  if (colours.empty()) {
    cells.push_back(g.vertices());
  } else if (seen != g.vertices()) {
    throw std::invalid_argument("canonical_labeling: colours must partition the vertex set");
  }
  return Search(g).run(std::move(cells));
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm(to_graph6(canonical_labeling(g).graph));
}

CanonicalForm canonical_form(const Graph& g, std::span<const VertexSet> colours) {
  std::string prefix = "c";
  for (VertexSet c : colours)
    if (c != 0) prefix += std::to_string(popcount(c)) + ",";
  prefix.back() = ':';
  return CanonicalForm(prefix + to_graph6(canonical_labeling(g, colours).graph));
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_vector(a) != degree_vector(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace forestsat
