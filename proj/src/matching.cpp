#include "forestsat/matching.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace forestsat {

namespace {

// Edmonds' algorithm: BFS for augmenting paths from each exposed vertex,
// contracting odd cycles through the base array.
class Blossom {
 public:
  Blossom(const Graph& g, VertexSet allowed) : g_(g), allowed_(allowed & g.vertices()) {
    match_.fill(-1);
  }

  Matching solve() {
    greedy();
    for_each_vertex(allowed_, [&](int root) {
      if (match_[root] != -1) return;
      const int end = find_path(root);
      if (end != -1) augment(end);
    });
    Matching out;
    for_each_vertex(allowed_, [&](int v) {
      if (match_[v] > v) out.edges.emplace_back(v, match_[v]);
    });
    return out;
  }

 private:
  void greedy() {
    for_each_vertex(allowed_, [&](int v) {
      if (match_[v] != -1) return;
      VertexSet free = g_.neighbors(v) & allowed_;
      for_each_vertex(free, [&](int u) {
        if (match_[v] == -1 && match_[u] == -1) {
          match_[v] = u;
          match_[u] = v;
        }
      });
    });
  }

  int lca(int a, int b) {
    std::array<bool, kMaxOrder> seen{};
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.fill(false);
    parent_.fill(-1);
    for (int i = 0; i < g_.order(); ++i) base_[i] = i;
    used_[root] = true;
    std::array<int, kMaxOrder> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int v = queue[head++];
      VertexSet nbrs = g_.neighbors(v) & allowed_;
      while (nbrs != 0) {
        const int to = lowest(nbrs);
        nbrs &= nbrs - 1;
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < g_.order(); ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              queue[tail++] = i;
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = true;
          queue[tail++] = match_[to];
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      const int pv = parent_[v];
      const int next = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  VertexSet allowed_;
  std::array<int, kMaxOrder> match_{};
  std::array<int, kMaxOrder> parent_{};
  std::array<int, kMaxOrder> base_{};
  std::array<bool, kMaxOrder> used_{};
  std::array<bool, kMaxOrder> in_blossom_{};
};

}  // namespace

bool Matching::valid_in(const Graph& g) const {
  VertexSet covered = 0;
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) return false;
    if ((covered & (bit(e.u) | bit(e.v))) != 0) return false;
    covered |= bit(e.u) | bit(e.v);
  }
  return true;
}

Matching max_matching(const Graph& g, VertexSet allowed) { return Blossom(g, allowed).solve(); }

Matching max_matching(const Graph& g) { return max_matching(g, g.vertices()); }

int matching_number(const Graph& g, VertexSet allowed) { return max_matching(g, allowed).size(); }

int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

int odd_components(const Graph& g, VertexSet removed) {
  int odd = 0;
  VertexSet left = g.vertices() & ~removed;
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
    odd += popcount(comp) & 1;
    left &= ~comp;
  }
  return odd;
}

DeficiencyCertificate berge_tutte_min(const Graph& g) {
  const int n = g.order();
  if (n > kBergeTutteMaxOrder)
    throw std::invalid_argument("berge_tutte_min: order " + std::to_string(n) + " over threshold " +
                                std::to_string(kBergeTutteMaxOrder));
  DeficiencyCertificate best;
  int best_twice = n + 1;
  const VertexSet limit = bit(n);
  for (VertexSet s = 0; s < limit; ++s) {
    const int odd = odd_components(g, s);
    const int twice = n + popcount(s) - odd;
    if (twice < best_twice) {
      best_twice = twice;
      best = {s, odd, twice / 2};
    }
  }
  return best;
}

bool verify_berge_tutte(const Graph& g) {
  const Matching m = max_matching(g);
  return m.valid_in(g) && m.size() == berge_tutte_min(g).value;
}

}  // namespace forestsat
