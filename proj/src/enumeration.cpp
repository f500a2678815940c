#include "forestsat/enumeration.hpp"

#include <atomic>
#include <set>
#include <thread>

#include "forestsat/canonical.hpp"
#include "forestsat/graph6.hpp"

namespace forestsat {

namespace {

// Vertex invariant used to pick the canonical deletion candidates.
long deletion_key(const Graph& g, int v) {
  long sum = 0;
  for_each_vertex(g.neighbors(v), [&](int u) { sum += g.degree(u); });
  return long{g.degree(v)} * 4096 + sum;
}

class Augmenter {
 public:
  Augmenter(int n, const EnumFilter& filter) : n_(n), filter_(filter) {}

  /// Children of `parent` (order k) that are accepted as canonical
  /// augmentations, in increasing neighbourhood-mask order.
  std::vector<Graph> children(const Graph& parent) const {
    const int k = parent.order();
    const int child_order = k + 1;
    const int slack = n_ - child_order;
    const int need_degree = filter_.min_degree - slack;
    const int base_edges = parent.edge_count();
    const int budget = filter_.max_edges < 0 ? kMaxOrder : filter_.max_edges - base_edges;

    std::vector<Graph> out;
    std::set<std::string> seen;
    if (budget < 0) return out;
    for (VertexSet s = 0; s < bit(k); ++s) {
      const int deg = popcount(s);
      if (deg > budget || deg < need_degree) continue;
      bool degrees_ok = true;
      if (need_degree > 0) {
        for (int u = 0; u < k && degrees_ok; ++u)
          if (parent.degree(u) + static_cast<int>((s >> u) & 1U) < need_degree) degrees_ok = false;
      }
      if (!degrees_ok) continue;

      Graph child(child_order);
      for (const Edge& e : parent.edges()) child.add_edge(e.u, e.v);
      for_each_vertex(s, [&](int u) { child.add_edge(u, k); });

      long best = -1;
      VertexSet candidates = 0;
      for (int u = 0; u < child_order; ++u) {
        const long key = deletion_key(child, u);
        if (key > best) {
          best = key;
          candidates = bit(u);
        } else if (key == best) {
          candidates |= bit(u);
        }
      }
      if ((candidates & bit(k)) == 0) continue;

      const CanonicalLabeling lab = canonical_labeling(child);
      if (popcount(candidates) > 1) {
        int chosen = -1;
        for_each_vertex(candidates, [&](int u) {
          if (chosen < 0 || lab.label[u] > lab.label[chosen]) chosen = u;
        });
        if (lab.orbit[chosen] != lab.orbit[k]) continue;
      }
      std::string bytes;
      bytes.reserve(16);
      for (const Edge& e : lab.graph.edges()) {
        bytes.push_back(static_cast<char>(e.u));
        bytes.push_back(static_cast<char>(e.v));
      }
      if (!seen.insert(std::move(bytes)).second) continue;
      out.push_back(std::move(child));
    }
    return out;
  }

  void descend(const Graph& g, const std::function<void(const Graph&)>& visit) const {
    if (g.order() == n_) {
      if (filter_.accepts(g)) visit(g);
      return;
    }
    for (const Graph& child : children(g)) descend(child, visit);
  }

  void collect(const Graph& g, int depth, std::vector<Graph>& out) const {
    if (g.order() == depth) {
      out.push_back(g);
      return;
    }
    for (const Graph& child : children(g)) collect(child, depth, out);
  }

 private:
  int n_;
  EnumFilter filter_;
};

void check_order(int n) {
  if (n < 0 || n > kEnumerationMaxOrder)
    throw std::invalid_argument("enumerate_graphs: order " + std::to_string(n) + " outside 0.." +
                                std::to_string(kEnumerationMaxOrder));
}

}  // namespace

bool EnumFilter::accepts(const Graph& g) const {
  if (max_edges >= 0 && g.edge_count() > max_edges) return false;
  if (g.order() > 0 && g.min_degree() < min_degree) return false;
  if (connected_only && !is_connected(g)) return false;
  return true;
}

void enumerate_graphs(int n, const EnumFilter& filter, const std::function<void(const Graph&)>& visit) {
  check_order(n);
  Augmenter(n, filter).descend(Graph(0), visit);
}

std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter) {
  std::vector<Graph> out;
  enumerate_graphs(n, filter, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count && !failed; i = next++) fn(i, w);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

void enumerate_graphs_parallel(int n, const EnumFilter& filter, int jobs,
                               const std::function<void(const Graph&, int)>& visit) {
  check_order(n);
  const Augmenter aug(n, filter);
  if (jobs <= 1 || n < 3) {
    aug.descend(Graph(0), [&](const Graph& g) { visit(g, 0); });
    return;
  }
  std::vector<Graph> roots;
  aug.collect(Graph(0), n - 2, roots);
  parallel_for(roots.size(), jobs, [&](std::size_t i, int worker) {
    aug.descend(roots[i], [&](const Graph& g) { visit(g, worker); });
  });
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw StreamError(e.what(), number);
    }
  }
  return out;
}

}  // namespace forestsat
