#include "forestsat/linear_forest.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "forestsat/matching.hpp"

namespace forestsat {

LinearForestSpec::LinearForestSpec(std::vector<int> path_orders, int pairs) : t(pairs) {
  if (t < 0) throw std::invalid_argument("linear forest: negative P2 count");
  for (int k : path_orders) {
    if (k < 2) throw std::invalid_argument("linear forest: path order " + std::to_string(k) + " < 2");
    if (k == 2)
      ++t;
    else
      paths.push_back(k);
  }
  std::sort(paths.begin(), paths.end(), std::greater<>());
}

int LinearForestSpec::vertex_demand() const {
  int total = 2 * t;
  for (int k : paths) total += k;
  return total;
}

std::optional<int> LinearForestSpec::single_path_order() const {
  if (paths.size() == 1) return paths.front();
  if (paths.empty() && t >= 1) return 2;
  return std::nullopt;
}

std::string LinearForestSpec::to_string() const {
  std::string out;
  for (int k : paths) {
    if (!out.empty()) out += '+';
    out += "P" + std::to_string(k);
  }
  if (t > 0 || out.empty()) {
    if (!out.empty()) out += '+';
    if (t != 1) out += std::to_string(t);
    out += "P2";
  }
  return out;
}

LinearForestSpec LinearForestSpec::parse(std::string_view text) {
  std::vector<int> orders;
  int pairs = 0;
  std::size_t i = 0;
  auto column = [&] { return static_cast<int>(i) + 1; };
  auto read_number = [&](const char* what) {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw SpecParseError(std::string("expected ") + what, column());
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1000) throw SpecParseError(std::string(what) + " too large", column());
      ++i;
    }
    return static_cast<int>(value);
  };
  if (text.empty()) throw SpecParseError("empty linear forest", 1);
  while (true) {
    int count = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) count = read_number("count");
    if (i >= text.size() || text[i] != 'P') throw SpecParseError("expected 'P'", column());
    ++i;
    const int order_column = column();
    const int k = read_number("path order");
    if (k < 2) throw SpecParseError("path order must be at least 2", order_column);
    if (k == 2)
      pairs += count;
    else
      orders.insert(orders.end(), count, k);
    if (i == text.size()) break;
    if (text[i] != '+') throw SpecParseError("expected '+'", column());
    ++i;
  }
  return LinearForestSpec(std::move(orders), pairs);
}

Graph LinearForestSpec::as_graph() const {
  Graph h(vertex_demand());
  int next = 0;
  for (int k : paths) {
    for (int j = 1; j < k; ++j) h.add_edge(next + j - 1, next + j);
    next += k;
  }
  for (int j = 0; j < t; ++j, next += 2) h.add_edge(next, next + 1);
  return h;
}

VertexSet Embedding::vertices() const {
  VertexSet out = 0;
  for (const auto& p : paths)
    for (int v : p) out |= bit(v);
  for (const Edge& e : pairs) out |= bit(e.u) | bit(e.v);
  return out;
}

bool Embedding::valid_in(const Graph& g, const LinearForestSpec& spec) const {
  if (static_cast<int>(pairs.size()) != spec.t || paths.size() != spec.paths.size()) return false;
  std::vector<int> orders;
  VertexSet used = 0;
  int count = 0;
  auto take = [&](int v) {
    if (v < 0 || v >= g.order() || (used & bit(v)) != 0) return false;
    used |= bit(v);
    ++count;
    return true;
  };
  for (const auto& p : paths) {
    orders.push_back(static_cast<int>(p.size()));
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!take(p[j])) return false;
      if (j > 0 && !g.has_edge(p[j - 1], p[j])) return false;
    }
  }
  for (const Edge& e : pairs) {
    if (!take(e.u) || !take(e.v) || !g.has_edge(e.u, e.v)) return false;
  }
  std::sort(orders.begin(), orders.end(), std::greater<>());
  return orders == spec.paths && count == spec.vertex_demand();
}

namespace {

class ForestSearch {
 public:
  ForestSearch(const Graph& g, const std::vector<int>& orders, int pairs)
      : g_(g), orders_(orders), pairs_(pairs), starts_(orders.size(), -1), current_(orders.size()) {
    suffix_demand_.assign(orders.size() + 1, 2 * pairs);
    for (std::size_t i = orders.size(); i-- > 0;) suffix_demand_[i] = suffix_demand_[i + 1] + orders[i];
  }

  std::optional<Embedding> run() {
    if (suffix_demand_[0] > g_.order()) return std::nullopt;
    if (place(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool place(std::size_t i, VertexSet used) {
    const VertexSet avail = g_.vertices() & ~used;
    if (popcount(avail) < suffix_demand_[i]) return false;
    if (i == orders_.size()) {
      if (pairs_ == 0) {
        found_ = Embedding{current_, {}};
        return true;
      }
      Matching m = max_matching(g_, avail);
      if (m.size() < pairs_) return false;
      m.edges.resize(pairs_);
      found_ = Embedding{current_, m.edges};
      return true;
    }
    const int k = orders_[i];
    const bool tied = i > 0 && orders_[i - 1] == k;
    std::vector<int>& path = current_[i];
    VertexSet starts = avail;
    if (tied) starts &= ~first_n(starts_[i - 1] + 1);
    bool done = false;
    for_each_vertex(starts, [&](int s) {
      if (done) return;
      if (k > 1 && (g_.neighbors(s) & avail) == 0) return;
      starts_[i] = s;
      path.assign(1, s);
      done = extend(i, used | bit(s));
    });
    return done;
  }

  bool extend(std::size_t i, VertexSet used) {
    std::vector<int>& path = current_[i];
    const int k = orders_[i];
    if (static_cast<int>(path.size()) == k) return place(i + 1, used);
    VertexSet next = g_.neighbors(path.back()) & ~used;
    // Orientation: the last vertex must exceed the first.
    if (static_cast<int>(path.size()) == k - 1) next &= ~first_n(path.front() + 1);
    while (next != 0) {
      const int v = lowest(next);
      next &= next - 1;
      path.push_back(v);
      if (extend(i, used | bit(v))) return true;
      path.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const std::vector<int>& orders_;
  int pairs_;
  std::vector<int> suffix_demand_;
  std::vector<int> starts_;
  std::vector<std::vector<int>> current_;
  Embedding found_;
};

}  // namespace

std::optional<std::vector<int>> contains_path(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("contains_path: order must be positive");
  if (k > g.order()) return std::nullopt;
  if (k == 1) return std::vector<int>{0};
  const std::vector<int> orders{k};
  auto found = ForestSearch(g, orders, 0).run();
  if (!found) return std::nullopt;
  return found->paths.front();
}

std::optional<Embedding> contains_linear_forest(const Graph& g, const LinearForestSpec& spec) {
  if (spec.vertex_demand() > g.order()) return std::nullopt;
  int needed = spec.t;
  for (int k : spec.paths) needed += k / 2;
  if (needed > 0 && matching_number(g) < needed) return std::nullopt;
  return ForestSearch(g, spec.paths, spec.t).run();
}

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  const int p = pattern.order();
  if (p > host.order()) return false;
  std::vector<int> image(p, -1);
  std::function<bool(int, VertexSet)> assign = [&](int i, VertexSet used) {
    if (i == p) return true;
    for (int v = 0; v < host.order(); ++v) {
      if ((used & bit(v)) != 0) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (pattern.has_edge(i, j) && !host.has_edge(v, image[j])) ok = false;
      if (!ok) continue;
      image[i] = v;
      if (assign(i + 1, used | bit(v))) return true;
    }
    return false;
  };
  return assign(0, 0);
}

bool brute_force_contains(const Graph& g, const LinearForestSpec& spec) {
  if (spec.vertex_demand() > kBruteForceMaxDemand || g.order() > kBruteForceMaxOrder)
    throw std::invalid_argument("brute_force_contains: demand " + std::to_string(spec.vertex_demand()) +
                                " / order " + std::to_string(g.order()) + " over limits");
  return contains_subgraph(g, spec.as_graph());
}

}  // namespace forestsat
