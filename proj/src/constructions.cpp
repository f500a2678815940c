#include "forestsat/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "forestsat/canonical.hpp"
#include "forestsat/graph6.hpp"

namespace forestsat {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string args(int n, int t) { return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")"; }

// clique of order `clique` (skipped when 0), `triangles` copies of K3, then
// isolated vertices up to order n.
Graph clique_triangles(int n, int clique, int triangles) {
  Graph g(n);
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) g.add_edge(u, v);
  for (int i = 0; i < triangles; ++i) {
    const int b = clique + 3 * i;
    g.add_edge(b, b + 1);
    g.add_edge(b, b + 2);
    g.add_edge(b + 1, b + 2);
  }
  return g;
}

std::string component_name(const Graph& c) {
  const int m = c.order();
  const int e = c.edge_count();
  if (m == 1) return "K1";
  if (e == m * (m - 1) / 2) return "K" + std::to_string(m);
  const CanonicalForm form = canonical_form(c);
  if (e == m - 1) {
    if (form == canonical_form(path(m))) return "P" + std::to_string(m);
    if (form == canonical_form(star(m))) return "S" + std::to_string(m);
    if (m == 10 && form == canonical_form(tree_t())) return "T";
    if (m > 10 && m < 20 && form == canonical_form(tree_t_star(m))) return "T*" + std::to_string(m);
  }
  if (auto k = is_book(c)) return "B" + std::to_string(*k);
  if (auto k = is_fan(c)) return "F" + std::to_string(*k);
  return "G[" + form.str() + "]";
}

}  // namespace

Graph complete(int n) { return clique_triangles(n, n, 0); }

Graph empty(int n) { return Graph(n); }

Graph star(int n) {
  require(n >= 1, "star: order must be positive");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

Graph path(int n) {
  require(n >= 1, "path: order must be positive");
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph book(int k) {
  require(k >= 1, "book: k must be at least 1");
  Graph g(k + 2);
  g.add_edge(0, 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, i + 2);
    g.add_edge(1, i + 2);
  }
  return g;
}

Graph fan(int k) {
  require(k >= 1, "fan: k must be at least 1");
  Graph g(2 * k + 1);
  for (int i = 0; i < k; ++i) {
    g.add_edge(0, 2 * i + 1);
    g.add_edge(0, 2 * i + 2);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph ehm(int n, int t) {
  require(t >= 3 && n >= t, "ehm: need t >= 3 and n >= t " + args(n, t));
  return join(complete(t - 2), empty(n - t + 2));
}

Graph tp2_extremal(int n, int t) {
  require(t >= 1 && n >= 3 * t - 3, "tp2_extremal: need t >= 1 and n >= 3t-3 " + args(n, t));
  return clique_triangles(n, 0, t - 1);
}

Graph p3_extremal(int n, int t) {
  require(t >= 1 && n >= 3 * t + 2, "p3_extremal: need t >= 1 and n >= 3t+2 " + args(n, t));
  return clique_triangles(n, 0, t);
}

Graph p4_extremal(int n, int t) {
  require(t >= 1 && n >= 3 * t + 4, "p4_extremal: need t >= 1 and n >= 3t+4 " + args(n, t));
  return clique_triangles(n, 5, t - 1);
}

Graph p5_extremal(int n, int t) {
  require(t >= 1 && n >= 3 * t + 5, "p5_extremal: need t >= 1 and n >= 3t+5 " + args(n, t));
  return clique_triangles(n, 6, t - 1);
}

Graph p6_extremal(int n, int t) {
  require(t >= 1 && n >= 3 * t + 6, "p6_extremal: need t >= 1 and n >= 3t+6 " + args(n, t));
  return clique_triangles(n, 7, t - 1);
}

Graph tree_t() {
  Graph g(10);
  for (int b = 1; b <= 3; ++b) {
    g.add_edge(0, b);
    g.add_edge(b, 2 + 2 * b);
    g.add_edge(b, 3 + 2 * b);
  }
  return g;
}

Graph tree_t_star(int n) {
  require(n >= 10 && n <= 19, "tree_t_star: order must be in 10..19, got " + std::to_string(n));
  const int r = n - 10;
  const int star_order = 4 + r / 3;
  Graph g(n);
  for (int leaf = 1; leaf < star_order; ++leaf) g.add_edge(0, leaf);
  int next = star_order;
  for (int leaf = 1; leaf < star_order - 1; ++leaf) {
    g.add_edge(leaf, next++);
    g.add_edge(leaf, next++);
  }
  while (next < n) g.add_edge(star_order - 1, next++);
  return g;
}

Graph g_star(int n) {
  require(n >= 10, "g_star: order must be at least 10, got " + std::to_string(n));
  const int q = n / 10;
  const int r = n % 10;
  Graph g(0);
  const Graph t = tree_t();
  for (int i = 0; i < q - 1; ++i) g = disjoint_union(g, t);
  return disjoint_union(g, tree_t_star(10 + r));
}

int g_star_max_t(int n) {
  require(n >= 10, "g_star_max_t: order must be at least 10");
  return 3 * (n / 10) + (n % 10) / 3 - 3;
}

std::optional<int> is_book(const Graph& g) {
  const int k = g.order() - 2;
  if (k < 1 || g.edge_count() != 2 * k + 1) return std::nullopt;
  if (!isomorphic(g, book(k))) return std::nullopt;
  return k;
}

std::optional<int> is_fan(const Graph& g) {
  if (g.order() < 3 || g.order() % 2 == 0) return std::nullopt;
  const int k = (g.order() - 1) / 2;
  if (g.edge_count() != 3 * k) return std::nullopt;
  if (!isomorphic(g, fan(k))) return std::nullopt;
  return k;
}

std::string describe(const Graph& g) {
  if (g.order() == 0) return "K0";
  struct Part {
    int order;
    std::string name;
  };
  std::vector<Part> parts;
  for (VertexSet comp : components(g)) parts.push_back({popcount(comp), component_name(g.induced(comp))});
  std::sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
    return a.order != b.order ? a.order > b.order : a.name < b.name;
  });
  std::string out;
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j].name == parts[i].name) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i);
    out += parts[i].name;
    i = j;
  }
  return out;
}

const std::map<std::string, std::string>& recipe_catalogue() {
  static const std::map<std::string, std::string> catalogue{
      {"complete", "n"},       {"empty", "n"},          {"star", "n"},
      {"path", "n"},           {"book", "k"},           {"fan", "k"},
      {"ehm", "n,t"},          {"tp2-extremal", "n,t"}, {"p3-extremal", "n,t"},
      {"p4-extremal", "n,t"},  {"p5-extremal", "n,t"},  {"p6-extremal", "n,t"},
      {"tree-t", ""},          {"tree-t-star", "n"},    {"g-star", "n"},
  };
  return catalogue;
}

Graph ConstructionRecipe::build() const {
  auto it = recipe_catalogue().find(name);
  if (it == recipe_catalogue().end()) throw std::invalid_argument("unknown recipe '" + name + "'");
  auto get = [&](const std::string& key) {
    auto p = params.find(key);
    if (p == params.end()) throw std::invalid_argument("recipe '" + name + "' needs --" + key);
    return p->second;
  };
  if (name == "complete") return complete(get("n"));
  if (name == "empty") return empty(get("n"));
  if (name == "star") return star(get("n"));
  if (name == "path") return path(get("n"));
  if (name == "book") return book(get("k"));
  if (name == "fan") return fan(get("k"));
  if (name == "ehm") return ehm(get("n"), get("t"));
  if (name == "tp2-extremal") return tp2_extremal(get("n"), get("t"));
  if (name == "p3-extremal") return p3_extremal(get("n"), get("t"));
  if (name == "p4-extremal") return p4_extremal(get("n"), get("t"));
  if (name == "p5-extremal") return p5_extremal(get("n"), get("t"));
  if (name == "p6-extremal") return p6_extremal(get("n"), get("t"));
  if (name == "tree-t") return tree_t();
  if (name == "tree-t-star") return tree_t_star(get("n"));
  return g_star(get("n"));
}

}  // namespace forestsat
