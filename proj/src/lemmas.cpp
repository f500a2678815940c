#include "forestsat/lemmas.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <stdexcept>

#include "forestsat/canonical.hpp"
#include "forestsat/constructions.hpp"
#include "forestsat/enumeration.hpp"
#include "forestsat/graph6.hpp"
#include "forestsat/matching.hpp"
#include "forestsat/saturation.hpp"

namespace forestsat {

namespace {

struct LemmaName {
  LemmaId id;
  const char* name;
};

constexpr LemmaName kNames[] = {
    {LemmaId::BergeTutte, "berge-tutte"},
    {LemmaId::DegreeTwoClosure, "degree2-closure"},
    {LemmaId::IsolatedNoLeaf, "isolated-no-leaf"},
    {LemmaId::NeighborhoodCapture, "neighborhood-capture"},
    {LemmaId::BookFan, "book-fan"},
    {LemmaId::Downshift, "downshift"},
    {LemmaId::TwoIsolatedShape, "two-isolated-shape"},
    {LemmaId::TreeComponents, "tree-components"},
};

LinearForestSpec p6_plus(int t) { return LinearForestSpec({6}, t); }

std::string vertex_list(VertexSet s) {
  std::string out = "{";
  for_each_vertex(s, [&](int v) {
    if (out.size() > 1) out += ',';
    out += std::to_string(v);
  });
  return out + "}";
}

Examination holds() { return {Outcome::Holds, ""}; }
Examination skipped(std::string why) { return {Outcome::Skipped, std::move(why)}; }
Examination violated(std::string why) { return {Outcome::Violated, std::move(why)}; }

// Spec of the form P_k + tP2 with k >= 2 and t >= 1.
bool path_plus_pairs(const LinearForestSpec& spec) {
  if (spec.paths.size() == 1) return spec.t >= 1;
  return spec.paths.empty() && spec.t >= 2;
}

void require_path_plus_pairs(const LinearForestSpec& spec) {
  if (!path_plus_pairs(spec))
    throw std::invalid_argument("spec " + spec.to_string() + " is not of the form P_k + tP2 with k >= 2, t >= 1");
}

Examination degree2_closure(const Graph& g) {
  const VertexSet twos = g.vertices_of_degree(2);
  if (twos == 0) return skipped("no vertex of degree 2");
  std::string bad;
  for_each_vertex(twos, [&](int x) {
    const VertexSet nbrs = g.neighbors(x);
    const int u = lowest(nbrs);
    const int v = lowest(nbrs & (nbrs - 1));
    if (bad.empty() && !g.has_edge(u, v))
      bad = "vertex " + std::to_string(x) + " has degree 2 with non-adjacent neighbours " + std::to_string(u) +
            "," + std::to_string(v);
  });
  return bad.empty() ? holds() : violated(bad);
}

Examination isolated_no_leaf(const Graph& g) {
  if (g.vertices_of_degree(0) == 0) return skipped("no isolated vertex");
  const VertexSet leaves = g.vertices_of_degree(1);
  if (leaves != 0) return violated("isolated vertex present and degree-1 vertices " + vertex_list(leaves));
  return holds();
}

Examination neighborhood_capture(const Graph& g, const LinearForestSpec& spec) {
  const VertexSet isolated = g.vertices_of_degree(0);
  const VertexSet others = g.vertices() & ~isolated;
  if (isolated == 0 || others == 0) return skipped("needs an isolated and a non-isolated vertex");
  std::string bad;
  for_each_vertex(isolated, [&](int w) {
    for_each_vertex(others, [&](int x) {
      if (!bad.empty()) return;
      const Graph plus = g.with_edge(x, w);
      // Some copy misses y iff the graph with y's edges removed still contains H.
      for_each_vertex(g.closed_neighbors(x) | bit(w), [&](int y) {
        if (!bad.empty()) return;
        Graph without = plus;
        without.isolate(y);
        if (auto copy = contains_linear_forest(without, spec)) {
          bad = "G+" + std::to_string(x) + "-" + std::to_string(w) + " has a copy avoiding vertex " +
                std::to_string(y) + " (uses " + vertex_list(copy->vertices()) + ")";
        }
      });
    });
  });
  return bad.empty() ? holds() : violated(bad);
}

Examination book_fan(const Graph& g) {
  const int n = g.order();
  if (n < 6 || !is_connected(g) || g.min_degree() < 2) return {Outcome::OutOfUniverse, "not connected with delta >= 2, n >= 6"};
  if (contains_path(g, 6)) return skipped("contains P6");
  if (!contains_path(g, 4)) return skipped("P4-free");
  if (degree2_closure(g).outcome == Outcome::Violated) return skipped("degree-2 closure fails");
  if (auto k = is_book(g); k && *k >= 4) return holds();
  if (auto k = is_fan(g); k && *k >= 3) return holds();
  return violated("qualifies but is neither B_i (i >= 4) nor F_j (j >= 3): " + describe(g));
}

struct Components {
  VertexSet nontrivial = 0;
  std::vector<VertexSet> parts;
};

Components nontrivial_components(const Graph& g) {
  Components out;
  for (VertexSet c : components(g)) {
    if (popcount(c) < 2) continue;
    out.parts.push_back(c);
    out.nontrivial |= c;
  }
  return out;
}

Examination downshift(const Graph& g, int t) {
  const Components q = nontrivial_components(g);
  if (popcount(q.nontrivial) < 2 * t + 6) return skipped("|Q| < 2t+6");
  bool min_degree_ok = true;
  for_each_vertex(q.nontrivial, [&](int v) { min_degree_ok = min_degree_ok && g.degree(v) >= 2; });
  if (!min_degree_ok) return skipped("delta(Q) < 2");
  for (VertexSet c : q.parts) {
    if (popcount(c) < 6) return skipped("component of order < 6");
    const Graph part = g.induced(c);
    if (is_book(part) || is_fan(part)) return skipped("component is a book or fan");
  }
  const LinearForestSpec lower({4}, t + 1);
  const SaturationVerdict verdict = is_saturated(g, lower);
  if (!verdict.saturated())
    return violated("not " + lower.to_string() + "-saturated: " + to_string(verdict.status));
  if (g.vertices_of_degree(0) != 0 && g.edge_count() <= 3 * t + 18)
    return violated("isolated vertex present but |E| = " + std::to_string(g.edge_count()) + " <= 3t+18");
  return holds();
}

Examination two_isolated_shape(const Graph& g, int t) {
  if (popcount(g.vertices_of_degree(0)) < 2) return skipped("fewer than 2 isolated vertices");
  if (g.edge_count() > 3 * t + 18) return skipped("|E| > 3t+18");
  if (g.order() < 3 * t + 6) return skipped("n < 3t+6");
  if (g.edge_count() != 3 * t + 18 || !isomorphic(g, p6_extremal(g.order(), t)))
    return violated("is " + describe(g) + " with " + std::to_string(g.edge_count()) + " edges");
  return holds();
}

Examination tree_components(const Graph& g) {
  std::vector<VertexSet> trees;
  for (VertexSet c : components(g))
    if (popcount(c) >= 2 && is_tree_component(g, c)) trees.push_back(c);
  if (trees.size() < 2) return skipped("fewer than 2 tree components");
  const Graph spider = tree_t();
  std::vector<int> has_t(trees.size(), -1);
  auto contains_t = [&](std::size_t i) {
    if (has_t[i] < 0) has_t[i] = contains_subgraph(g.induced(trees[i]), spider) ? 1 : 0;
    return has_t[i] == 1;
  };
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (popcount(trees[i]) < 10)
      return violated("tree component " + vertex_list(trees[i]) + " has order " + std::to_string(popcount(trees[i])));
  }
  for (std::size_t i = 0; i < trees.size(); ++i)
    for (std::size_t j = i + 1; j < trees.size(); ++j)
      if (!contains_t(i) && !contains_t(j))
        return violated("neither " + vertex_list(trees[i]) + " nor " + vertex_list(trees[j]) + " contains T");
  return holds();
}

bool uses_saturated_universe(LemmaId id) {
  switch (id) {
    case LemmaId::DegreeTwoClosure:
    case LemmaId::IsolatedNoLeaf:
    case LemmaId::NeighborhoodCapture:
    case LemmaId::Downshift:
    case LemmaId::TwoIsolatedShape:
    case LemmaId::TreeComponents:
      return true;
    default:
      return false;
  }
}

LinearForestSpec universe_spec(LemmaId id, const LemmaParams& p) {
  if (id == LemmaId::Downshift || id == LemmaId::TwoIsolatedShape) return p6_plus(p.t);
  return p.spec;
}

// Examination of a graph already known to be in the universe.
Examination examine_member(LemmaId id, const Graph& g, const LemmaParams& p) {
  switch (id) {
    case LemmaId::BergeTutte:
      return verify_berge_tutte(g) ? holds() : violated("matching number differs from deficiency minimum");
    case LemmaId::DegreeTwoClosure:
      return degree2_closure(g);
    case LemmaId::IsolatedNoLeaf:
      return isolated_no_leaf(g);
    case LemmaId::NeighborhoodCapture:
      return neighborhood_capture(g, p.spec);
    case LemmaId::BookFan:
      return book_fan(g);
    case LemmaId::Downshift:
      return downshift(g, p.t);
    case LemmaId::TwoIsolatedShape:
      return two_isolated_shape(g, p.t);
    case LemmaId::TreeComponents:
      return tree_components(g);
  }
  return {};
}

void check_params(LemmaId id, const LemmaParams& p) {
  if (p.n_min > p.n_max) throw std::invalid_argument("empty n range");
  if (p.n_min < 0) throw std::invalid_argument("negative order");
  switch (id) {
    case LemmaId::BergeTutte:
      if (p.n_max > kEnumerationMaxOrder) throw std::invalid_argument("berge-tutte: n <= 10");
      break;
    case LemmaId::IsolatedNoLeaf:
    case LemmaId::NeighborhoodCapture:
      require_path_plus_pairs(p.spec);
      break;
    case LemmaId::BookFan:
      if (p.n_min < 6 || p.n_max > kEnumerationMaxOrder) throw std::invalid_argument("book-fan: n range must lie in 6..10");
      break;
    case LemmaId::Downshift:
      if (p.t < 1) throw std::invalid_argument("downshift: t >= 1");
      break;
    case LemmaId::TwoIsolatedShape:
      if (p.t < 1) throw std::invalid_argument("two-isolated-shape: t >= 1");
      if (p.n_min < 3 * p.t + 6)
        throw std::invalid_argument("two-isolated-shape: needs n >= 3t+6 = " + std::to_string(3 * p.t + 6));
      if (p.n_max - 2 > kEnumerationMaxOrder) throw std::invalid_argument("two-isolated-shape: n <= 12");
      break;
    case LemmaId::TreeComponents:
      if (p.spec.paths != std::vector<int>{6} || p.spec.t < 1)
        throw std::invalid_argument("tree-components: spec must be P6 + tP2");
      break;
    case LemmaId::DegreeTwoClosure:
      break;
  }
  if (uses_saturated_universe(id) && id != LemmaId::TwoIsolatedShape && p.n_max > kEnumerationMaxOrder)
    throw std::invalid_argument("n range exceeds the built-in enumeration (n <= 10)");
}

std::string universe_text(LemmaId id, const LemmaParams& p) {
  const std::string range = "n=" + std::to_string(p.n_min) + ".." + std::to_string(p.n_max);
  switch (id) {
    case LemmaId::BergeTutte:
      return "all graphs, " + range;
    case LemmaId::BookFan:
      return "connected graphs with min degree >= 2, " + range;
    case LemmaId::TwoIsolatedShape:
      return universe_spec(id, p).to_string() + "-saturated graphs with >= 2 isolated vertices and <= " +
             std::to_string(3 * p.t + 18) + " edges, " + range;
    default:
      return universe_spec(id, p).to_string() + "-saturated graphs, " + range;
  }
}

struct Tally {
  long instances = 0;
  long skipped = 0;
  std::vector<Violation> violations;
  std::vector<std::string> qualifying;
};

void record(Tally& tally, int n, const Graph& g, const Examination& ex, bool keep_qualifying) {
  switch (ex.outcome) {
    case Outcome::OutOfUniverse:
      break;
    case Outcome::Skipped:
      ++tally.skipped;
      break;
    case Outcome::Holds:
    case Outcome::Violated:
      ++tally.instances;
      if (keep_qualifying) tally.qualifying.push_back(canonical_form(g).str());
      if (ex.outcome == Outcome::Violated) tally.violations.push_back({n, canonical_form(g).str(), ex.detail});
      break;
  }
}

}  // namespace

std::string to_string(LemmaId id) {
  for (const auto& entry : kNames)
    if (entry.id == id) return entry.name;
  return "?";
}

std::optional<LemmaId> parse_lemma_id(std::string_view text) {
  for (const auto& entry : kNames)
    if (text == entry.name) return entry.id;
  return std::nullopt;
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> out;
    for (const auto& entry : kNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::OutOfUniverse:
      return "out-of-universe";
    case Outcome::Skipped:
      return "skipped";
    case Outcome::Holds:
      return "holds";
    case Outcome::Violated:
      return "violated";
  }
  return "?";
}

LemmaParams default_params(LemmaId id, int t, int n_min, int n_max) {
  LemmaParams p;
  p.t = t;
  p.n_min = n_min;
  p.n_max = n_max;
  p.spec = p6_plus(t);
  (void)id;
  return p;
}

Examination examine(LemmaId id, const Graph& g, const LemmaParams& params) {
  if (id == LemmaId::BookFan) return book_fan(g);
  if (uses_saturated_universe(id) && !is_saturated(g, universe_spec(id, params)).saturated())
    return {Outcome::OutOfUniverse, "not " + universe_spec(id, params).to_string() + "-saturated"};
  return examine_member(id, g, params);
}

std::optional<std::filesystem::path> cache_dir_from_env() {
  const char* value = std::getenv("FOREST_SAT_CACHE");
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::filesystem::path(value);
}

std::vector<Graph> saturated_corpus(int n, const LinearForestSpec& spec, int jobs,
                                    const std::optional<std::filesystem::path>& cache_dir) {
  std::filesystem::path file;
  if (cache_dir) {
    file = *cache_dir / ("sat_" + spec.to_string() + "_n" + std::to_string(n) + ".g6");
    std::ifstream in(file);
    if (in) {
      std::vector<Graph> cached = read_graph6_stream(in);
      if (std::all_of(cached.begin(), cached.end(), [&](const Graph& g) { return g.order() == n; })) return cached;
    }
  }

  std::vector<std::vector<std::pair<CanonicalForm, Graph>>> locals(std::max(jobs, 1));
  enumerate_graphs_parallel(n, {}, jobs, [&](const Graph& g, int worker) {
    if (is_saturated(g, spec).saturated()) {
      CanonicalLabeling lab = canonical_labeling(g);
      locals[worker].emplace_back(CanonicalForm(to_graph6(lab.graph)), lab.graph);
    }
  });
  std::vector<std::pair<CanonicalForm, Graph>> all;
  for (auto& l : locals) all.insert(all.end(), l.begin(), l.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(all.size());
  for (auto& entry : all) out.push_back(entry.second);

  if (cache_dir) {
    std::filesystem::create_directories(*cache_dir);
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
      std::ofstream outf(tmp);
      for (const auto& entry : all) outf << entry.first.str() << '\n';
    }
    std::filesystem::rename(tmp, file);
  }
  return out;
}

LemmaReport verify(LemmaId id, const LemmaParams& params) {
  check_params(id, params);
  LemmaReport report;
  report.lemma = to_string(id);
  report.universe = universe_text(id, params);
  const bool keep_qualifying = id == LemmaId::BookFan;
  const int jobs = std::max(params.jobs, 1);

  for (int n = params.n_min; n <= params.n_max; ++n) {
    std::vector<Tally> tallies(jobs);
    if (uses_saturated_universe(id) && id != LemmaId::TwoIsolatedShape) {
      const std::vector<Graph> corpus = saturated_corpus(n, universe_spec(id, params), jobs, params.cache_dir);
      parallel_for(corpus.size(), jobs, [&](std::size_t i, int worker) {
        record(tallies[worker], n, corpus[i], examine_member(id, corpus[i], params), keep_qualifying);
      });
    } else if (id == LemmaId::TwoIsolatedShape) {
      const LinearForestSpec spec = universe_spec(id, params);
      EnumFilter filter;
      filter.max_edges = 3 * params.t + 18;
      enumerate_graphs_parallel(n - 2, filter, jobs, [&](const Graph& core, int worker) {
        const Graph g = disjoint_union(core, empty(2));
        if (!is_saturated(g, spec).saturated()) return;
        record(tallies[worker], n, g, examine_member(id, g, params), keep_qualifying);
      });
    } else {
      EnumFilter filter;
      if (id == LemmaId::BookFan) {
        filter.min_degree = 2;
        filter.connected_only = true;
      }
      enumerate_graphs_parallel(n, filter, jobs, [&](const Graph& g, int worker) {
        record(tallies[worker], n, g, examine_member(id, g, params), keep_qualifying);
      });
    }

    long at_n = 0;
    std::vector<std::string> qualifying;
    for (auto& tally : tallies) {
      at_n += tally.instances;
      report.skipped += tally.skipped;
      report.violations.insert(report.violations.end(), tally.violations.begin(), tally.violations.end());
      qualifying.insert(qualifying.end(), tally.qualifying.begin(), tally.qualifying.end());
    }
    report.instances += at_n;
    report.instances_by_n[n] = at_n;
    if (keep_qualifying) {
      std::sort(qualifying.begin(), qualifying.end());
      report.qualifying[n] = std::move(qualifying);
    }
  }
  std::sort(report.violations.begin(), report.violations.end());
  if (report.instances == 0)
    report.notes.push_back("hypothesis set is empty over " + report.universe + "; nothing was verified");
  return report;
}

LemmaReport verify_berge_tutte(int n_min, int n_max, int jobs) {
  LemmaParams p = default_params(LemmaId::BergeTutte, 1, n_min, n_max);
  p.jobs = jobs;
  return verify(LemmaId::BergeTutte, p);
}

LemmaReport verify_degree2_closure(const LinearForestSpec& spec, int n_min, int n_max, int jobs) {
  LemmaParams p{spec, spec.t, n_min, n_max, jobs, cache_dir_from_env()};
  return verify(LemmaId::DegreeTwoClosure, p);
}

LemmaReport verify_isolated_implies_no_leaf(const LinearForestSpec& spec, int n_min, int n_max, int jobs) {
  LemmaParams p{spec, spec.t, n_min, n_max, jobs, cache_dir_from_env()};
  return verify(LemmaId::IsolatedNoLeaf, p);
}

LemmaReport verify_neighborhood_capture(const LinearForestSpec& spec, int n_min, int n_max, int jobs) {
  LemmaParams p{spec, spec.t, n_min, n_max, jobs, cache_dir_from_env()};
  return verify(LemmaId::NeighborhoodCapture, p);
}

LemmaReport verify_book_fan_classification(int n_min, int n_max, int jobs) {
  LemmaParams p = default_params(LemmaId::BookFan, 1, n_min, n_max);
  p.jobs = jobs;
  return verify(LemmaId::BookFan, p);
}

LemmaReport verify_downshift(int t, int n_min, int n_max, int jobs) {
  LemmaParams p = default_params(LemmaId::Downshift, t, n_min, n_max);
  p.jobs = jobs;
  p.cache_dir = cache_dir_from_env();
  return verify(LemmaId::Downshift, p);
}

LemmaReport verify_two_isolated_shape(int t, int n_min, int n_max, int jobs) {
  LemmaParams p = default_params(LemmaId::TwoIsolatedShape, t, n_min, n_max);
  p.jobs = jobs;
  return verify(LemmaId::TwoIsolatedShape, p);
}

LemmaReport verify_tree_components(const LinearForestSpec& spec, int n_min, int n_max, int jobs) {
  LemmaParams p{spec, spec.t, n_min, n_max, jobs, cache_dir_from_env()};
  return verify(LemmaId::TreeComponents, p);
}

}  // namespace forestsat
