#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forestsat/graph.hpp"
#include "forestsat/linear_forest.hpp"

namespace forestsat {

enum class LemmaId {
  BergeTutte,           // matching number equals the deficiency minimum
  DegreeTwoClosure,     // d(x) = 2, N(x) = {u, v} implies uv is an edge
  IsolatedNoLeaf,       // V0 nonempty implies V1 empty
  NeighborhoodCapture,  // N[x] + w lies in every copy of H in G + xw
  BookFan,              // P6-free, P4, delta >= 2, closure => book or fan
  Downshift,            // P6+tP2-saturated => P4+(t+1)P2-saturated
  TwoIsolatedShape,     // >= 2 isolated, <= 3t+18 edges => K7+(t-1)K3+rest
  TreeComponents,       // two tree components have order >= 10, one contains T
};

std::string to_string(LemmaId id);
std::optional<LemmaId> parse_lemma_id(std::string_view text);
const std::vector<LemmaId>& all_lemmas();

struct LemmaParams {
  LinearForestSpec spec;
  int t = 1;
  int n_min = 0;
  int n_max = 0;
  int jobs = 1;
  /// Directory for cached saturated-graph corpora; none disables caching.
  std::optional<std::filesystem::path> cache_dir;
};

/// Parameters used when the caller gives only t: spec defaults to P6 + tP2.
LemmaParams default_params(LemmaId id, int t, int n_min, int n_max);

struct Violation {
  int n = 0;
  std::string graph6;
  std::string detail;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct LemmaReport {
  std::string lemma;
  std::string universe;
  long instances = 0;
  long skipped = 0;
  std::map<int, long> instances_by_n;
  std::vector<Violation> violations;
  /// BookFan only: canonical graph6 of the qualifying graphs per order.
  std::map<int, std::vector<std::string>> qualifying;
  std::vector<std::string> notes;

  bool passed() const { return violations.empty(); }
};

enum class Outcome { OutOfUniverse, Skipped, Holds, Violated };
std::string to_string(Outcome outcome);

struct Examination {
  Outcome outcome = Outcome::OutOfUniverse;
  std::string detail;
};

/// Classifies one graph against a lemma: outside the quantified universe,
/// inside but failing the hypotheses, or a checked instance. Replaying a
/// reported violation through this reproduces it.
Examination examine(LemmaId id, const Graph& g, const LemmaParams& params);

/// Runs the lemma over every graph of its universe for n in [n_min, n_max].
LemmaReport verify(LemmaId id, const LemmaParams& params);

LemmaReport verify_berge_tutte(int n_min, int n_max, int jobs = 1);
LemmaReport verify_degree2_closure(const LinearForestSpec& spec, int n_min, int n_max, int jobs = 1);
LemmaReport verify_isolated_implies_no_leaf(const LinearForestSpec& spec, int n_min, int n_max, int jobs = 1);
LemmaReport verify_neighborhood_capture(const LinearForestSpec& spec, int n_min, int n_max, int jobs = 1);
LemmaReport verify_book_fan_classification(int n_min, int n_max, int jobs = 1);
LemmaReport verify_downshift(int t, int n_min, int n_max, int jobs = 1);
LemmaReport verify_two_isolated_shape(int t, int n_min, int n_max, int jobs = 1);
LemmaReport verify_tree_components(const LinearForestSpec& spec, int n_min, int n_max, int jobs = 1);

/// All spec-saturated graphs of order n (canonically relabeled, sorted by
/// canonical form). Read from / written to `cache_dir` when given.
std::vector<Graph> saturated_corpus(int n, const LinearForestSpec& spec, int jobs = 1,
                                    const std::optional<std::filesystem::path>& cache_dir = {});

/// Cache directory from the FOREST_SAT_CACHE environment variable.
std::optional<std::filesystem::path> cache_dir_from_env();

}  // namespace forestsat
