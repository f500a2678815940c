#include "forestsat/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "forestsat/constructions.hpp"
#include "forestsat/enumeration.hpp"
#include "forestsat/graph6.hpp"
#include "forestsat/lemmas.hpp"
#include "forestsat/report_json.hpp"
#include "forestsat/saturation.hpp"

namespace forestsat {

namespace {

constexpr int kVerified = 0;
constexpr int kRefuted = 1;
constexpr int kUsage = 2;

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected a..b");
  }
}

std::string edge_text(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string embedding_text(const Embedding& emb) {
  std::string out;
  for (const auto& p : emb.paths) {
    if (!out.empty()) out += " ";
    out += "path";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i == 0 ? " " : "-") + std::to_string(p[i]);
  }
  for (const Edge& e : emb.pairs) out += (out.empty() ? "" : " ") + std::string("pair ") + edge_text(e);
  return out;
}

int run_check(const LinearForestSpec& spec, bool json, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs = read_graph6_stream(in);
  bool all = true;
  nlohmann::json results = nlohmann::json::array();
  for (const Graph& g : graphs) {
    const SaturationVerdict v = is_saturated(g, spec);
    all = all && v.saturated();
    const std::string edges = std::to_string(g.edge_count()) + " edges";
    if (json) {
      nlohmann::json r{{"graph6", to_graph6(g)}, {"status", to_string(v.status)}, {"edges", g.edge_count()}};
      if (v.embedding) r["witness"] = to_json(*v.embedding);
      if (v.edge) r["non_edge"] = {v.edge->u, v.edge->v};
      results.push_back(r);
    } else if (v.saturated()) {
      out << "Saturated, " << edges << '\n';
    } else if (v.embedding) {
      out << "ContainsH, " << edges << ": " << embedding_text(*v.embedding) << '\n';
    } else {
      out << "NonSaturatingEdge " << edge_text(*v.edge) << ", " << edges << '\n';
    }
  }
  if (json) out << nlohmann::json{{"spec", spec.to_string()}, {"results", results}}.dump() << '\n';
  return all ? kVerified : kRefuted;
}

int run_contains(const LinearForestSpec& spec, bool json, std::istream& in, std::ostream& out) {
  const std::vector<Graph> graphs = read_graph6_stream(in);
  bool all = true;
  nlohmann::json results = nlohmann::json::array();
  for (const Graph& g : graphs) {
    const auto found = contains_linear_forest(g, spec);
    all = all && found.has_value();
    if (json) {
      nlohmann::json r{{"graph6", to_graph6(g)}, {"present", found.has_value()}};
      if (found) r["embedding"] = to_json(*found);
      results.push_back(r);
    } else {
      out << (found ? "present: " + embedding_text(*found) : std::string("absent")) << '\n';
    }
  }
  if (json) out << nlohmann::json{{"spec", spec.to_string()}, {"results", results}}.dump() << '\n';
  return all ? kVerified : kRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Saturation numbers of linear forests: constructions, checks and exhaustive search"};
  app.require_subcommand(1);

  int n = 0;
  int t = 1;
  int jobs = 1;
  bool json = false;
  std::string spec_text;

  auto* construct = app.add_subcommand("construct", "Build a named graph and print it as graph6");
  std::string recipe;
  std::optional<int> cn;
  std::optional<int> ct;
  std::optional<int> ck;
  construct->add_option("recipe", recipe, "Recipe name")->required();
  construct->add_option("--n", cn, "Order");
  construct->add_option("--t", ct, "Number of P2 components");
  construct->add_option("--k", ck, "Book/fan size");
  bool describe_graph = false;
  construct->add_flag("--describe", describe_graph, "Print the component description after the graph6 line");

  auto* check = app.add_subcommand("check", "Check graph6 graphs on stdin for saturation");
  check->add_option("--spec", spec_text, "Target linear forest, e.g. P6+2P2")->required();
  check->add_flag("--json", json, "JSON output");

  auto* cont = app.add_subcommand("contains", "Find a copy of the target in graph6 graphs on stdin");
  cont->add_option("--spec", spec_text, "Target linear forest")->required();
  cont->add_flag("--json", json, "JSON output");

  auto* search = app.add_subcommand("satsearch", "Exhaustive minimum saturated graph search");
  std::optional<int> edge_bound;
  bool from_stdin = false;
  search->add_option("--n", n, "Order")->required();
  search->add_option("--spec", spec_text, "Target linear forest")->required();
  search->add_option("--edge-bound", edge_bound, "Only consider graphs with at most this many edges");
  search->add_flag("--stdin", from_stdin, "Read candidate graphs as graph6 from stdin");
  search->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--json", json, "JSON output");

  auto* ver = app.add_subcommand("verify", "Check a structural lemma over enumerated graphs");
  std::string lemma;
  std::string range = "6..8";
  std::string lemma_ids;
  for (LemmaId id : all_lemmas()) lemma_ids += (lemma_ids.empty() ? "" : ", ") + to_string(id);
  ver->add_option("lemma", lemma, "One of: " + lemma_ids)->required();
  ver->add_option("--n-range", range, "Orders a..b");
  ver->add_option("--t", t, "Number of P2 components (default spec P6+tP2)");
  ver->add_option("--spec", spec_text, "Target linear forest where the lemma takes one");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_flag("--json", json, "JSON output");

  auto* enumerate = app.add_subcommand("enumerate", "List graphs up to isomorphism as graph6");
  EnumFilter filter;
  enumerate->add_option("--n", n, "Order")->required();
  enumerate->add_option("--max-edges", filter.max_edges, "Edge bound");
  enumerate->add_option("--min-degree", filter.min_degree, "Minimum degree");
  enumerate->add_flag("--connected", filter.connected_only, "Connected graphs only");

  std::vector<const char*> argv;
  argv.push_back("forest-sat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (construct->parsed()) {
      ConstructionRecipe r{recipe, {}};
      if (cn) r.params["n"] = *cn;
      if (ct) r.params["t"] = *ct;
      if (ck) r.params["k"] = *ck;
      const Graph g = r.build();
      out << to_graph6(g) << '\n';
      if (describe_graph) out << describe(g) << '\n';
      return kVerified;
    }
    if (check->parsed()) return run_check(LinearForestSpec::parse(spec_text), json, in, out);
    if (cont->parsed()) return run_contains(LinearForestSpec::parse(spec_text), json, in, out);
    if (search->parsed()) {
      const LinearForestSpec spec = LinearForestSpec::parse(spec_text);
      const SearchReport report = from_stdin ? min_sat_search(n, spec, read_graph6_stream(in), edge_bound, jobs)
                                             : min_sat_search(n, spec, edge_bound, jobs);
      out << (json ? to_json(report).dump() : to_text(report)) << '\n';
      const bool sound = report.reverified || n > kBruteForceMaxOrder || spec.vertex_demand() > kBruteForceMaxDemand ||
                         !report.min_edges;
      const bool refuted = report.reference && !report.reference->asymptotic &&
                           report.min_edges != report.reference->value;
      return sound && !refuted ? kVerified : kRefuted;
    }
    if (ver->parsed()) {
      const auto id = parse_lemma_id(lemma);
      if (!id) {
        err << "unknown lemma '" << lemma << "'; expected one of: " << lemma_ids << '\n';
        return kUsage;
      }
      const auto [lo, hi] = parse_range(range);
      LemmaParams params = default_params(*id, t, lo, hi);
      if (!spec_text.empty()) params.spec = LinearForestSpec::parse(spec_text);
      params.jobs = jobs;
      params.cache_dir = cache_dir_from_env();
      const LemmaReport report = verify(*id, params);
      out << (json ? to_json(report).dump() : to_text(report)) << '\n';
      return report.passed() ? kVerified : kRefuted;
    }
    if (enumerate->parsed()) {
      enumerate_graphs(n, filter, [&](const Graph& g) { out << to_graph6(g) << '\n'; });
      return kVerified;
    }
  } catch (const SpecParseError& e) {
    err << "spec: " << e.what() << '\n';
    return kUsage;
  } catch (const StreamError& e) {
    err << "input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace forestsat
