#include "forestsat/report_json.hpp"

#include <algorithm>

#include "forestsat/constructions.hpp"
#include "forestsat/graph6.hpp"

namespace forestsat {

namespace {

std::string name_of(const CanonicalForm& form) { return describe(parse_graph6(form.str())); }

}  // namespace

nlohmann::json to_json(const Embedding& embedding) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const Edge& e : embedding.pairs) pairs.push_back({e.u, e.v});
  return {{"paths", embedding.paths}, {"pairs", pairs}};
}

nlohmann::json to_json(const SearchReport& report) {
  nlohmann::json out;
  out["n"] = report.n;
  out["spec"] = report.spec.to_string();
  out["edge_bound"] = report.edge_bound;
  out["source"] = report.source;
  out["vacuous"] = report.vacuous;
  out["examined"] = report.examined;
  out["min_edges"] = report.min_edges ? nlohmann::json(*report.min_edges) : nlohmann::json(nullptr);
  nlohmann::json extremal = nlohmann::json::array();
  nlohmann::json names = nlohmann::json::array();
  for (const auto& form : report.extremal) {
    extremal.push_back(form.str());
    names.push_back(name_of(form));
  }
  out["extremal"] = extremal;
  out["extremal_names"] = names;
  out["reverified"] = report.reverified;
  if (report.reference) {
    const auto& ref = *report.reference;
    out["reference"] = {{"value", ref.value},
                        {"source", ref.source},
                        {"asymptotic", ref.asymptotic},
                        {"agrees", report.min_edges && *report.min_edges == ref.value}};
  }
  if (report.spec.paths == std::vector<int>{6} && !sat_formula_in_range(report.n, report.spec.t))
    out["note"] = "order below the closed-formula range; the formula is checked on constructions only";
  return out;
}

nlohmann::json to_json(const LemmaReport& report) {
  nlohmann::json out;
  out["lemma"] = report.lemma;
  out["universe"] = report.universe;
  out["instances"] = report.instances;
  out["skipped"] = report.skipped;
  nlohmann::json by_n = nlohmann::json::object();
  for (const auto& [n, count] : report.instances_by_n) by_n[std::to_string(n)] = count;
  out["instances_by_n"] = by_n;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) violations.push_back({{"n", v.n}, {"graph6", v.graph6}, {"detail", v.detail}});
  out["violations"] = violations;
  if (!report.qualifying.empty()) {
    nlohmann::json q = nlohmann::json::object();
    for (const auto& [n, forms] : report.qualifying) {
      nlohmann::json list = nlohmann::json::array();
      for (const auto& f : forms) list.push_back({{"graph6", f}, {"name", describe(parse_graph6(f))}});
      q[std::to_string(n)] = list;
    }
    out["qualifying"] = q;
  }
  out["notes"] = report.notes;
  out["passed"] = report.passed();
  return out;
}

std::string to_text(const SearchReport& report) {
  std::string out = "n=" + std::to_string(report.n) + " spec=" + report.spec.to_string() + " ";
  if (!report.min_edges) return out + "min=none under edge bound " + std::to_string(report.edge_bound);
  out += "min=" + std::to_string(*report.min_edges) + "; extremal: ";
  std::vector<std::string> names;
  for (const CanonicalForm& f : report.extremal) names.push_back(name_of(f));
  std::sort(names.begin(), names.end());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += names[i];
  }
  if (report.vacuous) out += " (vacuous: n below the target's vertex demand)";
  if (report.reference) {
    const bool agrees = *report.min_edges == report.reference->value;
    out += "; reference " + std::to_string(report.reference->value) + (agrees ? " (agrees)" : " (differs)");
    if (report.reference->asymptotic) out += " [large-n result]";
  }
  return out;
}

std::string to_text(const LemmaReport& report) {
  std::string out = "lemma=" + report.lemma + " instances=" + std::to_string(report.instances) +
                    " skipped=" + std::to_string(report.skipped) +
                    " violations=" + std::to_string(report.violations.size()) + " universe=\"" + report.universe +
                    "\"";
  for (const auto& [n, forms] : report.qualifying) {
    out += "\n  n=" + std::to_string(n) + " qualifying:";
    for (const auto& f : forms) out += " " + describe(parse_graph6(f));
  }
  for (const auto& v : report.violations) out += "\n  violation n=" + std::to_string(v.n) + " " + v.graph6 + ": " + v.detail;
  for (const auto& note : report.notes) out += "\n  note: " + note;
  return out;
}

}  // namespace forestsat
