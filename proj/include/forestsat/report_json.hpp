#pragma once

#include <string>

#include "forestsat/lemmas.hpp"
#include "forestsat/saturation.hpp"
#include "json.hpp"

namespace forestsat {

nlohmann::json to_json(const SearchReport& report);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const Embedding& embedding);

/// One-line summaries, e.g. "min=3; extremal: K3+K1, S4".
std::string to_text(const SearchReport& report);
std::string to_text(const LemmaReport& report);

}  // namespace forestsat
