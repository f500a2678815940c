#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace forestsat {

/// Exit codes: 0 claim verified or output produced, 1 claim refuted, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace forestsat
