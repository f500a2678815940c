#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "forestsat/graph.hpp"

namespace forestsat {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses one graph6 record. Trailing whitespace and an optional
/// ">>graph6<<" prefix are accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace forestsat
