#pragma once

#include <functional>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "forestsat/graph.hpp"

namespace forestsat {

struct EnumFilter {
  /// Negative means unbounded.
  int max_edges = -1;
  int min_degree = 0;
  bool connected_only = false;

  bool accepts(const Graph& g) const;
};

inline constexpr int kEnumerationMaxOrder = 10;

/// One representative per isomorphism class of order-n graphs passing the
/// filter, by canonical vertex augmentation. Depth-first, fixed child order.
void enumerate_graphs(int n, const EnumFilter& filter, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_graphs(int n, const EnumFilter& filter = {});

/// Same set as enumerate_graphs, split across `jobs` workers by subtrees.
/// `visit` runs concurrently and receives the worker index in 0..jobs-1.
/// Visit order is unspecified for jobs > 1.
void enumerate_graphs_parallel(int n, const EnumFilter& filter, int jobs,
                               const std::function<void(const Graph&, int)>& visit);

/// Runs fn(i, worker) for i in 0..count-1 on `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t, int)>& fn);

class StreamError : public std::runtime_error {
 public:
  StreamError(const std::string& what, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

/// Reads graph6 records, one per line, in input order. Blank lines are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace forestsat
