#include "forestsat/graph6.hpp"

namespace forestsat {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - 63;
  if (value < 0 || value > 63)
    throw Graph6Error("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                      " outside 63..126");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
                           text.back() == '\t'))
    text.remove_suffix(1);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error("graph6: empty record");

  std::size_t pos = 0;
  long order = 0;
  if (text[0] != '~') {
    order = sextet(text[0]);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw Graph6Error("graph6: order exceeds 258047 (8-byte size field)");
    if (text.size() < 4) throw Graph6Error("graph6: truncated size field");
    order = (long{sextet(text[1])} << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (order < 63) throw Graph6Error("graph6: non-minimal size field");
    pos = 4;
  }
  if (order > kMaxOrder)
    throw Graph6Error("graph6: order " + std::to_string(order) + " over cap " +
                      std::to_string(kMaxOrder));

  const int n = static_cast<int>(order);
  const long bits = long{n} * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected)
    throw Graph6Error("graph6: expected " + std::to_string(expected) + " bytes for order " +
                      std::to_string(n) + ", got " + std::to_string(text.size()));

  Graph g(n);
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = sextet(text.back());
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw Graph6Error("graph6: nonzero padding bits");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace forestsat
