#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "randic/graph.hpp"

namespace randic {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: each data byte is 63 + a 6-bit group; the order n is encoded as
// chr(63+n) for n <= 62, or '~' followed by three 6-bit groups for
// n <= 258047. The upper triangle is emitted column-major
// ((0,1),(0,2),(1,2),(0,3),...), MSB first, zero-padded to a multiple of 6.

// One line of standard graph6, optional ">>graph6<<" header, optional
// trailing newline.
inline Graph parse_graph6(std::string_view text) {
  static constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  auto group = [&](std::size_t at) -> int {
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126)
      throw ParseError("graph6 byte out of range 63..126", at);
    return c - 63;
  };

  long long n;
  if (text[pos] != '~') {
    n = group(pos);
    pos += 1;
  } else {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6 orders above 258047 are not supported", pos);
    if (pos + 4 > text.size()) throw ParseError("truncated graph6 order", pos);
    n = (static_cast<long long>(group(pos + 1)) << 12) |
        (static_cast<long long>(group(pos + 2)) << 6) | group(pos + 3);
    pos += 4;
  }
  if (n < 1) throw ParseError("graph6 order must be >= 1", 0);

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < need) throw ParseError("truncated graph6 data", text.size());
  if (text.size() - pos > need) throw ParseError("trailing junk after graph6 data", pos + need);

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int g = group(pos + static_cast<std::size_t>(k / 6));
      if (g >> (5 - k % 6) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

// Canonical for the given labeling: short form for n <= 62, no header.
inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + (n >> 12 & 63)));
    out.push_back(static_cast<char>(63 + (n >> 6 & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph6 orders above 258047 are not supported");
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
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

// Edge-list text: first line "n m", then m lines "u v" (0-based).
inline Graph parse_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("edge list line " + std::to_string(lineno) + ": " + what, 0);
  };

  if (!next_line()) fail("missing header \"n m\"");
  long long n, m;
  {
    std::istringstream hs(line);
    std::string junk;
    if (!(hs >> n >> m) || (hs >> junk)) fail("header must be \"n m\"");
  }
  if (n < 1) fail("vertex count must be >= 1");
  if (m < 0) fail("edge count must be >= 0");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    if (!next_line()) fail("expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    std::istringstream es(line);
    long long u, v;
    std::string junk;
    if (!(es >> u >> v) || (es >> junk)) fail("edge must be \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
    if (u == v) fail("self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line()) fail("trailing data after declared edges");
  try {
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

inline std::string to_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace randic
