#pragma once

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "randic/canonical.hpp"
#include "randic/graph.hpp"

namespace randic {

// Vertex numbering of every construction is fixed: centers first, then
// spokes/arms in order, so the graph6 serialization is reproducible.

// Star on p+1 vertices with every edge subdivided; order 2p+1. Vertex 0 is
// the center, spoke i uses vertices 1+2i (mid) and 2+2i (leaf).
inline Graph sun(int p) {
  if (p < 0) throw std::invalid_argument("sun: p must be >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(0, 1 + 2 * i);
    edges.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  return Graph::from_edges(2 * p + 1, std::move(edges));
}

// Centers of a p-sun and a q-sun joined by an edge; order 2(p+q+1).
// Vertex 0 is the p-center, vertex 2p+1 the q-center.
inline Graph double_sun(int p, int q) {
  if (q < 0 || p < q) throw std::invalid_argument("double_sun: requires p >= q >= 0");
  std::vector<Edge> edges;
  const int c2 = 2 * p + 1;
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(0, 1 + 2 * i);
    edges.emplace_back(1 + 2 * i, 2 + 2 * i);
  }
  edges.emplace_back(0, c2);
  for (int i = 0; i < q; ++i) {
    edges.emplace_back(c2, c2 + 1 + 2 * i);
    edges.emplace_back(c2 + 1 + 2 * i, c2 + 2 + 2 * i);
  }
  return Graph::from_edges(2 * (p + q + 1), std::move(edges));
}

// The double sun of even order n with |p-q| <= 1.
inline Graph balanced_double_sun(int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("balanced_double_sun: order must be even and >= 2");
  if (n % 4 == 2) {
    int p = (n - 2) / 4;
    return double_sun(p, p);
  }
  int p = n / 4;
  return double_sun(p, p - 1);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph star_graph(int n) {  // K_{1,n-1}, center 0
  if (n < 1) throw std::invalid_argument("star: n must be >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

// Paths of the given lengths joined at a common center (vertex 0). At least
// three arms so the center is the unique vertex of degree > 2.
inline Graph starlike(const std::vector<int>& arms) {
  if (arms.size() < 3) throw std::invalid_argument("starlike: needs at least 3 arms");
  for (int a : arms)
    if (a < 1) throw std::invalid_argument("starlike: arm lengths must be >= 1");
  std::vector<Edge> edges;
  int next = 1;
  for (int a : arms) {
    int prev = 0;
    for (int k = 0; k < a; ++k) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, std::move(edges));
}

// Replace every edge {u,v} by a new midpoint vertex adjacent to both u and
// v. The result is bipartite with the midpoints forming a side of degree-2
// vertices. Midpoint of the k-th edge (sorted order) is vertex n+k.
inline Graph edge_double_subdivision(const Graph& g) {
  std::vector<Edge> edges;
  const int n = g.order();
  int w = n;
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, w);
    edges.emplace_back(v, w);
    ++w;
  }
  return Graph::from_edges(n + g.size(), std::move(edges));
}

namespace detail {

// Beyer-Hedetniemi successor on canonical level sequences of rooted trees
// (root level 1), lexicographically decreasing from the path to the star.
// Returns false when the input was the last sequence.
inline bool next_rooted_level_sequence(std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (level[i] >= 3) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (level[i] == level[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  return true;
}

inline void first_rooted_level_sequence(int n, std::vector<int>& level) {
  level.resize(n);
  for (int i = 0; i < n; ++i) level[i] = i + 1;
}

// Largest subtree hanging off the root of a level sequence.
inline int max_root_subtree(const std::vector<int>& level) {
  int best = 0, current = 0;
  for (std::size_t i = 1; i < level.size(); ++i) {
    if (level[i] == 2) {
      best = std::max(best, current);
      current = 1;
    } else {
      ++current;
    }
  }
  return std::max(best, current);
}

inline Graph graph_from_level_sequence(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  std::vector<int> latest(n + 2, -1);
  latest[1] = 0;
  for (int i = 1; i < n; ++i) {
    edges.emplace_back(latest[level[i] - 1], i);
    latest[level[i]] = i;
  }
  return Graph::from_edges(n, std::move(edges));
}

// Join two rooted level sequences by an edge between their roots.
inline Graph graph_from_level_pair(const std::vector<int>& a, const std::vector<int>& b) {
  const int h = static_cast<int>(a.size());
  Graph ga = graph_from_level_sequence(a);
  Graph gb = graph_from_level_sequence(b);
  std::vector<Edge> edges = ga.edges();
  for (const auto& [u, v] : gb.edges()) edges.emplace_back(u + h, v + h);
  edges.emplace_back(0, h);
  return Graph::from_edges(2 * h, std::move(edges));
}

}  // namespace detail

// One representative per isomorphism class of free trees on n vertices, in
// a fixed deterministic order. Trees with a centroid vertex come from
// rooted level sequences whose root is the centroid; for even n the
// bicentroidal trees follow as unordered pairs of rooted halves.
class TreeStream {
 public:
  explicit TreeStream(int n) : n_(n) {
    if (n < 1 || n > 20)
      throw std::invalid_argument("TreeStream: n must be in 1..20");
    detail::first_rooted_level_sequence(n_, seq_);
    phase1_live_ = true;
  }

  std::optional<Graph> next() {
    // centroid-rooted phase
    while (phase1_live_) {
      bool take = detail::max_root_subtree(seq_) <= (n_ - 1) / 2;
      Graph g = take ? detail::graph_from_level_sequence(seq_) : Graph{};
      phase1_live_ = detail::next_rooted_level_sequence(seq_);
      if (take) return g;
    }
    // bicentroidal phase (even n only)
    if (n_ % 2 != 0) return std::nullopt;
    if (!halves_built_) {
      halves_built_ = true;
      std::vector<int> s;
      detail::first_rooted_level_sequence(n_ / 2, s);
      halves_.push_back(s);
      while (detail::next_rooted_level_sequence(s)) halves_.push_back(s);
      i_ = 0;
      j_ = 0;
    }
    if (i_ >= halves_.size()) return std::nullopt;
    Graph g = detail::graph_from_level_pair(halves_[i_], halves_[j_]);
    if (++j_ >= halves_.size()) {
      ++i_;
      j_ = i_;
    }
    return g;
  }

 private:
  int n_;
  std::vector<int> seq_;
  bool phase1_live_ = false;
  bool halves_built_ = false;
  std::vector<std::vector<int>> halves_;
  std::size_t i_ = 0, j_ = 0;
};

inline std::vector<Graph> enumerate_trees(int n) {
  TreeStream s(n);
  std::vector<Graph> out;
  while (auto g = s.next()) out.push_back(std::move(*g));
  return out;
}

namespace detail {

// All simple graphs on n vertices up to isomorphism as canonical adjacency
// masks, built by extending each (n-1)-vertex class with every possible
// neighborhood of a new vertex. Memoized; n <= 7.
inline const std::vector<std::uint64_t>& all_graph_masks(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument(
        "built-in graph enumeration covers n <= 7; ingest a graph6 file for larger orders");
  static std::mutex mu;
  static std::vector<std::vector<std::uint64_t>> cache;  // cache[k-1] = masks for order k
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) cache.push_back({0});  // K1
  while (static_cast<int>(cache.size()) < n) {
    const int k = static_cast<int>(cache.size());  // extending order k -> k+1
    const int shift = k * (k - 1) / 2;
    std::vector<std::uint64_t> next;
    for (std::uint64_t base : cache[k - 1]) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << k); ++nb) {
        std::uint64_t mask = base | (nb << shift);
        next.push_back(canonical_mask(graph_from_mask(k + 1, mask)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cache.push_back(std::move(next));
  }
  return cache[n - 1];
}

}  // namespace detail

// Every isomorphism class of simple graphs on n vertices (n <= 7 built in),
// including disconnected ones, in ascending canonical-mask order.
inline std::vector<Graph> enumerate_all_graphs(int n) {
  std::vector<Graph> out;
  for (auto m : detail::all_graph_masks(n)) out.push_back(graph_from_mask(n, m));
  return out;
}

// One representative per isomorphism class of connected simple graphs.
inline std::vector<Graph> enumerate_connected_graphs(int n) {
  std::vector<Graph> out;
  for (auto m : detail::all_graph_masks(n)) {
    Graph g = graph_from_mask(n, m);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace randic
