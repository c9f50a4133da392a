#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace randic {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Immutable simple undirected graph on vertices 0..n-1.
// No self-loops, no multi-edges; degree list is derived and cached.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph order must be >= 1");
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop not allowed");
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw std::invalid_argument("duplicate edge");
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (const auto& [u, v] : g.edges_) {
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
  }

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  // Labeled equality (same order and same edge set under the given labeling).
  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

struct Bipartition {
  std::vector<int> side_a;  // sorted
  std::vector<int> side_b;  // sorted
};

namespace detail {

// Per-vertex 2-coloring, component by component; the smallest vertex of each
// component gets color 0. Empty result when some component has an odd cycle.
inline std::optional<std::vector<std::int8_t>> two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<std::int8_t> color(n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = static_cast<std::int8_t>(1 - color[v]);
          q.push(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

inline std::vector<int> component_ids(const Graph& g, int& count) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  count = 0;
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v))
        if (comp[w] < 0) {
          comp[w] = count;
          q.push(w);
        }
    }
    ++count;
  }
  return comp;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  int count = 0;
  detail::component_ids(g, count);
  return count == 1;
}

inline bool is_forest(const Graph& g) {
  int count = 0;
  detail::component_ids(g, count);
  return g.size() == g.order() - count;
}

inline bool is_tree(const Graph& g) {
  return g.size() == g.order() - 1 && is_connected(g);
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

// 2-coloring as vertex sets; in each component the side of the smallest
// vertex goes to A. Absent exactly when some component has an odd cycle.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  auto color = detail::two_coloring(g);
  if (!color) return std::nullopt;
  Bipartition b;
  for (int v = 0; v < g.order(); ++v)
    ((*color)[v] == 0 ? b.side_a : b.side_b).push_back(v);
  return b;
}

// True iff some edge {u,v} has deg(u) = 1 and deg(v) = 2, i.e. a pendant
// vertex whose neighbor has degree 2.
inline bool has_suspended_path(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == 1 && g.degree(v) == 2) return true;
    if (g.degree(v) == 1 && g.degree(u) == 2) return true;
  }
  return false;
}

// Bipartition A/B with deg(b) <= 2 for every b in B, when one exists.
// Each component's coloring is oriented independently: prefer the
// orientation with more degree-2 B-vertices, break ties by putting the
// component's smallest vertex in A. Isolated vertices land in A.
inline std::optional<Bipartition> is_tb(const Graph& g) {
  auto color = detail::two_coloring(g);
  if (!color) return std::nullopt;
  int ncomp = 0;
  auto comp = detail::component_ids(g, ncomp);

  // score[c][s]: viability of taking color class s as B in component c;
  // -1 when some s-colored vertex has degree > 2, else the count of
  // degree-2 vertices in the class (the B2 size for that orientation).
  std::vector<std::array<int, 2>> score(ncomp, std::array<int, 2>{0, 0});
  for (int v = 0; v < g.order(); ++v) {
    int c = comp[v], s = (*color)[v];
    if (score[c][s] < 0) continue;
    if (g.degree(v) > 2)
      score[c][s] = -1;
    else if (g.degree(v) == 2)
      ++score[c][s];
  }
  // b_side[c]: which color class becomes B for component c.
  std::vector<int> b_side(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    int s0 = score[c][0], s1 = score[c][1];
    if (s0 < 0 && s1 < 0) return std::nullopt;
    if (s0 < 0)
      b_side[c] = 1;
    else if (s1 < 0)
      b_side[c] = 0;
    else if (s0 > s1)
      b_side[c] = 0;
    else
      b_side[c] = 1;  // strict win for class 1, or tie: the component's
                      // smallest vertex has color 0 and stays in A
  }
  Bipartition b;
  for (int v = 0; v < g.order(); ++v) {
    bool in_b = ((*color)[v] == b_side[comp[v]]);
    (in_b ? b.side_b : b.side_a).push_back(v);
  }
  return b;
}

namespace detail {

// Maximum matching on a forest by leaf pairing (exact).
inline int forest_matching(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  std::queue<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push(v);
  }
  int matched = 0;
  while (!leaves.empty()) {
    int u = leaves.front();
    leaves.pop();
    if (removed[u] || deg[u] != 1) continue;
    int mate = -1;
    for (int w : g.neighbors(u))
      if (!removed[w]) {
        mate = w;
        break;
      }
    if (mate < 0) continue;
    ++matched;
    removed[u] = removed[mate] = 1;
    for (int w : g.neighbors(mate)) {
      if (removed[w]) continue;
      if (--deg[w] == 1) leaves.push(w);
    }
  }
  return matched;
}

// Kuhn augmenting paths for bipartite graphs.
inline int bipartite_matching(const Graph& g, const std::vector<std::int8_t>& color) {
  const int n = g.order();
  std::vector<int> match(n, -1);
  std::vector<char> seen(n);
  std::function<bool(int)> try_augment = [&](int v) -> bool {
    for (int w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      if (match[w] < 0 || try_augment(match[w])) {
        match[v] = w;
        match[w] = v;
        return true;
      }
    }
    return false;
  };
  int matched = 0;
  for (int v = 0; v < n; ++v) {
    if (color[v] != 0 || match[v] >= 0) continue;
    std::fill(seen.begin(), seen.end(), 0);
    if (try_augment(v)) ++matched;
  }
  return matched;
}

// Exhaustive maximum matching over vertex subsets, memoized on the used-mask.
inline int exhaustive_matching(const Graph& g) {
  std::unordered_map<std::uint32_t, int> memo;
  const int n = g.order();
  const std::uint32_t full = (n == 32) ? 0xffffffffu : ((1u << n) - 1u);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == full) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = 0;
    while (mask >> v & 1u) ++v;
    int r = best(mask | (1u << v));  // v stays unmatched
    for (int w : g.neighbors(v))
      if (!(mask >> w & 1u)) r = std::max(r, 1 + best(mask | (1u << v) | (1u << w)));
    memo.emplace(mask, r);
    return r;
  };
  return best(0);
}

}  // namespace detail

// Size of a maximum matching. Forests use greedy leaf pairing (exact),
// bipartite graphs augmenting paths, everything else exhaustive search
// (limited to n <= 12).
inline int matching_number(const Graph& g) {
  if (is_forest(g)) return detail::forest_matching(g);
  if (auto color = detail::two_coloring(g)) return detail::bipartite_matching(g, *color);
  if (g.order() > 12)
    throw std::invalid_argument(
        "matching_number: exhaustive search is limited to n <= 12 for non-bipartite graphs");
  return detail::exhaustive_matching(g);
}

}  // namespace randic
