#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "randic/graph.hpp"
#include "randic/graph6.hpp"

namespace randic {

namespace detail {

// BFS order and parents for a rooted view of a tree.
inline void rooted_order(const Graph& t, int root, std::vector<int>& order,
                         std::vector<int>& parent) {
  const int n = t.order();
  order.clear();
  order.reserve(n);
  parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(root);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : t.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        order.push_back(w);
      }
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("rooted_order: graph is not connected");
}

}  // namespace detail

// The one or two vertices minimizing the largest component left by their
// removal.
inline std::vector<int> tree_centroids(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("tree_centroids: input is not a tree");
  const int n = t.order();
  std::vector<int> order, parent;
  detail::rooted_order(t, 0, order, parent);
  std::vector<int> size(n, 1), worst(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (parent[v] >= 0) {
      size[parent[v]] += size[v];
      worst[parent[v]] = std::max(worst[parent[v]], size[v]);
    }
  }
  for (int v = 0; v < n; ++v) worst[v] = std::max(worst[v], n - size[v]);
  int best = *std::min_element(worst.begin(), worst.end());
  std::vector<int> cs;
  for (int v = 0; v < n; ++v)
    if (worst[v] == best) cs.push_back(v);
  return cs;
}

// AHU code of the tree rooted at `root`: "(" + sorted child codes + ")".
inline std::string rooted_tree_code(const Graph& t, int root) {
  std::vector<int> order, parent;
  detail::rooted_order(t, root, order, parent);
  std::vector<std::vector<std::string>> kids(t.order());
  std::string result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& k = kids[v];
    std::sort(k.begin(), k.end());
    std::string code = "(";
    for (auto& c : k) code += c;
    code += ")";
    if (parent[v] >= 0)
      kids[parent[v]].push_back(std::move(code));
    else
      result = std::move(code);
  }
  return result;
}

// Complete isomorphism invariant for free trees: minimum AHU code over the
// centroid rootings.
inline std::string tree_canonical_code(const Graph& t) {
  auto cs = tree_centroids(t);
  std::string best = rooted_tree_code(t, cs[0]);
  for (std::size_t i = 1; i < cs.size(); ++i)
    best = std::min(best, rooted_tree_code(t, cs[i]));
  return best;
}

// Upper-triangle bit index in column-major order, matching graph6.
inline int pair_index(int i, int j) {  // requires i < j
  return j * (j - 1) / 2 + i;
}

inline std::uint64_t adjacency_mask(const Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("adjacency_mask: n > 11 does not fit 64 bits");
  std::uint64_t m = 0;
  for (const auto& [u, v] : g.edges()) m |= std::uint64_t{1} << pair_index(u, v);
  return m;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (mask >> pair_index(i, j) & 1) edges.emplace_back(i, j);
  return Graph::from_edges(n, std::move(edges));
}

// Minimum adjacency mask over all vertex permutations. Exact canonical form;
// exhaustive, so kept to n <= 10. Bits are decided from the most significant
// pair downward so a permutation can be abandoned as soon as its settled
// high bits exceed the incumbent's.
inline std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw std::invalid_argument("canonical_mask: exhaustive form limited to n <= 10");
  const std::uint64_t mask = adjacency_mask(g);
  const int nbits = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pairs(nbits);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs[pair_index(i, j)] = {i, j};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    bool worse = false;
    for (int k = nbits - 1; k >= 0; --k) {
      auto [i, j] = pairs[k];
      int pi = perm[i], pj = perm[j];
      if (pi > pj) std::swap(pi, pj);
      if (mask >> pair_index(pi, pj) & 1) m |= std::uint64_t{1} << k;
      if ((m >> k) > (best >> k)) {
        worse = true;
        break;
      }
    }
    if (!worse && m < best) best = m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Canonical string key usable across graph kinds: AHU codes for trees,
// canonical masks for small graphs, the labeled graph6 otherwise (stable
// but only label-canonical).
inline std::string graph_canonical_key(const Graph& g) {
  if (is_tree(g)) return "T" + std::to_string(g.order()) + ":" + tree_canonical_code(g);
  if (g.order() <= 10) {
    return "G" + std::to_string(g.order()) + ":" +
           to_graph6(graph_from_mask(g.order(), canonical_mask(g)));
  }
  return "L:" + to_graph6(g);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.order(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  const bool ta = is_tree(a), tb = is_tree(b);
  if (ta != tb) return false;
  if (ta) return tree_canonical_code(a) == tree_canonical_code(b);
  if (a.order() <= 10) return canonical_mask(a) == canonical_mask(b);
  throw std::invalid_argument("is_isomorphic: general graphs limited to n <= 10");
}

}  // namespace randic
