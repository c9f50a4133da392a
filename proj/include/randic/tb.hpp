#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "randic/closed_forms.hpp"
#include "randic/graph.hpp"
#include "randic/rational.hpp"
#include "randic/spectra.hpp"

namespace randic {

// A TB graph is bipartite with every B-vertex of degree at most 2; B splits
// into the degree-1 part B1 and the degree-2 part B2, which drive the R^2
// diagonal bounds.
struct TBDecomposition {
  Bipartition bip;
  std::vector<int> b1;  // B-vertices of degree 1
  std::vector<int> b2;  // B-vertices of degree 2
};

inline TBDecomposition tb_decompose(const Graph& g) {
  auto bip = is_tb(g);
  if (!bip) throw std::invalid_argument("tb_decompose: graph is not TB");
  TBDecomposition d;
  d.bip = std::move(*bip);
  for (int v : d.bip.side_b) {
    if (g.degree(v) == 1)
      d.b1.push_back(v);
    else if (g.degree(v) == 2)
      d.b2.push_back(v);
    else
      throw std::invalid_argument("tb_decompose: B-vertex of degree outside {1,2}");
  }
  if (g.size() != static_cast<int>(d.b1.size()) + 2 * static_cast<int>(d.b2.size()))
    throw std::logic_error("tb_decompose: |E| = |B1| + 2|B2| failed");
  if (is_connected(g) &&
      static_cast<int>(d.bip.side_a.size()) > static_cast<int>(d.b2.size()) + 1)
    throw std::logic_error("tb_decompose: |A| <= |B2| + 1 failed");
  return d;
}

namespace detail {

inline void require_connected_tb(const Graph& g, const char* who) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": graph not connected");
  if (g.order() < 3) throw std::invalid_argument(std::string(who) + ": requires n >= 3");
}

}  // namespace detail

// Exact diagonal entries R^2_{a,a} = sum_{b in N(a)} 1/(deg(b) deg(a)) for
// a in A, validated against 1/2 <= R^2_{a,a} <= 1/2 + |N(a) cap B1|/4 and,
// for deg(a) >= 2, the closed form |N(a) cap B1|/(2 deg(a)) + 1/2.
inline std::vector<std::pair<int, Rat>> diag_R2_A(const Graph& g, const TBDecomposition& d) {
  detail::require_connected_tb(g, "diag_R2_A");
  std::vector<char> in_b1(g.order(), 0);
  for (int v : d.b1) in_b1[v] = 1;
  std::vector<std::pair<int, Rat>> out;
  for (int a : d.bip.side_a) {
    const int da = g.degree(a);
    Rat value = 0;
    int b1_neighbors = 0;
    for (int b : g.neighbors(a)) {
      value += Rat(1, static_cast<long>(g.degree(b)) * da);
      if (in_b1[b]) ++b1_neighbors;
    }
    if (da == 1) {
      // a pendant A-vertex's neighbor must be a degree-2 B-vertex in a
      // connected TB graph on >= 3 vertices
      if (g.degree(g.neighbors(a)[0]) != 2)
        throw std::logic_error("diag_R2_A: pendant A-vertex with neighbor degree != 2");
    } else {
      if (value != Rat(b1_neighbors, 2L * da) + Rat(1, 2))
        throw std::logic_error("diag_R2_A: closed form mismatch");
    }
    if (value < Rat(1, 2) || value > Rat(1, 2) + Rat(b1_neighbors, 4))
      throw std::logic_error("diag_R2_A: lemma bounds violated");
    out.emplace_back(a, value);
  }
  return out;
}

// (tr R_A^2, (n+1)/4), exact; the trace never exceeds the bound.
inline std::pair<Rat, Rat> trace_RA2_bound(const Graph& g) {
  detail::require_connected_tb(g, "trace_RA2_bound");
  auto d = tb_decompose(g);
  Rat trace = 0;
  for (const auto& [a, value] : diag_R2_A(g, d)) trace += value;
  Rat bound = Rat(g.order() + 1, 4);
  if (trace > bound) throw std::logic_error("trace_RA2_bound: tr R_A^2 > (n+1)/4");
  return {trace, bound};
}

// (tr R^2, (n+1)/2), exact; tr R^2 = 2 tr R_A^2 by the block structure.
inline std::pair<Rat, Rat> trace_R2_tb_bound(const Graph& g) {
  detail::require_connected_tb(g, "trace_R2_tb_bound");
  Rat trace = trace_R2_exact(g);
  auto [ta, unused] = trace_RA2_bound(g);
  if (trace != 2 * ta) throw std::logic_error("trace_R2_tb_bound: tr R^2 != 2 tr R_A^2");
  Rat bound = Rat(g.order() + 1, 2);
  if (trace > bound) throw std::logic_error("trace_R2_tb_bound: tr R^2 > (n+1)/2");
  return {trace, bound};
}

struct TBEnergyBound {
  double value;              // sqrt(n-2-null) sqrt(n-3) sqrt2/2 + 2
  double no_nullity_value;   // sqrt(n-2) sqrt(n-3) sqrt2/2 + 2
  std::optional<double> sun_form;  // (n-3) sqrt2/2 + 2 when null >= 1
  int nullity;
};

inline TBEnergyBound tb_energy_bound(const Graph& g) {
  detail::require_connected_tb(g, "tb_energy_bound");
  if (!is_tb(g)) throw std::invalid_argument("tb_energy_bound: graph is not TB");
  const int n = g.order();
  const int nul = nullity(g);
  const double sqrt2 = std::sqrt(2.0);
  TBEnergyBound b{};
  b.nullity = nul;
  const double head = std::sqrt(std::max(n - 2 - nul, 0)) ;
  b.value = head * std::sqrt(static_cast<double>(n - 3)) * sqrt2 / 2.0 + 2.0;
  b.no_nullity_value =
      std::sqrt(static_cast<double>(n - 2)) * std::sqrt(static_cast<double>(n - 3)) * sqrt2 / 2.0 +
      2.0;
  if (nul >= 1) b.sun_form = (n - 3) * sqrt2 / 2.0 + 2.0;
  return b;
}

struct OddTBComparison {
  int n;
  int nullity;
  double re;
  double sun_bound;  // sun energy of the same odd order
  bool holds;        // nullity >= 1 and re <= sun_bound + 1e-9
};

// Odd-order TB graphs have nullity at least 1 and Randic energy at most the
// sun's of the same order.
inline OddTBComparison odd_tb_vs_sun(const Graph& g) {
  detail::require_connected_tb(g, "odd_tb_vs_sun");
  if (!is_tb(g)) throw std::invalid_argument("odd_tb_vs_sun: graph is not TB");
  if (g.order() % 2 == 0) throw std::invalid_argument("odd_tb_vs_sun: order must be odd");
  OddTBComparison c{};
  c.n = g.order();
  c.nullity = nullity(g);
  c.re = randic_energy(g);
  c.sun_bound = sun_energy((c.n - 1) / 2);
  c.holds = c.nullity >= 1 && c.re <= c.sun_bound + 1e-9;
  return c;
}

}  // namespace randic
