#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "randic/graph.hpp"
#include "randic/rational.hpp"
#include "randic/symmatrix.hpp"

namespace randic {

// R has 1/sqrt(d_u d_v) on edges and 0 elsewhere; rows of isolated vertices
// are all zero.
inline SymMatrix randic_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const auto& [u, v] : g.edges())
    m.set(u, v, 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
  return m;
}

// I - R, entrywise. Isolated vertices get diagonal 1.
inline SymMatrix normalized_laplacian(const Graph& g) {
  SymMatrix m = randic_matrix(g);
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.set(i, j, (i == j ? 1.0 : 0.0) - m(i, j));
  return m;
}

inline SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) m.set(u, v, 1.0);
  return m;
}

inline SymMatrix laplacian_matrix(const Graph& g) {
  SymMatrix m(g.order());
  for (const auto& [u, v] : g.edges()) m.set(u, v, -1.0);
  for (int i = 0; i < g.order(); ++i) m.set(i, i, static_cast<double>(g.degree(i)));
  return m;
}

inline Spectrum eigenvalues(const SymMatrix& m, MatrixKind source, double zero_tol = 1e-8) {
  Spectrum s;
  s.values = jacobi_eigenvalues(m);
  s.zero_tol = zero_tol;
  s.source = source;
  return s;
}

inline Spectrum randic_spectrum(const Graph& g, double zero_tol = 1e-8) {
  return eigenvalues(randic_matrix(g), MatrixKind::randic, zero_tol);
}

inline Spectrum normalized_laplacian_spectrum(const Graph& g, double zero_tol = 1e-8) {
  return eigenvalues(normalized_laplacian(g), MatrixKind::normalized_laplacian, zero_tol);
}

inline Spectrum adjacency_spectrum(const Graph& g, double zero_tol = 1e-8) {
  return eigenvalues(adjacency_matrix(g), MatrixKind::adjacency, zero_tol);
}

inline Spectrum laplacian_spectrum(const Graph& g, double zero_tol = 1e-8) {
  return eigenvalues(laplacian_matrix(g), MatrixKind::laplacian, zero_tol);
}

inline double randic_energy(const Graph& g) {
  double e = 0.0;
  for (double v : randic_spectrum(g).values) e += std::abs(v);
  return e;
}

// Sum |mu_i - 1| over the normalized Laplacian spectrum. Defined only for
// graphs without isolated vertices; equals the Randic energy there, but is
// computed through its own eigensolve so the identity stays checkable.
inline double normalized_laplacian_energy(const Graph& g) {
  if (has_isolated_vertex(g))
    throw std::domain_error(
        "normalized_laplacian_energy requires a graph without isolated vertices");
  double e = 0.0;
  for (double v : normalized_laplacian_spectrum(g).values) e += std::abs(v - 1.0);
  return e;
}

inline double adjacency_energy(const Graph& g) {
  double e = 0.0;
  for (double v : adjacency_spectrum(g).values) e += std::abs(v);
  return e;
}

// Sum |mu_i - 2m/n| over the combinatorial Laplacian spectrum.
inline double laplacian_energy(const Graph& g) {
  const double mean = 2.0 * g.size() / g.order();
  double e = 0.0;
  for (double v : laplacian_spectrum(g).values) e += std::abs(v - mean);
  return e;
}

// Sum over edges of 1/(d_u d_v), exact.
inline Rat randic_index_minus1_exact(const Graph& g) {
  Rat r = 0;
  for (const auto& [u, v] : g.edges())
    r += Rat(1, static_cast<long>(g.degree(u)) * g.degree(v));
  return r;
}

inline double randic_index_minus1(const Graph& g) {
  return to_double(randic_index_minus1_exact(g));
}

inline Rat trace_R2_exact(const Graph& g) { return 2 * randic_index_minus1_exact(g); }

inline double trace_R2(const Graph& g) { return to_double(trace_R2_exact(g)); }

// Multiplicity of the eigenvalue 0 of R. Forests get the exact count
// n - 2*matching (isolated vertices each contribute 1); everything else
// counts |lambda| < zero_tol. On forests both routes are computed and a
// disagreement is reported as an error rather than papered over.
inline int nullity(const Graph& g, double zero_tol = 1e-8) {
  const int by_tolerance = randic_spectrum(g, zero_tol).count_zero();
  if (is_forest(g)) {
    const int by_matching = g.order() - 2 * matching_number(g);
    if (by_matching != by_tolerance)
      throw std::runtime_error("nullity: matching-based count " + std::to_string(by_matching) +
                               " disagrees with tolerance-based count " +
                               std::to_string(by_tolerance));
    return by_matching;
  }
  return by_tolerance;
}

// tr R_A^2 and tr R_B^2 for a bipartition, computed combinatorially:
// each side's trace is the sum over its vertices of sum_{w in N(v)}
// 1/(d_v d_w). For a valid bipartition the two are equal and sum to tr R^2.
inline std::pair<Rat, Rat> block_traces_exact(const Graph& g, const Bipartition& b) {
  const int n = g.order();
  std::vector<std::int8_t> side(n, -1);
  for (int v : b.side_a) side.at(v) = 0;
  for (int v : b.side_b) {
    if (side.at(v) == 0) throw std::invalid_argument("block_traces: sides overlap");
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] < 0) throw std::invalid_argument("block_traces: sides do not cover V");
  for (const auto& [u, v] : g.edges())
    if (side[u] == side[v])
      throw std::invalid_argument("block_traces: edge inside one side, not a bipartition");

  Rat ta = 0, tb = 0;
  for (int v = 0; v < n; ++v) {
    Rat sum = 0;
    for (int w : g.neighbors(v)) sum += Rat(1, static_cast<long>(g.degree(v)) * g.degree(w));
    (side[v] == 0 ? ta : tb) += sum;
  }
  return {ta, tb};
}

inline std::pair<double, double> block_traces(const Graph& g, const Bipartition& b) {
  auto [ta, tb] = block_traces_exact(g, b);
  return {to_double(ta), to_double(tb)};
}

}  // namespace randic
