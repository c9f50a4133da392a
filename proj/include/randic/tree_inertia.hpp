#pragma once

#include <cmath>
#include <cstdlib>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "randic/canonical.hpp"
#include "randic/graph.hpp"
#include "randic/rational.hpp"

namespace randic {

// Eigenvalue counts relative to a shift point, by Sylvester's law of
// inertia: the sign pattern of any diagonal matrix congruent to L - xI.
struct InertiaTriple {
  int above = 0;
  int equal = 0;
  int below = 0;

  bool operator==(const InertiaTriple& o) const {
    return above == o.above && equal == o.equal && below == o.below;
  }
};

struct TreeDiagonalization {
  std::vector<Rat> diagonal;  // indexed by vertex
  InertiaTriple inertia;
};

namespace detail {

// Leaves-to-root congruent diagonalization of L - xI on a tree, templated
// over the scalar so the exact rational and floating variants share the
// control flow. `is_zero` absorbs the equality band of the floating variant.
template <typename Scalar, typename IsZero>
std::vector<Scalar> diagonalize_core(const Graph& t, const Scalar& shift, int root,
                                     IsZero is_zero) {
  const int n = t.order();
  std::vector<int> order, parent;
  rooted_order(t, root, order, parent);

  std::vector<Scalar> a(n, Scalar(1) - shift);
  std::vector<char> severed(n, 0);
  std::vector<std::vector<int>> children(n);
  for (int v = 0; v < n; ++v)
    if (parent[v] >= 0) children[parent[v]].push_back(v);

  // reverse BFS order processes every child before its parent
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    int zero_child = -1;
    for (int c : children[v])
      if (!severed[c] && is_zero(a[c])) {
        zero_child = c;
        break;
      }
    if (zero_child >= 0) {
      // zero-pivot exchange: the (child, v) pair contributes one positive
      // and one negative entry, v's row is annihilated, and v is detached
      // from its own parent; other zero children keep their zeros.
      const Scalar w2 = Scalar(1) / Scalar(t.degree(zero_child) * t.degree(v));
      a[zero_child] = Scalar(2);
      a[v] = -w2 / Scalar(2);
      if (parent[v] >= 0) severed[v] = 1;
    } else {
      for (int c : children[v]) {
        if (severed[c]) continue;
        const Scalar w2 = Scalar(1) / Scalar(t.degree(c) * t.degree(v));
        a[v] -= w2 / a[c];
      }
    }
  }
  return a;
}

}  // namespace detail

// Diagonal congruent to L - xI, exact rational arithmetic. Root defaults to
// a centroid so the precomputed processing order stays shallow.
inline TreeDiagonalization diagonalize(const Graph& t, const Rat& shift, int root = -1) {
  if (!is_tree(t)) throw std::invalid_argument("diagonalize: input is not a tree");
  if (root < 0) root = tree_centroids(t)[0];
  TreeDiagonalization d;
  d.diagonal =
      detail::diagonalize_core<Rat>(t, shift, root, [](const Rat& x) { return x == 0; });
  for (const Rat& x : d.diagonal) {
    int s = sign_of(x);
    if (s > 0)
      ++d.inertia.above;
    else if (s < 0)
      ++d.inertia.below;
    else
      ++d.inertia.equal;
  }
  return d;
}

// Floating-point variant for irrational shifts. Pivots within zero_band of 0
// are treated as zero, so the counts are approximate near eigenvalues;
// `exact` is false to flag that.
struct TreeDiagonalizationFP {
  std::vector<double> diagonal;
  InertiaTriple inertia;
  double zero_band = 1e-9;
  bool exact = false;
};

inline TreeDiagonalizationFP diagonalize_fp(const Graph& t, double shift,
                                            double zero_band = 1e-9, int root = -1) {
  if (!is_tree(t)) throw std::invalid_argument("diagonalize_fp: input is not a tree");
  if (root < 0) root = tree_centroids(t)[0];
  TreeDiagonalizationFP d;
  d.zero_band = zero_band;
  d.diagonal = detail::diagonalize_core<double>(
      t, shift, root, [zero_band](double x) { return std::abs(x) < zero_band; });
  for (double x : d.diagonal) {
    if (std::abs(x) < zero_band)
      ++d.inertia.equal;
    else if (x > 0)
      ++d.inertia.above;
    else
      ++d.inertia.below;
  }
  return d;
}

// Multiplicity of the normalized-Laplacian eigenvalue 1 (equivalently of the
// Randic eigenvalue 0), exact.
inline int nullity_exact(const Graph& t) { return diagonalize(t, Rat(1)).inertia.equal; }

struct EigenInterval {
  Rat lo, hi;        // lo == hi marks an exact rational eigenvalue
  int multiplicity;  // eigenvalues in (lo, hi], counted with multiplicity
};

// Bisection on [0,2] in normalized-Laplacian coordinates using exact
// inertia counts; every interval is narrowed below `precision`. The union
// of multiplicities is n.
inline std::vector<EigenInterval> locate_eigenvalues(const Graph& t, double precision) {
  if (!is_tree(t)) throw std::invalid_argument("locate_eigenvalues: input is not a tree");
  if (!(precision > 0)) throw std::invalid_argument("locate_eigenvalues: precision must be > 0");

  // counts eigenvalues <= x
  auto count_leq = [&](const Rat& x) {
    auto in = diagonalize(t, x).inertia;
    return in.below + in.equal;
  };

  const Rat eps(1, 1000000000);

  std::vector<EigenInterval> out;
  // clo/chi carry the eigenvalue counts at the endpoints so each level needs
  // a single diagonalization; an exact hit at the midpoint is emitted as a
  // point interval and excluded from both halves.
  std::function<void(const Rat&, int, const Rat&, int)> refine = [&](const Rat& lo, int clo,
                                                                     const Rat& hi, int chi) {
    const int count = chi - clo;
    if (count == 0) return;
    if (to_double(hi - lo) < precision) {
      out.push_back({lo, hi, count});
      return;
    }
    const Rat mid = (lo + hi) / 2;
    const auto in = diagonalize(t, mid).inertia;
    refine(lo, clo, mid, in.below);
    if (in.equal > 0) out.push_back({mid, mid, in.equal});
    refine(mid, in.below + in.equal, hi, chi);
  };

  const Rat lo = -eps;
  const Rat hi = Rat(2) + eps;
  refine(lo, count_leq(lo), hi, count_leq(hi));
  return out;
}

}  // namespace randic
