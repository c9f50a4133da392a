#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace randic {

// Dense real symmetric matrix; set() keeps both triangles in step.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw std::invalid_argument("SymMatrix: order must be >= 1");
  }

  int order() const { return n_; }

  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  void set(int i, int j, double v) {
    a_[static_cast<std::size_t>(i) * n_ + j] = v;
    a_[static_cast<std::size_t>(j) * n_ + i] = v;
  }

  double max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::abs(x));
    return m;
  }

 private:
  int n_;
  std::vector<double> a_;

  friend std::vector<double> jacobi_eigenvalues(SymMatrix m);
};

enum class MatrixKind { randic, normalized_laplacian, adjacency, laplacian };

inline const char* matrix_kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::randic: return "randic";
    case MatrixKind::normalized_laplacian: return "normalized_laplacian";
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
  }
  return "?";
}

// Sorted eigenvalue list with the tolerance used for zero counting.
struct Spectrum {
  std::vector<double> values;  // ascending, with multiplicity
  double zero_tol = 1e-8;
  MatrixKind source = MatrixKind::randic;

  int count_zero() const {
    int c = 0;
    for (double v : values)
      if (std::abs(v) < zero_tol) ++c;
    return c;
  }
};

// Cyclic Jacobi on the full matrix. Sweeps rotate every off-diagonal pair in
// row-major order; convergence when the off-diagonal Frobenius norm drops to
// 1e-13 * n * max|entry| of the input. Hard cap of 100 sweeps.
inline std::vector<double> jacobi_eigenvalues(SymMatrix m) {
  const int n = m.order();
  std::vector<double>& a = m.a_;
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  std::vector<double> result(n);
  if (n == 1) {
    result[0] = at(0, 0);
    return result;
  }
  const double scale = m.max_abs();
  if (scale == 0.0) return result;  // zero matrix
  const double threshold = 1e-13 * n * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) <= threshold) {
      for (int i = 0; i < n; ++i) result[i] = at(i, i);
      std::sort(result.begin(), result.end());
      return result;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = at(i, p);
          const double aiq = at(i, q);
          at(i, p) = aip - s * (aiq + tau * aip);
          at(p, i) = at(i, p);
          at(i, q) = aiq + s * (aip - tau * aiq);
          at(q, i) = at(i, q);
        }
      }
    }
  }
  throw std::runtime_error("jacobi_eigenvalues: no convergence within 100 sweeps (n=" +
                           std::to_string(n) + ")");
}

}  // namespace randic
