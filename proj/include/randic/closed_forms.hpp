#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "randic/families.hpp"
#include "randic/rational.hpp"
#include "randic/spectra.hpp"

namespace randic {

// Closed formulas for the sun and double-sun families. The "printed" energy
// variants evaluate the published formulas verbatim; the "corrected"
// variants apply the repairs that make them agree with the eigensolver
// (a missing +2 in the p=q case; the same +2 plus a cubic term n^3-2n^2-24n
// instead of n^3-2n^2-24 in the q=p-1 case). Both are kept side by side and
// cross-validated, never silently swapped.

inline double sun_energy(int p) {
  if (p < 1) throw std::invalid_argument("sun_energy: requires p >= 1");
  const int n = 2 * p + 1;
  return (n - 3) * std::sqrt(2.0) / 2.0 + 2.0;
}

// Normalized-Laplacian eigenvalues of the p-sun:
// {0, 1, 2, (2-sqrt2)/2 x(p-1), (2+sqrt2)/2 x(p-1)}, ascending.
inline std::vector<double> sun_spectrum(int p) {
  if (p < 1) throw std::invalid_argument("sun_spectrum: requires p >= 1");
  const double lo = (2.0 - std::sqrt(2.0)) / 2.0;
  const double hi = (2.0 + std::sqrt(2.0)) / 2.0;
  std::vector<double> s;
  s.push_back(0.0);
  s.insert(s.end(), p - 1, lo);
  s.push_back(1.0);
  s.insert(s.end(), p - 1, hi);
  s.push_back(2.0);
  return s;
}

// Monic quartic factor q(x) = x^4 + c3 x^3 + c2 x^2 + c1 x + c0 of the
// double-sun characteristic polynomial, exact coefficients.
struct QuarticCoeffs {
  Rat c3, c2, c1, c0;
};

inline QuarticCoeffs double_sun_quartic(int p, int q) {
  if (p < q || p + q < 2)
    throw std::invalid_argument("double_sun_quartic: requires p >= q and p + q >= 2");
  const Rat den = 4 * Rat((q + 1)) * Rat((p + 1));
  QuarticCoeffs c;
  c.c3 = -4;
  c.c2 = Rat(22 * p + 20 * p * q + 22 * q + 20) / den;
  c.c1 = Rat(-12 * p - 8 * p * q - 12 * q - 8) / den;
  c.c0 = Rat(1 + 2 * p + 2 * q) / den;
  return c;
}

namespace detail {

// Splits the quartic through the bipartite pairing q(x) =
// (x^2-2x+u)(x^2-2x+v): u+v = c2-4 and uv = c0, with the exact consistency
// check c1 = -2(c2-4). Returns (u, v) with u >= v.
inline std::pair<double, double> quartic_pairing(const QuarticCoeffs& c) {
  if (c.c1 != -2 * (c.c2 - 4))
    throw std::runtime_error(
        "double-sun quartic: pairing consistency c1 = -2(c2-4) failed (transcription error)");
  const double s = to_double(c.c2 - 4);
  const double prod = to_double(c.c0);
  const double disc = s * s - 4.0 * prod;
  if (disc < -1e-12) throw std::runtime_error("double-sun quartic: negative pairing discriminant");
  const double root = std::sqrt(std::max(disc, 0.0));
  return {(s + root) / 2.0, (s - root) / 2.0};
}

}  // namespace detail

// Normalized-Laplacian eigenvalues of D^{p,q} for p >= q, p+q >= 2:
// {0, 2, (2+-sqrt2)/2 each x(p+q-2)} plus the four quartic roots
// 1 +- sqrt(1-u), 1 +- sqrt(1-v); ascending.
inline std::vector<double> double_sun_spectrum(int p, int q) {
  const auto c = double_sun_quartic(p, q);
  const auto [u, v] = detail::quartic_pairing(c);
  if (u < -1e-9 || u > 1.0 + 1e-9 || v < -1e-9 || v > 1.0 + 1e-9)
    throw std::runtime_error("double-sun quartic: pairing values outside [0,1]");
  const double ru = std::sqrt(std::max(1.0 - u, 0.0));
  const double rv = std::sqrt(std::max(1.0 - v, 0.0));
  std::vector<double> s;
  s.push_back(0.0);
  s.push_back(2.0);
  s.insert(s.end(), p + q - 2, (2.0 - std::sqrt(2.0)) / 2.0);
  s.insert(s.end(), p + q - 2, (2.0 + std::sqrt(2.0)) / 2.0);
  s.push_back(1.0 - ru);
  s.push_back(1.0 + ru);
  s.push_back(1.0 - rv);
  s.push_back(1.0 + rv);
  std::sort(s.begin(), s.end());
  return s;
}

namespace detail {

inline void require_balanced(int p, int q, const char* who) {
  if (!(q == p || q == p - 1) || p + q < 2)
    throw std::invalid_argument(std::string(who) +
                                ": supports the balanced shapes q = p or q = p - 1 with p+q >= 2");
}

}  // namespace detail

// The published balanced double-sun energy formulas, evaluated verbatim at
// n = 2(p+q+1).
inline double double_sun_energy_printed(int p, int q) {
  detail::require_balanced(p, q, "double_sun_energy_printed");
  const double n = 2.0 * (p + q + 1);
  const double sqrt2 = std::sqrt(2.0);
  if (q == p) {
    return (sqrt2 * (n * n - 4.0 * n - 12.0) + 4.0 * std::sqrt(n * n + 4.0 * n + 20.0)) /
           (2.0 * (n + 2.0));
  }
  const double s = std::sqrt(n * n * n * n - 64.0 * n + 64.0);
  const double t1 = 2.0 * std::sqrt(n * (n + 4.0) * (n * n + 8.0 + s));
  const double t2 = 2.0 * std::sqrt(n * (n + 4.0) * (n * n + 8.0 - s));
  return sqrt2 / (2.0 * n * (n + 4.0)) * (n * n * n - 2.0 * n * n - 24.0 + t1 + t2);
}

// Numerically verified repair of the printed formulas; matches the
// eigensolver energy of the constructed double sun.
inline double double_sun_energy_corrected(int p, int q) {
  detail::require_balanced(p, q, "double_sun_energy_corrected");
  const double n = 2.0 * (p + q + 1);
  const double sqrt2 = std::sqrt(2.0);
  if (q == p) return double_sun_energy_printed(p, q) + 2.0;
  const double s = std::sqrt(n * n * n * n - 64.0 * n + 64.0);
  const double t1 = 2.0 * std::sqrt(n * (n + 4.0) * (n * n + 8.0 + s));
  const double t2 = 2.0 * std::sqrt(n * (n + 4.0) * (n * n + 8.0 - s));
  return 2.0 + sqrt2 / (2.0 * n * (n + 4.0)) * (n * n * n - 2.0 * n * n - 24.0 * n + t1 + t2);
}

// The conjectured maximal Randic energy among connected graphs of order n,
// with the attaining graph: the sun for odd n, the balanced double sun for
// even n. Shapes outside the closed formulas' range fall back to the
// eigensolver.
inline std::pair<double, Graph> conjectured_max(int n) {
  if (n < 1) throw std::invalid_argument("conjectured_max: n must be >= 1");
  if (n % 2 == 1) {
    Graph g = sun((n - 1) / 2);
    double value = (n >= 3) ? sun_energy((n - 1) / 2) : 0.0;
    return {value, std::move(g)};
  }
  Graph g = balanced_double_sun(n);
  if (n >= 6) {
    const int p = (n % 4 == 2) ? (n - 2) / 4 : n / 4;
    const int q = (n % 4 == 2) ? p : p - 1;
    return {double_sun_energy_corrected(p, q), std::move(g)};
  }
  double value = randic_energy(g);
  return {value, std::move(g)};
}

// Per-family record comparing the printed and corrected formulas against
// the eigensolver.
struct FormulaReport {
  std::string family;  // "sun" or "double_sun"
  int p = 0;
  int q = -1;  // unused for suns
  int n = 0;
  double printed = 0.0;
  double corrected = 0.0;
  double numeric = 0.0;
  double discrepancy_printed = 0.0;
  double discrepancy_corrected = 0.0;
};

inline FormulaReport cross_validate_sun(int p) {
  FormulaReport r;
  r.family = "sun";
  r.p = p;
  r.n = 2 * p + 1;
  r.printed = sun_energy(p);
  r.corrected = r.printed;  // the sun formula checks out as printed
  r.numeric = randic_energy(sun(p));
  r.discrepancy_printed = std::abs(r.printed - r.numeric);
  r.discrepancy_corrected = std::abs(r.corrected - r.numeric);
  return r;
}

inline FormulaReport cross_validate_double_sun(int p, int q) {
  FormulaReport r;
  r.family = "double_sun";
  r.p = p;
  r.q = q;
  r.n = 2 * (p + q + 1);
  r.printed = double_sun_energy_printed(p, q);
  r.corrected = double_sun_energy_corrected(p, q);
  r.numeric = randic_energy(double_sun(p, q));
  r.discrepancy_printed = std::abs(r.printed - r.numeric);
  r.discrepancy_corrected = std::abs(r.corrected - r.numeric);
  return r;
}

}  // namespace randic
