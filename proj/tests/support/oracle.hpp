#pragma once
// Reference computations for tests. Everything here is written from the
// defining formulas and shares no code paths with the library beyond
// evaluating Young/growth functions and reading a function's annuli.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "omlab/geometry.hpp"
#include "omlab/young.hpp"

namespace oracle {

using Fn = std::function<double(double)>;

/// pi^{n/2} / Gamma(n/2 + 1) r^n through tgamma.
inline double volume(int n, double r) {
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0) * std::pow(r, n);
}

inline bool close(double a, double b, double rel) {
  if (a == b) return true;
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

inline double rel_gap(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

/// Smallest x with pred(x) for pred monotone false -> true on (0, inf);
/// plain halving/doubling, 2000 steps cap.
inline double first_true(const std::function<bool(double)>& pred) {
  double hi = 1.0;
  while (!pred(hi)) hi *= 2.0;
  double lo = 0.0;
  if (pred(0.0)) return 0.0;
  // Geometric narrowing while lo is 0 keeps tiny roots resolvable.
  while (lo == 0.0 && hi > 1e-300) {
    if (pred(hi / 2.0)) hi /= 2.0;
    else lo = hi / 2.0;
  }
  for (int i = 0; i < 2000; ++i) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) hi = mid;
    else lo = mid;
  }
  return hi;
}

/// inf{r >= 0 : phi(r) > s}.
inline double inverse(const omlab::YoungFunction& phi, double s) {
  return first_true([&](double r) { return phi(r) > s; });
}

/// Measures of {rho_{j-1} <= |x| < rho_j} ∩ B(0, r) from the annulus radii.
inline std::vector<double> shells(const omlab::SimpleRadialFunction& f, double r) {
  const int n = f.dimension();
  std::vector<double> out;
  double prev = 0.0;
  for (double rho : f.breakpoints()) {
    out.push_back(volume(n, std::min(rho, r)) - volume(n, std::min(prev, r)));
    prev = rho;
  }
  return out;
}

/// ∫_B Phi(f/b), summing over annuli.
inline double integral(const omlab::SimpleRadialFunction& f, const omlab::YoungFunction& phi,
                       double b, double r) {
  const auto m = shells(f, r);
  double acc = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j) acc += phi(f.values()[j] / b) * m[j];
  return acc;
}

/// |{x in B(0, r) : f(x) > s}|.
inline double level_measure(const omlab::SimpleRadialFunction& f, double r, double s) {
  const auto m = shells(f, r);
  double acc = 0.0;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (f.values()[j] > s) acc += m[j];
  return acc;
}

/// ∫_B Phi(f/b) by radial quadrature with point evaluation of f along the
/// first axis: n v_n ∫_0^r Phi(f(rho)/b) rho^{n-1} drho, Gauss-Legendre on
/// each piece between consecutive breakpoints.
inline double radial_quadrature(const omlab::SimpleRadialFunction& f,
                                const omlab::YoungFunction& phi, double b, double r) {
  static const double x[5] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                              0.5384693101056831, 0.9061798459386640};
  static const double w[5] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                              0.4786286704993665, 0.2369268850561891};
  const int n = f.dimension();
  std::vector<double> cuts{0.0};
  for (double rho : f.breakpoints())
    if (rho < r) cuts.push_back(rho);
  cuts.push_back(r);
  const double surface = n * volume(n, 1.0);
  double acc = 0.0;
  std::vector<double> point(static_cast<std::size_t>(n), 0.0);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double c = cuts[k + 1];
    point[0] = f.center()[0] + 0.5 * (a + c);
    for (std::size_t d = 1; d < point.size(); ++d) point[d] = f.center()[d];
    const double level = phi(f(point) / b);
    double piece = 0.0;
    for (int i = 0; i < 5; ++i) {
      const double rho = 0.5 * (a + c) + 0.5 * (c - a) * x[i];
      piece += w[i] * std::pow(rho, n - 1);
    }
    acc += level * piece * 0.5 * (c - a);
  }
  return surface * acc;
}

/// inf{b > 0 : modular(b) <= bound} for modular nonincreasing in b.
inline double gauge(const Fn& modular, double bound) {
  return first_true([&](double b) { return b > 0.0 && modular(b) <= bound; });
}

/// sup_t Phi(t) |{f/b > t} ∩ B|. On [v_{j-1}/b, v_j/b) the level set is
/// {f >= v_j}, so the supremum is the largest left limit at a jump.
inline double weak_modular(const omlab::SimpleRadialFunction& f, const omlab::YoungFunction& phi,
                           double b, double r) {
  const auto m = shells(f, r);
  double best = 0.0;
  for (double v : f.values()) {
    if (v <= 0.0) continue;
    double mass = 0.0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (f.values()[j] >= v) mass += m[j];
    if (mass > 0.0) best = std::max(best, phi(v / b) * mass);
  }
  return best;
}

/// Portable uniform [0, 1) from mt19937_64.
struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(unit() * (hi - lo + 1)); }
  std::mt19937_64 gen;
};

/// Random simple function centred at the origin of R^n with 1..max_levels
/// annuli in [lo, hi] and values in [0, 10]. Some values are forced to zero
/// or repeated so degenerate level structures are exercised.
inline omlab::SimpleRadialFunction random_function(Rng& rng, int n, int max_levels = 6,
                                                   double lo = 0.0625, double hi = 16.0) {
  const int k = rng.integer(1, max_levels);
  std::vector<double> bp;
  while (static_cast<int>(bp.size()) < k) {
    const double r = rng.log_uniform(lo, hi);
    if (std::find(bp.begin(), bp.end(), r) == bp.end()) bp.push_back(r);
  }
  std::sort(bp.begin(), bp.end());
  std::vector<double> vals;
  for (int j = 0; j < k; ++j) {
    const double u = rng.unit();
    if (u < 0.1) vals.push_back(0.0);
    else if (u < 0.2 && !vals.empty()) vals.push_back(vals.back());
    else vals.push_back(rng.uniform(0.0, 10.0));
  }
  if (std::all_of(vals.begin(), vals.end(), [](double v) { return v == 0.0; })) vals[0] = 1.0;
  return {std::vector<double>(static_cast<std::size_t>(n), 0.0), bp, vals};
}

}  // namespace oracle
