#include "omlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace omlab {

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi) || count == 0) {
    throw std::invalid_argument("log_grid: need 0 < lo <= hi < inf and count > 0");
  }
  if (count == 1) return {lo};
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::vector<double> pow2_grid(int kmin, int kmax) {
  if (kmin > kmax) throw std::invalid_argument("pow2_grid: kmin > kmax");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(kmax - kmin + 1));
  for (int k = kmin; k <= kmax; ++k) out.push_back(std::ldexp(1.0, k));
  return out;
}

std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_increasing_positive(std::span<const double> grid, const char* what) {
  if (grid.empty()) throw std::invalid_argument(std::string(what) + ": grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0) || !std::isfinite(grid[i])) {
      throw std::invalid_argument(std::string(what) + ": grid points must be positive and finite");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
  }
}

namespace grids {

const std::vector<double>& default_t() {
  static const std::vector<double> g = log_grid(1e-6, 1e6, 200);
  return g;
}

const std::vector<double>& default_c() {
  static const std::vector<double> g = [] {
    std::vector<double> out;
    out.reserve(101);
    for (int j = -50; j <= 50; ++j) out.push_back(j == 0 ? 1.0 : std::pow(10.0, 8.0 * j / 100.0));
    return out;
  }();
  return g;
}

const std::vector<double>& default_s() {
  static const std::vector<double> g = log_grid(1e-4, 1e4, 25);
  return g;
}

const std::vector<double>& default_radii() {
  static const std::vector<double> g = pow2_grid(-6, 6);
  return g;
}

}  // namespace grids

}  // namespace omlab
