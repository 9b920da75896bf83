#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace omlab {

/// `count` points spaced evenly in log10 between `lo` and `hi` (both included).
std::vector<double> log_grid(double lo, double hi, std::size_t count);

/// {2^k : k = kmin..kmax}, exact powers of two.
std::vector<double> pow2_grid(int kmin, int kmax);

/// Sorted union with exact duplicates removed.
std::vector<double> merge_grids(std::span<const double> a, std::span<const double> b);

/// Throws std::invalid_argument unless the grid is nonempty, positive, finite
/// and strictly increasing.
void require_increasing_positive(std::span<const double> grid, const char* what);

namespace grids {

/// t in [1e-6, 1e6], 200 log-spaced points.
const std::vector<double>& default_t();

/// C in [1e-4, 1e4] as 10^(8j/100), j = -50..50. The lattice contains 1 and
/// is closed under products that stay in range.
const std::vector<double>& default_c();

/// s in [1e-4, 1e4], 25 log-spaced points (second variable of the G2 test).
const std::vector<double>& default_s();

/// 2^k for k = -6..6.
const std::vector<double>& default_radii();

}  // namespace grids

}  // namespace omlab
