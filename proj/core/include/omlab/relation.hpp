#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace omlab {

/// Outcome of a grid-certified order check between two functions.
///
/// Two kinds share this record: dilation order (f(t) <= g(C t), the Young
/// relation) and scalar domination (f(t) <= C g(t), the growth relation).
/// A positive answer certifies the inequality on `t_grid` only; it is a
/// verification on samples, never a proof over all t > 0.
struct RelationReport {
  bool holds = false;
  std::optional<double> witness_c;
  std::optional<double> counterexample_t;
  std::vector<double> t_grid;
  std::vector<double> c_grid;
  /// One violating t per rejected candidate C, in candidate order.
  std::vector<std::pair<double, double>> rejected;
  std::string note;

  double searched_c_min() const { return c_grid.empty() ? 0.0 : c_grid.front(); }
  double searched_c_max() const { return c_grid.empty() ? 0.0 : c_grid.back(); }
};

using ScalarFunction = std::function<double(double)>;

/// Smallest C in `c_grid` with lhs(t) <= rhs(C t) for every t in `t_grid`.
RelationReport check_dilation_order(const ScalarFunction& lhs, const ScalarFunction& rhs,
                                    std::span<const double> t_grid,
                                    std::span<const double> c_grid);

/// Smallest C in `c_grid` with lhs(t) <= C rhs(t) for every t in `t_grid`.
RelationReport check_domination(const ScalarFunction& lhs, const ScalarFunction& rhs,
                                std::span<const double> t_grid, std::span<const double> c_grid);

}  // namespace omlab
