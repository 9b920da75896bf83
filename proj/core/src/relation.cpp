#include "omlab/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "omlab/grid.hpp"

namespace omlab {
namespace {

constexpr const char* kGridNote =
    "grid-certified: the inequality was checked on the recorded t grid only";

// Shared search: `violated(C, t)` says whether candidate C fails at t.
template <class Violated>
RelationReport search_smallest_c(std::span<const double> t_grid, std::span<const double> c_grid,
                                 Violated violated) {
  require_increasing_positive(t_grid, "relation t grid");
  require_increasing_positive(c_grid, "relation C grid");

  RelationReport report;
  report.t_grid.assign(t_grid.begin(), t_grid.end());
  report.c_grid.assign(c_grid.begin(), c_grid.end());
  report.note = kGridNote;

  for (double c : c_grid) {
    auto bad = std::find_if(t_grid.begin(), t_grid.end(), [&](double t) { return violated(c, t); });
    if (bad == t_grid.end()) {
      report.holds = true;
      report.witness_c = c;
      return report;
    }
    report.rejected.emplace_back(c, *bad);
  }
  report.counterexample_t = report.rejected.back().second;
  return report;
}

}  // namespace

RelationReport check_dilation_order(const ScalarFunction& lhs, const ScalarFunction& rhs,
                                    std::span<const double> t_grid,
                                    std::span<const double> c_grid) {
  return search_smallest_c(t_grid, c_grid,
                           [&](double c, double t) { return !(lhs(t) <= rhs(c * t)); });
}

RelationReport check_domination(const ScalarFunction& lhs, const ScalarFunction& rhs,
                                std::span<const double> t_grid, std::span<const double> c_grid) {
  return search_smallest_c(t_grid, c_grid,
                           [&](double c, double t) { return !(lhs(t) <= c * rhs(t)); });
}

}  // namespace omlab
