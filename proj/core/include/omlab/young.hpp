#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "omlab/grid.hpp"
#include "omlab/relation.hpp"

namespace omlab {

/// A Young function from a closed parametric family.
///
/// Every member is convex, continuous and finite on [0, inf), vanishes at 0
/// and tends to infinity. Values are immutable; composite members share their
/// children, so copies are cheap and safe across threads.
class YoungFunction {
 public:
  enum class Family { kPower, kPowerLog, kExpMinusOne, kRamp, kSum, kArgScale };

  /// t^p, p >= 1.
  static YoungFunction power(double p);
  /// t^p ln(e + t), p >= 1.
  static YoungFunction power_log(double p);
  /// e^t - 1.
  static YoungFunction exp_minus_one();
  /// max(0, t - t0), t0 > 0.
  static YoungFunction ramp(double t0);
  static YoungFunction sum(YoungFunction a, YoungFunction b);
  /// t -> inner(c t), c > 0.
  static YoungFunction arg_scale(double c, YoungFunction inner);

  /// Phi(t). Throws std::domain_error for negative or non-finite t.
  double operator()(double t) const;

  /// Phi(t) for t in [0, +inf]; returns +inf at +inf and never throws on
  /// overflow. Used by the solvers, which probe extreme arguments.
  double saturating(double t) const noexcept;

  /// Generalized inverse inf{r >= 0 : Phi(r) > s}.
  ///
  /// Power, ramp and exp-minus-one (and arg-scales of them) use closed forms.
  /// The other families bracket the threshold with Phi(lo) <= s < Phi(hi) and
  /// bisect until the bracket cannot shrink in double precision; the lower end
  /// is returned, so Phi(inverse(s)) <= s holds exactly for those families.
  /// Throws std::domain_error for negative or non-finite s.
  double inverse(double s) const;

  bool has_analytic_inverse() const noexcept;

  /// sup{r : Phi(r) = 0}; zero for every family except ramps.
  double zero_plateau_end() const noexcept;

  /// True when Phi(t) > 0 for every t > 0 (then inverse(0) == 0).
  bool positive_on_open_half_line() const noexcept { return zero_plateau_end() == 0.0; }

  Family family() const noexcept { return family_; }
  /// p, t0 or c depending on the family; 0 for exp-minus-one and sum.
  double parameter() const noexcept { return param_; }
  /// Left operand of sum, inner function of arg-scale.
  const YoungFunction* first() const noexcept { return a_.get(); }
  const YoungFunction* second() const noexcept { return b_.get(); }

  /// Human-readable form such as "sum(power(2),ramp(1))".
  std::string describe() const;

 private:
  YoungFunction(Family family, double param, std::shared_ptr<const YoungFunction> a,
                std::shared_ptr<const YoungFunction> b);

  double bracketed_inverse(double s) const;

  Family family_;
  double param_ = 0.0;
  std::shared_ptr<const YoungFunction> a_;
  std::shared_ptr<const YoungFunction> b_;
};

struct YoungValidationReport {
  bool passed = true;
  std::string violation;
  /// Points involved in the first violation (second is NaN when unused).
  double at = 0.0;
  double other = 0.0;
};

/// Checks Phi(0) = 0, monotonicity on the grid, convexity at lambda in
/// {1/4, 1/2, 3/4} for every grid pair, and Phi(t_max) > Phi(t_min).
/// Reports the first violation found.
YoungValidationReport validate_young(const YoungFunction& phi,
                                     std::span<const double> grid = grids::default_t());

/// Phi1 < Phi2: smallest C on the grid with Phi1(t) <= Phi2(C t).
RelationReport check_prec(const YoungFunction& lhs, const YoungFunction& rhs,
                          std::span<const double> t_grid = grids::default_t(),
                          std::span<const double> c_grid = grids::default_c());

}  // namespace omlab
