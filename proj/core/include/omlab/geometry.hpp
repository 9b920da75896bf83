#pragma once

#include <optional>
#include <span>
#include <vector>

#include "omlab/young.hpp"

namespace omlab {

/// Volume of the unit ball in R^n, from v_0 = 1, v_1 = 2, v_n = (2 pi / n) v_{n-2}.
double unit_ball_volume(int n);

/// |B(a, r)| = v_n r^n. Throws std::domain_error for n < 1 or r <= 0.
double ball_volume(int n, double r);

/// |B(a, r) ∩ B(a, r0)| = v_n min(r, r0)^n.
double concentric_intersection(int n, double r, double r0);

/// Open ball B(center, radius) in R^n, n = center.size().
class Ball {
 public:
  Ball(std::vector<double> center, double radius);

  int dimension() const noexcept { return static_cast<int>(center_.size()); }
  const std::vector<double>& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  double measure() const { return ball_volume(dimension(), radius_); }

 private:
  std::vector<double> center_;
  double radius_;
};

/// Nonnegative function constant on concentric annuli around `center`:
/// value c_j on rho_{j-1} <= |x - center| < rho_j (rho_0 = 0), zero beyond rho_k.
class SimpleRadialFunction {
 public:
  SimpleRadialFunction(std::vector<double> center, std::vector<double> breakpoints,
                       std::vector<double> values);

  /// chi_{B(center, radius)}.
  static SimpleRadialFunction characteristic(std::vector<double> center, double radius);

  int dimension() const noexcept { return static_cast<int>(center_.size()); }
  const std::vector<double>& center() const noexcept { return center_; }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Point evaluation. Throws std::invalid_argument on a dimension mismatch.
  double operator()(std::span<const double> x) const;

  /// c * f for c >= 0.
  SimpleRadialFunction scaled(double c) const;

  bool is_zero() const noexcept;
  double max_value() const noexcept;

  /// When f = c chi_{B(center, r0)} with c > 0, returns r0 (the outer
  /// breakpoint) and c is values().front().
  std::optional<double> single_level_radius() const noexcept;

  bool is_characteristic() const noexcept {
    return single_level_radius().has_value() && values_.front() == 1.0;
  }

 private:
  std::vector<double> center_;
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// Measure of each annulus of f intersected with B. Throws UnsupportedGeometry
/// unless B is centred at f's center.
std::vector<double> shell_measures(const SimpleRadialFunction& f, const Ball& ball);

/// (1/|B|) ∫_B Phi(f(x)/b) dx, exactly.
double mean_integral(const SimpleRadialFunction& f, const YoungFunction& phi, double b,
                     const Ball& ball);

/// |{x in B : f(x) > s}| (strict inequality), exactly.
double distribution(const SimpleRadialFunction& f, const Ball& ball, double s);

}  // namespace omlab
