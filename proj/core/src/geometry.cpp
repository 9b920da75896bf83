#include "omlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "omlab/errors.hpp"

namespace omlab {
namespace {

void require_aligned(const SimpleRadialFunction& f, const Ball& ball) {
  if (f.dimension() != ball.dimension()) {
    throw std::invalid_argument("function and ball live in different dimensions");
  }
  if (f.center() != ball.center()) {
    throw UnsupportedGeometry("ball is not concentric with the test function");
  }
}

void require_center(const std::vector<double>& center) {
  if (center.empty()) throw std::invalid_argument("center must have at least one coordinate");
  for (double x : center) {
    if (!std::isfinite(x)) throw std::invalid_argument("center coordinates must be finite");
  }
}

}  // namespace

double unit_ball_volume(int n) {
  if (n < 0) throw std::domain_error("dimension must be nonnegative");
  double even = 1.0;  // v_0
  double odd = 2.0;   // v_1
  if (n == 0) return even;
  if (n == 1) return odd;
  for (int k = 2; k <= n; ++k) {
    if (k % 2 == 0) {
      even *= 2.0 * std::numbers::pi / k;
    } else {
      odd *= 2.0 * std::numbers::pi / k;
    }
  }
  return n % 2 == 0 ? even : odd;
}

double ball_volume(int n, double r) {
  if (n < 1) throw std::domain_error("ball_volume: dimension must be at least 1");
  if (!(r > 0.0) || !std::isfinite(r)) throw std::domain_error("ball_volume: radius must be positive");
  return unit_ball_volume(n) * std::pow(r, n);
}

double concentric_intersection(int n, double r, double r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw std::domain_error("concentric_intersection: radius must be positive");
  }
  return ball_volume(n, std::min(r, r0));
}

Ball::Ball(std::vector<double> center, double radius) : center_(std::move(center)), radius_(radius) {
  require_center(center_);
  if (!(radius_ > 0.0) || !std::isfinite(radius_)) {
    throw std::domain_error("ball radius must be positive and finite");
  }
}

SimpleRadialFunction::SimpleRadialFunction(std::vector<double> center,
                                           std::vector<double> breakpoints,
                                           std::vector<double> values)
    : center_(std::move(center)), breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  require_center(center_);
  if (breakpoints_.empty() || breakpoints_.size() != values_.size()) {
    throw std::invalid_argument("simple function needs as many values as breakpoints (at least one)");
  }
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j] > 0.0) || !std::isfinite(breakpoints_[j])) {
      throw std::invalid_argument("breakpoints must be positive and finite");
    }
    if (j > 0 && !(breakpoints_[j] > breakpoints_[j - 1])) {
      throw std::invalid_argument("breakpoints must be strictly increasing");
    }
    if (!(values_[j] >= 0.0) || !std::isfinite(values_[j])) {
      throw std::invalid_argument("values must be finite and nonnegative");
    }
  }
}

SimpleRadialFunction SimpleRadialFunction::characteristic(std::vector<double> center, double radius) {
  return {std::move(center), {radius}, {1.0}};
}

double SimpleRadialFunction::operator()(std::span<const double> x) const {
  if (x.size() != center_.size()) throw std::invalid_argument("point has the wrong dimension");
  double sq = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sq += (x[i] - center_[i]) * (x[i] - center_[i]);
  const double dist = std::sqrt(sq);
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), dist);
  if (it == breakpoints_.end()) return 0.0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

SimpleRadialFunction SimpleRadialFunction::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("scale factor must be >= 0");
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return {center_, breakpoints_, std::move(v)};
}

bool SimpleRadialFunction::is_zero() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double SimpleRadialFunction::max_value() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

std::optional<double> SimpleRadialFunction::single_level_radius() const noexcept {
  const double c = values_.front();
  if (!(c > 0.0)) return std::nullopt;
  if (!std::all_of(values_.begin(), values_.end(), [c](double v) { return v == c; })) {
    return std::nullopt;
  }
  return breakpoints_.back();
}

std::vector<double> shell_measures(const SimpleRadialFunction& f, const Ball& ball) {
  require_aligned(f, ball);
  const int n = ball.dimension();
  const double r = ball.radius();
  const double unit = unit_ball_volume(n);
  std::vector<double> out(f.breakpoints().size());
  double inner = 0.0;
  for (std::size_t j = 0; j < out.size(); ++j) {
    const double outer = std::min(f.breakpoints()[j], r);
    out[j] = unit * (std::pow(outer, n) - std::pow(inner, n));
    inner = outer;
  }
  return out;
}

double mean_integral(const SimpleRadialFunction& f, const YoungFunction& phi, double b,
                     const Ball& ball) {
  if (!(b > 0.0) || !std::isfinite(b)) throw std::domain_error("mean_integral: b must be positive");
  const auto shells = shell_measures(f, ball);
  double total = 0.0;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    const double c = f.values()[j];
    if (c == 0.0 || shells[j] == 0.0) continue;
    total += phi.saturating(c / b) * shells[j];
  }
  return total / ball.measure();
}

double distribution(const SimpleRadialFunction& f, const Ball& ball, double s) {
  if (!(s >= 0.0) || std::isnan(s)) throw std::domain_error("distribution: level must be >= 0");
  const auto shells = shell_measures(f, ball);
  double total = 0.0;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    if (f.values()[j] > s) total += shells[j];
  }
  return total;
}

}  // namespace omlab
