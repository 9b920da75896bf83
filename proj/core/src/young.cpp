#include "omlab/young.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace omlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_param(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

YoungFunction::YoungFunction(Family family, double param, std::shared_ptr<const YoungFunction> a,
                             std::shared_ptr<const YoungFunction> b)
    : family_(family), param_(param), a_(std::move(a)), b_(std::move(b)) {}

YoungFunction YoungFunction::power(double p) {
  require_param(std::isfinite(p) && p >= 1.0, "power: exponent must satisfy p >= 1");
  return {Family::kPower, p, nullptr, nullptr};
}

YoungFunction YoungFunction::power_log(double p) {
  require_param(std::isfinite(p) && p >= 1.0, "power-log: exponent must satisfy p >= 1");
  return {Family::kPowerLog, p, nullptr, nullptr};
}

YoungFunction YoungFunction::exp_minus_one() { return {Family::kExpMinusOne, 0.0, nullptr, nullptr}; }

YoungFunction YoungFunction::ramp(double t0) {
  require_param(std::isfinite(t0) && t0 > 0.0, "ramp: offset must be positive");
  return {Family::kRamp, t0, nullptr, nullptr};
}

YoungFunction YoungFunction::sum(YoungFunction a, YoungFunction b) {
  return {Family::kSum, 0.0, std::make_shared<const YoungFunction>(std::move(a)),
          std::make_shared<const YoungFunction>(std::move(b))};
}

YoungFunction YoungFunction::arg_scale(double c, YoungFunction inner) {
  require_param(std::isfinite(c) && c > 0.0, "arg-scale: factor must be positive");
  return {Family::kArgScale, c, std::make_shared<const YoungFunction>(std::move(inner)), nullptr};
}

double YoungFunction::operator()(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::domain_error("Young function argument must be finite and nonnegative");
  }
  return saturating(t);
}

double YoungFunction::saturating(double t) const noexcept {
  if (t == kInf) return kInf;
  switch (family_) {
    case Family::kPower:
      return param_ == 1.0 ? t : std::pow(t, param_);
    case Family::kPowerLog:
      return t == 0.0 ? 0.0 : std::pow(t, param_) * std::log(std::exp(1.0) + t);
    case Family::kExpMinusOne:
      return std::expm1(t);
    case Family::kRamp:
      return std::max(0.0, t - param_);
    case Family::kSum:
      return a_->saturating(t) + b_->saturating(t);
    case Family::kArgScale:
      return a_->saturating(param_ * t);
  }
  return kInf;
}

bool YoungFunction::has_analytic_inverse() const noexcept {
  switch (family_) {
    case Family::kPower:
    case Family::kExpMinusOne:
    case Family::kRamp:
      return true;
    case Family::kArgScale:
      return a_->has_analytic_inverse();
    case Family::kPowerLog:
    case Family::kSum:
      return false;
  }
  return false;
}

double YoungFunction::zero_plateau_end() const noexcept {
  switch (family_) {
    case Family::kRamp:
      return param_;
    case Family::kSum:
      return std::min(a_->zero_plateau_end(), b_->zero_plateau_end());
    case Family::kArgScale:
      return a_->zero_plateau_end() / param_;
    default:
      return 0.0;
  }
}

double YoungFunction::inverse(double s) const {
  if (!(s >= 0.0) || !std::isfinite(s)) {
    throw std::domain_error("generalized inverse argument must be finite and nonnegative");
  }
  switch (family_) {
    case Family::kPower:
      if (s == 0.0) return 0.0;
      return param_ == 1.0 ? s : std::pow(s, 1.0 / param_);
    case Family::kExpMinusOne:
      return std::log1p(s);
    case Family::kRamp:
      return param_ + s;
    case Family::kArgScale:
      if (a_->has_analytic_inverse()) return a_->inverse(s) / param_;
      return bracketed_inverse(s);
    case Family::kPowerLog:
    case Family::kSum:
      return bracketed_inverse(s);
  }
  return bracketed_inverse(s);
}

double YoungFunction::bracketed_inverse(double s) const {
  // Invariant: saturating(lo) <= s < saturating(hi).
  double lo = zero_plateau_end();
  if (s == 0.0) return lo;
  double hi = lo + 1.0;
  for (int i = 0; i < 2100 && !(saturating(hi) > s); ++i) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 4000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (saturating(mid) > s) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

std::string YoungFunction::describe() const {
  switch (family_) {
    case Family::kPower:
      return "power(" + fmt_param(param_) + ")";
    case Family::kPowerLog:
      return "power-log(" + fmt_param(param_) + ")";
    case Family::kExpMinusOne:
      return "exp-minus-one";
    case Family::kRamp:
      return "ramp(" + fmt_param(param_) + ")";
    case Family::kSum:
      return "sum(" + a_->describe() + "," + b_->describe() + ")";
    case Family::kArgScale:
      return "arg-scale(" + fmt_param(param_) + "," + a_->describe() + ")";
  }
  return "?";
}

YoungValidationReport validate_young(const YoungFunction& phi, std::span<const double> grid) {
  require_increasing_positive(grid, "validate_young");
  YoungValidationReport report;
  auto fail = [&](std::string what, double at, double other) {
    report.passed = false;
    report.violation = std::move(what);
    report.at = at;
    report.other = other;
    return report;
  };

  if (phi(0.0) != 0.0) return fail("Phi(0) != 0", 0.0, std::nan(""));

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = phi(grid[i]);

  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (values[i] < values[i - 1]) return fail("not nondecreasing", grid[i - 1], grid[i]);
  }

  constexpr double kRelTol = 1e-12;
  constexpr double kLambdas[] = {0.25, 0.5, 0.75};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      for (double lambda : kLambdas) {
        const double chord = lambda * values[i] + (1.0 - lambda) * values[j];
        const double at = phi(lambda * grid[i] + (1.0 - lambda) * grid[j]);
        if (at > chord + kRelTol * std::abs(chord) + std::numeric_limits<double>::min()) {
          return fail("convexity violated", grid[i], grid[j]);
        }
      }
    }
  }

  if (!(values.back() > values.front())) {
    return fail("no growth between grid ends", grid.front(), grid.back());
  }
  return report;
}

RelationReport check_prec(const YoungFunction& lhs, const YoungFunction& rhs,
                          std::span<const double> t_grid, std::span<const double> c_grid) {
  return check_dilation_order([&](double t) { return lhs.saturating(t); },
                              [&](double t) { return rhs.saturating(t); }, t_grid, c_grid);
}

}  // namespace omlab
