#include "omlab/growth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace omlab {
namespace {

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(what);
}

void require_dimension(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
}

// a exceeds b beyond the relative slack.
bool exceeds(double a, double b) { return a > b + kMonotoneSlack * std::abs(b); }

ClassMembershipReport not_member(ClassMembershipReport report, ClassViolation v) {
  report.member = false;
  report.violation = std::move(v);
  return report;
}

}  // namespace

GrowthFunction::GrowthFunction(Family family, double param,
                               std::shared_ptr<const GrowthFunction> inner)
    : family_(family), param_(param), inner_(std::move(inner)) {}

GrowthFunction GrowthFunction::power(double a) {
  require_positive(a, "power: exponent must be positive");
  return {Family::kPower, a, nullptr};
}

GrowthFunction GrowthFunction::power_capped(double a) {
  require_positive(a, "power-capped: exponent must be positive");
  return {Family::kPowerCapped, a, nullptr};
}

GrowthFunction GrowthFunction::power_log(double a) {
  require_positive(a, "power-log: exponent must be positive");
  return {Family::kPowerLog, a, nullptr};
}

GrowthFunction GrowthFunction::constant(double c) {
  require_positive(c, "constant: value must be positive");
  return {Family::kConstant, c, nullptr};
}

GrowthFunction GrowthFunction::scale(double k, GrowthFunction inner) {
  require_positive(k, "scale: factor must be positive");
  return {Family::kScale, k, std::make_shared<const GrowthFunction>(std::move(inner))};
}

GrowthFunction GrowthFunction::inv_power(double a) {
  require_positive(a, "inv-power: exponent must be positive");
  return {Family::kInvPower, a, nullptr};
}

double GrowthFunction::operator()(double t) const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::domain_error("growth function argument must be positive and finite");
  }
  switch (family_) {
    case Family::kPower:
      return param_ == 1.0 ? t : std::pow(t, param_);
    case Family::kPowerCapped:
      return std::min(std::pow(t, param_), 1.0);
    case Family::kPowerLog:
      return std::pow(t, param_) * (1.0 + std::log1p(t));
    case Family::kConstant:
      return param_;
    case Family::kScale:
      return param_ * (*inner_)(t);
    case Family::kInvPower:
      return std::pow(t, -param_);
  }
  return 0.0;
}

std::string GrowthFunction::describe() const {
  switch (family_) {
    case Family::kPower:
      return "power(" + fmt_param(param_) + ")";
    case Family::kPowerCapped:
      return "power-capped(" + fmt_param(param_) + ")";
    case Family::kPowerLog:
      return "power-log(" + fmt_param(param_) + ")";
    case Family::kConstant:
      return "constant(" + fmt_param(param_) + ")";
    case Family::kScale:
      return "scale(" + fmt_param(param_) + "," + inner_->describe() + ")";
    case Family::kInvPower:
      return "inv-power(" + fmt_param(param_) + ")";
  }
  return "?";
}

const char* to_string(GrowthClass c) noexcept {
  switch (c) {
    case GrowthClass::kG1:
      return "G1";
    case GrowthClass::kG2:
      return "G2";
    case GrowthClass::kGTheta:
      return "GTheta";
  }
  return "?";
}

ClassMembershipReport validate_g1(const GrowthFunction& phi, std::span<const double> grid) {
  require_increasing_positive(grid, "validate_g1");
  if (grid.size() < 2) throw std::invalid_argument("validate_g1: grid needs at least two points");
  ClassMembershipReport report{GrowthClass::kG1, true, std::nullopt, std::nullopt};
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double r1 = grid[i - 1];
    const double r2 = grid[i];
    const double v1 = phi(r1);
    const double v2 = phi(r2);
    if (exceeds(v1, v2)) {
      return not_member(report, {"phi(r1) <= phi(r2)", r1, r2, std::nullopt, v1, v2});
    }
    if (exceeds(v2 / r2, v1 / r1)) {
      return not_member(report, {"phi(r2)/r2 <= phi(r1)/r1", r1, r2, std::nullopt, v2 / r2, v1 / r1});
    }
  }
  return report;
}

ClassMembershipReport validate_g2(const GrowthFunction& psi, const YoungFunction& young,
                                  int dimension, std::span<const double> r_grid,
                                  std::span<const double> s_grid) {
  require_dimension(dimension);
  require_increasing_positive(r_grid, "validate_g2 r grid");
  require_increasing_positive(s_grid, "validate_g2 s grid");
  ClassMembershipReport report{GrowthClass::kG2, true, std::nullopt, young};

  for (std::size_t i = 1; i < r_grid.size(); ++i) {
    const double v1 = psi(r_grid[i - 1]);
    const double v2 = psi(r_grid[i]);
    if (exceeds(v1, v2)) {
      return not_member(report, {"psi(r1) <= psi(r2)", r_grid[i - 1], r_grid[i], std::nullopt, v1, v2});
    }
  }

  const double n = dimension;
  auto ratio = [&](double r, double s) {
    return psi(std::pow(r + s, n)) / young.inverse(std::pow((r + s) / s, n));
  };
  for (double s : s_grid) {
    double prev = ratio(r_grid[0], s);
    for (std::size_t i = 1; i < r_grid.size(); ++i) {
      const double cur = ratio(r_grid[i], s);
      if (exceeds(cur, prev)) {
        return not_member(report, {"psi((r+s)^n)/Psi^-1(((r+s)/s)^n) nonincreasing in r",
                                   r_grid[i - 1], r_grid[i], s, cur, prev});
      }
      prev = cur;
    }
  }
  return report;
}

ClassMembershipReport validate_gtheta(const GrowthFunction& theta, const YoungFunction& young,
                                      int dimension, std::span<const double> grid,
                                      double almost_const) {
  require_dimension(dimension);
  require_increasing_positive(grid, "validate_gtheta");
  if (!(almost_const >= 1.0) || !std::isfinite(almost_const)) {
    throw std::invalid_argument("validate_gtheta: almost-decrease constant must be >= 1");
  }
  ClassMembershipReport report{GrowthClass::kGTheta, true, std::nullopt, young};

  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double v1 = theta(grid[i - 1]);
    const double v2 = theta(grid[i]);
    if (exceeds(v2, v1)) {
      return not_member(report, {"theta(r2) <= theta(r1)", grid[i - 1], grid[i], std::nullopt, v2, v1});
    }
  }

  const double n = dimension;
  auto ratio = [&](double t) { return young.inverse(std::pow(t, -n)) / theta(t); };
  // g(t2) <= K g(t1) for all t1 < t2 reduces to comparing with the running minimum.
  double min_value = ratio(grid[0]);
  double min_at = grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = ratio(grid[i]);
    if (exceeds(cur, almost_const * min_value)) {
      return not_member(report, {"Theta^-1(t^-n)/theta(t) almost decreasing", min_at, grid[i],
                                 std::nullopt, cur, almost_const * min_value});
    }
    if (cur < min_value) {
      min_value = cur;
      min_at = grid[i];
    }
  }
  return report;
}

RelationReport check_preceq(const GrowthFunction& lhs, const GrowthFunction& rhs,
                            std::span<const double> t_grid, std::span<const double> c_grid) {
  return check_domination([&](double t) { return lhs(t); }, [&](double t) { return rhs(t); },
                          t_grid, c_grid);
}

ApproxReport check_approx(const GrowthFunction& a, const GrowthFunction& b,
                          std::span<const double> t_grid, std::span<const double> c_grid) {
  return {check_preceq(a, b, t_grid, c_grid), check_preceq(b, a, t_grid, c_grid)};
}

}  // namespace omlab
