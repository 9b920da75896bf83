#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>

#include "omlab/grid.hpp"
#include "omlab/relation.hpp"
#include "omlab/young.hpp"

namespace omlab {

/// A positive function on (0, inf) used as a Morrey-type growth parameter.
class GrowthFunction {
 public:
  enum class Family { kPower, kPowerCapped, kPowerLog, kConstant, kScale, kInvPower };

  /// t^a, a > 0.
  static GrowthFunction power(double a);
  /// min(t^a, 1), a > 0.
  static GrowthFunction power_capped(double a);
  /// t^a (1 + ln(1 + t)), a > 0.
  static GrowthFunction power_log(double a);
  static GrowthFunction constant(double c);
  /// k * inner(t), k > 0.
  static GrowthFunction scale(double k, GrowthFunction inner);
  /// t^(-a), a > 0. Decreasing; used as a parameter of the Guliyev variant.
  static GrowthFunction inv_power(double a);

  /// Throws std::domain_error unless t is positive and finite.
  double operator()(double t) const;

  Family family() const noexcept { return family_; }
  double parameter() const noexcept { return param_; }
  const GrowthFunction* inner() const noexcept { return inner_.get(); }

  std::string describe() const;

 private:
  GrowthFunction(Family family, double param, std::shared_ptr<const GrowthFunction> inner);

  Family family_;
  double param_ = 0.0;
  std::shared_ptr<const GrowthFunction> inner_;
};

enum class GrowthClass { kG1, kG2, kGTheta };

const char* to_string(GrowthClass c) noexcept;

/// The first inequality found to fail. `lhs > rhs` is the violated relation,
/// evaluated at grid points r1 < r2 (and at the parameter s for G2).
struct ClassViolation {
  std::string quantity;
  double r1 = 0.0;
  double r2 = 0.0;
  std::optional<double> s;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct ClassMembershipReport {
  GrowthClass class_id = GrowthClass::kG1;
  bool member = true;
  std::optional<ClassViolation> violation;
  std::optional<YoungFunction> partner_young;
};

/// Relative slack for monotonicity comparisons in the class checks.
inline constexpr double kMonotoneSlack = 1e-9;

/// G1: phi nondecreasing and phi(r)/r nonincreasing on consecutive grid pairs.
ClassMembershipReport validate_g1(const GrowthFunction& phi,
                                  std::span<const double> grid = grids::default_t());

/// G2: psi nondecreasing on r_grid and, for every s in s_grid,
/// r -> psi((r+s)^n) / Psi^{-1}(((r+s)/s)^n) nonincreasing on consecutive
/// r_grid pairs. Monotonicity is read in r with s held fixed.
ClassMembershipReport validate_g2(const GrowthFunction& psi, const YoungFunction& young,
                                  int dimension,
                                  std::span<const double> r_grid = grids::default_t(),
                                  std::span<const double> s_grid = grids::default_s());

/// G_Theta: theta nonincreasing on the grid and t -> Theta^{-1}(t^-n)/theta(t)
/// almost decreasing, i.e. g(t2) <= almost_const * g(t1) whenever t1 < t2.
ClassMembershipReport validate_gtheta(const GrowthFunction& theta, const YoungFunction& young,
                                      int dimension,
                                      std::span<const double> grid = grids::default_t(),
                                      double almost_const = 1.0);

/// phi1 <= C phi2 on the grid, smallest C.
RelationReport check_preceq(const GrowthFunction& lhs, const GrowthFunction& rhs,
                            std::span<const double> t_grid = grids::default_t(),
                            std::span<const double> c_grid = grids::default_c());

struct ApproxReport {
  RelationReport forward;
  RelationReport backward;
  bool holds() const noexcept { return forward.holds && backward.holds; }
};

/// Both directions of check_preceq.
ApproxReport check_approx(const GrowthFunction& a, const GrowthFunction& b,
                          std::span<const double> t_grid = grids::default_t(),
                          std::span<const double> c_grid = grids::default_c());

}  // namespace omlab
