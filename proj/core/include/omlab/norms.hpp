#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "omlab/geometry.hpp"
#include "omlab/growth.hpp"
#include "omlab/young.hpp"

namespace omlab {

enum class Variant { kNakai, kSst, kWeakNakai, kWeakSst, kGuliyev };

std::string_view to_string(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

/// Growth class required by a variant: G1 for the Nakai pair, G2 for the
/// Sawano-Sugano-Tanaka pair, G_Theta for the Guliyev variant.
GrowthClass required_class(Variant v) noexcept;

/// One Orlicz-Morrey space: variant, Young function, growth function, dimension.
class SpaceSpec {
 public:
  /// Validates the growth function against the variant's class on the default
  /// grids. Throws PreconditionError on failure unless `override_class_check`.
  static SpaceSpec make(Variant variant, YoungFunction young, GrowthFunction growth,
                        int dimension, bool override_class_check = false);

  Variant variant() const noexcept { return variant_; }
  const YoungFunction& young() const noexcept { return young_; }
  const GrowthFunction& growth() const noexcept { return growth_; }
  int dimension() const noexcept { return dimension_; }

  /// True when the class check passed (closed forms for characteristic
  /// functions are then valid).
  bool class_validated() const noexcept { return class_report_.member; }
  const ClassMembershipReport& class_report() const noexcept { return class_report_; }

 private:
  SpaceSpec(Variant variant, YoungFunction young, GrowthFunction growth, int dimension,
            ClassMembershipReport report);

  Variant variant_;
  YoungFunction young_;
  GrowthFunction growth_;
  int dimension_;
  ClassMembershipReport class_report_;
};

struct NormResult {
  double value = 0.0;
  /// True when the value is a closed form for c * chi_B confirmed by the grid.
  /// Otherwise the value is the maximum over concentric balls on the radius
  /// grid: a certified lower bound of the supremum over all balls.
  bool exact = false;
  std::vector<double> radii;
  /// ball_factor * local_norm for each radius.
  std::vector<double> local_values;
  std::optional<double> attained_at;
};

/// How local gauges are solved.
///
/// kPerLevel uses the generalized inverse level by level: exact for one
/// nonzero level (and always exact for weak norms), otherwise it brackets the
/// root between the largest single-level norm and the sum of them and bisects.
/// kBisection ignores the inverse altogether: it expands a bracket from b = 1
/// and bisects the defining modular. The two routes are independent.
enum class SolveMethod { kPerLevel, kBisection };

/// inf{b > 0 : (1/|B|) ∫_B Psi(|f|/b) <= 1}.
double luxemburg_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                       SolveMethod method = SolveMethod::kPerLevel);

/// inf{b > 0 : phi(|B|) (1/|B|) ∫_B Phi(|f|/b) <= 1}.
double nakai_local(const SimpleRadialFunction& f, const GrowthFunction& phi,
                   const YoungFunction& young, const Ball& ball,
                   SolveMethod method = SolveMethod::kPerLevel);

/// Un-normalized Luxemburg norm on the ball: inf{b > 0 : ∫_B Theta(|f|/b) <= 1}.
double orlicz_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                    SolveMethod method = SolveMethod::kPerLevel);

/// inf{b : sup_t Phi(t) phi(|B|) |{x in B : |f|/b > t}| / |B| <= 1}.
double weak_nakai_local(const SimpleRadialFunction& f, const GrowthFunction& phi,
                        const YoungFunction& young, const Ball& ball,
                        SolveMethod method = SolveMethod::kPerLevel);

/// The same gauge with phi == 1; the psi(|B|) factor belongs to the global norm.
double weak_sst_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                      SolveMethod method = SolveMethod::kPerLevel);

/// Dispatches to weak_nakai_local or weak_sst_local. Throws
/// std::invalid_argument for strong variants.
double weak_local(const SimpleRadialFunction& f, const SpaceSpec& spec, const Ball& ball,
                  SolveMethod method = SolveMethod::kPerLevel);

/// The variant's per-ball gauge, without the outer factor: nakai_local,
/// luxemburg_local, weak_*_local or orlicz_local.
double local_norm(const SimpleRadialFunction& f, const SpaceSpec& spec, const Ball& ball,
                  SolveMethod method = SolveMethod::kPerLevel);

/// Factor multiplying local_norm in the global supremum: 1 for the Nakai
/// variants, psi(|B|) for the SST variants, Theta^{-1}(1/|B|)/theta(|B|^{1/n})
/// for the Guliyev variant.
double ball_factor(const SpaceSpec& spec, double ball_measure);

/// Supremum of ball_factor * local_norm over balls B(f.center, r), r in radii.
NormResult global_norm(const SimpleRadialFunction& f, const SpaceSpec& spec,
                       std::span<const double> radii,
                       SolveMethod method = SolveMethod::kPerLevel);

/// Guliyev variant with explicit parameters (no class validation).
NormResult guliyev_global(const SimpleRadialFunction& f, const GrowthFunction& theta,
                          const YoungFunction& young, std::span<const double> radii,
                          SolveMethod method = SolveMethod::kPerLevel);

/// Closed-form global norm of chi_{B(a, r0)}:
///   sst, weak-sst        psi(|B0|) / Psi^{-1}(1)
///   nakai, weak-nakai    1 / Phi^{-1}(1 / phi(|B0|))
///   guliyev              1 / theta(|B0|^{1/n})
double char_norm_closed(const SpaceSpec& spec, double r0);

/// Closed-form local_norm of chi_{B(a, r0)} on B(a, r):
///   nakai, weak-nakai    1 / Phi^{-1}(|B| / (|B ∩ B0| phi(|B|)))
///   sst, weak-sst        1 / Psi^{-1}(|B| / |B ∩ B0|)
///   guliyev              1 / Theta^{-1}(1 / |B ∩ B0|)
double char_local_closed(const SpaceSpec& spec, double r, double r0);

/// 2^k (k = -6..6) merged with the function's own breakpoints.
std::vector<double> default_radii(const SimpleRadialFunction& f);

}  // namespace omlab
