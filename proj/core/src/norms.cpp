#include "omlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

#include "omlab/errors.hpp"

namespace omlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kClosedFormAgreement = 1e-9;

// A nonzero level of f seen from one ball: value and weight in the modular.
struct Level {
  double value;
  double weight;
};

// Smallest b with modular(b) <= threshold, modular nonincreasing in b and
// tending to +inf as b -> 0. Expands a bracket from b = 1 and bisects until
// the bracket cannot shrink; returns the feasible end.
double bisect_gauge(const std::function<double(double)>& modular, double threshold) {
  double lo = 1.0;
  double hi = 1.0;
  if (modular(1.0) <= threshold) {
    for (int i = 0; i < 2100; ++i) {
      lo = hi * 0.5;
      if (lo == 0.0) return hi;
      if (!(modular(lo) <= threshold)) break;
      hi = lo;
    }
  } else {
    for (int i = 0; i < 2100; ++i) {
      lo = hi;
      hi *= 2.0;
      if (modular(hi) <= threshold) break;
    }
  }
  for (int i = 0; i < 4000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (modular(mid) <= threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double strong_modular(const std::vector<Level>& levels, const YoungFunction& young, double b) {
  double total = 0.0;
  for (const auto& l : levels) total += l.weight * young.saturating(l.value / b);
  return total;
}

// inf{b : sum_j w_j Phi(c_j / b) <= T}.
double solve_strong(const std::vector<Level>& levels, const YoungFunction& young, double threshold,
                    SolveMethod method) {
  if (levels.empty()) return 0.0;
  auto modular = [&](double b) { return strong_modular(levels, young, b); };
  if (method == SolveMethod::kBisection) return bisect_gauge(modular, threshold);

  // Each term alone must satisfy the constraint (lower bound); the norm is
  // subadditive over the disjoint pieces (upper bound).
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& l : levels) {
    const double single = l.value / young.inverse(threshold / l.weight);
    lo = std::max(lo, single);
    hi += single;
  }
  if (levels.size() == 1) return lo;
  if (modular(lo) <= threshold) return lo;
  for (int i = 0; i < 64 && !(modular(hi) <= threshold); ++i) hi *= 2.0;
  for (int i = 0; i < 4000; ++i) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (modular(mid) <= threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

// Nonzero levels of f inside the ball, weights = shell measure * scale.
std::vector<Level> strong_levels(const SimpleRadialFunction& f, const Ball& ball, double scale) {
  const auto shells = shell_measures(f, ball);
  std::vector<Level> out;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    if (f.values()[j] > 0.0 && shells[j] > 0.0) out.push_back({f.values()[j], shells[j] * scale});
  }
  return out;
}

// Distinct positive values v_1 < ... < v_m reached inside the ball, with
// weight |{x in B : f(x) >= v_j}| / |B|.
std::vector<Level> weak_levels(const SimpleRadialFunction& f, const Ball& ball) {
  const auto shells = shell_measures(f, ball);
  std::vector<double> distinct;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    if (f.values()[j] > 0.0 && shells[j] > 0.0) distinct.push_back(f.values()[j]);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  const double measure = ball.measure();
  std::vector<Level> out;
  out.reserve(distinct.size());
  for (double v : distinct) {
    double mass = 0.0;
    for (std::size_t j = 0; j < shells.size(); ++j) {
      if (f.values()[j] >= v) mass += shells[j];
    }
    out.push_back({v, mass / measure});
  }
  return out;
}

// inf{b : sup_t Phi(t) |{|f|/b > t}| / |B| <= T}.
double solve_weak(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                  double threshold, SolveMethod method) {
  if (method == SolveMethod::kPerLevel) {
    // The supremum over t is approached from the left of each jump v_j / b,
    // where the level set is {f >= v_j}; each jump imposes its own bound.
    double b = 0.0;
    for (const auto& l : weak_levels(f, ball)) {
      b = std::max(b, l.value / young.inverse(threshold / l.weight));
    }
    return b;
  }

  const auto shells = shell_measures(f, ball);
  std::vector<double> distinct;
  for (std::size_t j = 0; j < shells.size(); ++j) {
    if (f.values()[j] > 0.0 && shells[j] > 0.0) distinct.push_back(f.values()[j]);
  }
  if (distinct.empty()) return 0.0;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // On [v_{j-1}/b, v_j/b) the level set measure is distribution(f, B, v_{j-1}).
  const double measure = ball.measure();
  std::vector<double> masses(distinct.size());
  double previous = 0.0;
  for (std::size_t j = 0; j < distinct.size(); ++j) {
    masses[j] = distribution(f, ball, previous) / measure;
    previous = distinct[j];
  }
  auto modular = [&](double b) {
    double best = 0.0;
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (masses[j] > 0.0) best = std::max(best, young.saturating(distinct[j] / b) * masses[j]);
    }
    return best;
  };
  return bisect_gauge(modular, threshold);
}

bool on_grid(std::span<const double> radii, double r) {
  return std::binary_search(radii.begin(), radii.end(), r);
}

}  // namespace

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::kNakai:
      return "nakai";
    case Variant::kSst:
      return "sst";
    case Variant::kWeakNakai:
      return "weak-nakai";
    case Variant::kWeakSst:
      return "weak-sst";
    case Variant::kGuliyev:
      return "guliyev";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : {Variant::kNakai, Variant::kSst, Variant::kWeakNakai, Variant::kWeakSst,
                    Variant::kGuliyev}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

GrowthClass required_class(Variant v) noexcept {
  switch (v) {
    case Variant::kNakai:
    case Variant::kWeakNakai:
      return GrowthClass::kG1;
    case Variant::kSst:
    case Variant::kWeakSst:
      return GrowthClass::kG2;
    case Variant::kGuliyev:
      return GrowthClass::kGTheta;
  }
  return GrowthClass::kG1;
}

SpaceSpec::SpaceSpec(Variant variant, YoungFunction young, GrowthFunction growth, int dimension,
                     ClassMembershipReport report)
    : variant_(variant),
      young_(std::move(young)),
      growth_(std::move(growth)),
      dimension_(dimension),
      class_report_(std::move(report)) {}

SpaceSpec SpaceSpec::make(Variant variant, YoungFunction young, GrowthFunction growth,
                          int dimension, bool override_class_check) {
  if (dimension < 1) throw std::invalid_argument("space dimension must be at least 1");
  ClassMembershipReport report;
  switch (required_class(variant)) {
    case GrowthClass::kG1:
      report = validate_g1(growth);
      break;
    case GrowthClass::kG2:
      report = validate_g2(growth, young, dimension);
      break;
    case GrowthClass::kGTheta:
      report = validate_gtheta(growth, young, dimension);
      break;
  }
  if (!report.member && !override_class_check) {
    throw PreconditionError(std::string(to_string(variant)) + " space: " + growth.describe() +
                            " is not in " + to_string(report.class_id) + " (" +
                            report.violation->quantity + ")");
  }
  return {variant, std::move(young), std::move(growth), dimension, std::move(report)};
}

double luxemburg_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                       SolveMethod method) {
  return solve_strong(strong_levels(f, ball, 1.0 / ball.measure()), young, 1.0, method);
}

double nakai_local(const SimpleRadialFunction& f, const GrowthFunction& phi,
                   const YoungFunction& young, const Ball& ball, SolveMethod method) {
  const double measure = ball.measure();
  return solve_strong(strong_levels(f, ball, 1.0 / measure), young, 1.0 / phi(measure), method);
}

double orlicz_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                    SolveMethod method) {
  return solve_strong(strong_levels(f, ball, 1.0), young, 1.0, method);
}

double weak_nakai_local(const SimpleRadialFunction& f, const GrowthFunction& phi,
                        const YoungFunction& young, const Ball& ball, SolveMethod method) {
  return solve_weak(f, young, ball, 1.0 / phi(ball.measure()), method);
}

double weak_sst_local(const SimpleRadialFunction& f, const YoungFunction& young, const Ball& ball,
                      SolveMethod method) {
  return solve_weak(f, young, ball, 1.0, method);
}

double weak_local(const SimpleRadialFunction& f, const SpaceSpec& spec, const Ball& ball,
                  SolveMethod method) {
  switch (spec.variant()) {
    case Variant::kWeakNakai:
      return weak_nakai_local(f, spec.growth(), spec.young(), ball, method);
    case Variant::kWeakSst:
      return weak_sst_local(f, spec.young(), ball, method);
    default:
      throw std::invalid_argument("weak_local needs a weak variant");
  }
}

double local_norm(const SimpleRadialFunction& f, const SpaceSpec& spec, const Ball& ball,
                  SolveMethod method) {
  switch (spec.variant()) {
    case Variant::kNakai:
      return nakai_local(f, spec.growth(), spec.young(), ball, method);
    case Variant::kSst:
      return luxemburg_local(f, spec.young(), ball, method);
    case Variant::kWeakNakai:
    case Variant::kWeakSst:
      return weak_local(f, spec, ball, method);
    case Variant::kGuliyev:
      return orlicz_local(f, spec.young(), ball, method);
  }
  return 0.0;
}

double ball_factor(const SpaceSpec& spec, double ball_measure) {
  switch (spec.variant()) {
    case Variant::kNakai:
    case Variant::kWeakNakai:
      return 1.0;
    case Variant::kSst:
    case Variant::kWeakSst:
      return spec.growth()(ball_measure);
    case Variant::kGuliyev:
      return spec.young().inverse(1.0 / ball_measure) /
             spec.growth()(std::pow(ball_measure, 1.0 / spec.dimension()));
  }
  return 1.0;
}

NormResult global_norm(const SimpleRadialFunction& f, const SpaceSpec& spec,
                       std::span<const double> radii, SolveMethod method) {
  if (radii.empty()) throw std::domain_error("global_norm: radius grid is empty");
  require_increasing_positive(radii, "global_norm radii");
  if (f.dimension() != spec.dimension()) {
    throw std::invalid_argument("global_norm: function and space dimensions differ");
  }

  NormResult result;
  result.radii.assign(radii.begin(), radii.end());
  result.local_values.reserve(radii.size());
  double best = -1.0;
  for (double r : radii) {
    const Ball ball(f.center(), r);
    const double local = local_norm(f, spec, ball, method);
    // A zero gauge contributes zero even where the factor is huge.
    const double value = local == 0.0 ? 0.0 : ball_factor(spec, ball.measure()) * local;
    result.local_values.push_back(value);
    if (value > best) {
      best = value;
      result.attained_at = r;
    }
  }
  result.value = best;

  if (const auto r0 = f.single_level_radius(); r0 && spec.class_validated() && on_grid(radii, *r0)) {
    const double closed = f.values().front() * char_norm_closed(spec, *r0);
    if (std::abs(result.value - closed) <= kClosedFormAgreement * closed) {
      result.value = closed;
      result.exact = true;
    }
  }
  return result;
}

NormResult guliyev_global(const SimpleRadialFunction& f, const GrowthFunction& theta,
                          const YoungFunction& young, std::span<const double> radii,
                          SolveMethod method) {
  const auto spec = SpaceSpec::make(Variant::kGuliyev, young, theta, f.dimension(), true);
  return global_norm(f, spec, radii, method);
}

double char_norm_closed(const SpaceSpec& spec, double r0) {
  const double measure = ball_volume(spec.dimension(), r0);
  switch (spec.variant()) {
    case Variant::kSst:
    case Variant::kWeakSst:
      return spec.growth()(measure) / spec.young().inverse(1.0);
    case Variant::kNakai:
    case Variant::kWeakNakai:
      return 1.0 / spec.young().inverse(1.0 / spec.growth()(measure));
    case Variant::kGuliyev:
      return 1.0 / spec.growth()(std::pow(measure, 1.0 / spec.dimension()));
  }
  return kInf;
}

double char_local_closed(const SpaceSpec& spec, double r, double r0) {
  const int n = spec.dimension();
  const double measure = ball_volume(n, r);
  const double overlap = concentric_intersection(n, r, r0);
  switch (spec.variant()) {
    case Variant::kNakai:
    case Variant::kWeakNakai:
      return 1.0 / spec.young().inverse(measure / (overlap * spec.growth()(measure)));
    case Variant::kSst:
    case Variant::kWeakSst:
      return 1.0 / spec.young().inverse(measure / overlap);
    case Variant::kGuliyev:
      return 1.0 / spec.young().inverse(1.0 / overlap);
  }
  return kInf;
}

std::vector<double> default_radii(const SimpleRadialFunction& f) {
  return merge_grids(grids::default_radii(), f.breakpoints());
}

}  // namespace omlab
