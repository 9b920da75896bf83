#include "omlab/inclusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "omlab/errors.hpp"
#include "omlab/grid.hpp"

namespace omlab {

namespace {

constexpr std::string_view kYoungOrder = "Young1 < Young2";
constexpr std::string_view kGrowthDominated = "growth1 <= C growth2";
constexpr std::string_view kGrowthDominates = "growth2 <= C growth1";
constexpr std::string_view kInverseOrder = "Young1^-1 < Young2^-1";
constexpr std::string_view kExponentOrder = "p1 <= p2";
constexpr std::string_view kSameYoung = "Young1 == Young2";

constexpr double kInf = std::numeric_limits<double>::infinity();

RelationReport flag_report(bool holds, std::string note) {
  RelationReport r;
  r.holds = holds;
  if (holds) r.witness_c = 1.0;
  r.note = std::move(note);
  return r;
}

RelationReport young_order(const YoungFunction& a, const YoungFunction& b,
                           std::span<const double> t_grid, std::span<const double> c_grid) {
  return check_prec(a, b, t_grid, c_grid);
}

RelationReport inverse_order(const YoungFunction& a, const YoungFunction& b,
                             std::span<const double> t_grid, std::span<const double> c_grid) {
  return check_dilation_order([&a](double s) { return a.inverse(s); },
                              [&b](double s) { return b.inverse(s); }, t_grid, c_grid);
}

double ratio_of(double lhs, double rhs) {
  if (rhs > 0.0) return lhs / rhs;
  return lhs > 0.0 ? kInf : 0.0;
}

bool within(double lhs, double bound, double rhs, double tol) {
  if (!std::isfinite(bound)) return false;
  return lhs <= bound * rhs * (1.0 + tol);
}

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

double power_exponent(const YoungFunction& young) {
  if (young.family() != YoungFunction::Family::kPower)
    throw std::invalid_argument("generalized Morrey check needs power Young functions, got " +
                                young.describe());
  return young.parameter();
}

std::vector<double> sample_radii(const TheoremFixture& fx, const SimpleRadialFunction& f) {
  return merge_grids(fx.radii, f.breakpoints());
}

void finish(VerificationReport& report) {
  report.measured_constant = 0.0;
  bool all = true;
  for (const auto& row : report.rows) {
    report.measured_constant = std::max(report.measured_constant, row.ratio);
    all = all && row.pass;
  }
  report.passed = all && !report.rows.empty();
}

}  // namespace

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::kNakai: return "nakai";
    case TheoremId::kSst: return "sst";
    case TheoremId::kSstSameYoung: return "sst-same-young";
    case TheoremId::kWeakNakai: return "weak-nakai";
    case TheoremId::kWeakSst: return "weak-sst";
    case TheoremId::kGuliyev: return "guliyev";
    case TheoremId::kMorreyPower: return "morrey-power";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) noexcept {
  for (auto id : {TheoremId::kNakai, TheoremId::kSst, TheoremId::kSstSameYoung,
                  TheoremId::kWeakNakai, TheoremId::kWeakSst, TheoremId::kGuliyev,
                  TheoremId::kMorreyPower})
    if (to_string(id) == name) return id;
  return std::nullopt;
}

Variant theorem_variant(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::kNakai: return Variant::kNakai;
    case TheoremId::kWeakNakai: return Variant::kWeakNakai;
    case TheoremId::kWeakSst: return Variant::kWeakSst;
    case TheoremId::kGuliyev: return Variant::kGuliyev;
    default: return Variant::kSst;
  }
}

std::string_view to_string(Direction d) noexcept {
  return d == Direction::kSufficiency ? "sufficiency" : "necessity";
}

bool TheoremFixture::hypotheses_hold() const noexcept {
  return std::all_of(hypotheses.begin(), hypotheses.end(),
                     [](const Hypothesis& h) { return h.relation.holds; });
}

std::optional<double> TheoremFixture::witness(std::string_view statement) const {
  for (const auto& h : hypotheses)
    if (h.statement == statement) return h.relation.holds ? h.relation.witness_c : std::nullopt;
  return std::nullopt;
}

TheoremFixture make_fixture(TheoremId theorem, SpaceSpec space1, SpaceSpec space2,
                            std::vector<SimpleRadialFunction> samples, std::vector<double> radii,
                            bool override_hypotheses, std::span<const double> t_grid,
                            std::span<const double> c_grid) {
  const Variant want = theorem_variant(theorem);
  if (space1.variant() != want || space2.variant() != want)
    throw std::invalid_argument(std::string(to_string(theorem)) + " needs two " +
                                std::string(to_string(want)) + " spaces");
  if (space1.dimension() != space2.dimension())
    throw std::invalid_argument("spaces have different dimensions");
  require_increasing_positive(radii, "radius grid");
  for (const auto& f : samples)
    if (f.dimension() != space1.dimension())
      throw std::invalid_argument("sample dimension differs from the spaces");

  std::vector<Hypothesis> hyps;
  auto add = [&hyps](std::string_view s, RelationReport r) {
    hyps.push_back({std::string(s), std::move(r)});
  };
  const auto& y1 = space1.young();
  const auto& y2 = space2.young();
  const auto& g1 = space1.growth();
  const auto& g2 = space2.growth();
  switch (theorem) {
    case TheoremId::kNakai:
      add(kYoungOrder, young_order(y1, y2, t_grid, c_grid));
      add(kGrowthDominated, check_preceq(g1, g2, t_grid, c_grid));
      add(kGrowthDominates, check_preceq(g2, g1, t_grid, c_grid));
      break;
    case TheoremId::kSst:
    case TheoremId::kWeakNakai:
    case TheoremId::kWeakSst:
      add(kYoungOrder, young_order(y1, y2, t_grid, c_grid));
      add(kGrowthDominated, check_preceq(g1, g2, t_grid, c_grid));
      break;
    case TheoremId::kSstSameYoung:
      if (y1.describe() != y2.describe())
        throw std::invalid_argument("sst-same-young needs one Young function, got " +
                                    y1.describe() + " and " + y2.describe());
      add(kSameYoung, flag_report(true, y1.describe()));
      add(kGrowthDominated, check_preceq(g1, g2, t_grid, c_grid));
      break;
    case TheoremId::kGuliyev:
      add(kYoungOrder, young_order(y1, y2, t_grid, c_grid));
      add(kGrowthDominates, check_preceq(g2, g1, t_grid, c_grid));
      add(kInverseOrder, inverse_order(y1, y2, t_grid, c_grid));
      break;
    case TheoremId::kMorreyPower: {
      const double p1 = power_exponent(y1);
      const double p2 = power_exponent(y2);
      add(kExponentOrder, flag_report(p1 <= p2, y1.describe() + " vs " + y2.describe()));
      add(kGrowthDominated, check_preceq(g1, g2, t_grid, c_grid));
      break;
    }
  }
  return TheoremFixture{theorem,          std::move(space1), std::move(space2),
                        std::move(hyps),  std::move(samples), std::move(radii),
                        override_hypotheses};
}

VerificationReport verify_sufficiency(const TheoremFixture& fx, double tol) {
  const bool hold = fx.hypotheses_hold();
  if (!hold && !fx.override_hypotheses) {
    std::string failed;
    for (const auto& h : fx.hypotheses)
      if (!h.relation.holds) failed += (failed.empty() ? "" : ", ") + h.statement;
    throw PreconditionError(std::string(to_string(fx.theorem)) + ": hypothesis fails: " + failed);
  }
  if (fx.theorem == TheoremId::kMorreyPower && hold) {
    return morrey_power_crosscheck(power_exponent(fx.space1.young()),
                                   power_exponent(fx.space2.young()), fx.space1.growth(),
                                   fx.space2.growth(), fx.space1.dimension(), fx.samples,
                                   fx.radii, tol);
  }

  VerificationReport report;
  report.theorem = fx.theorem;
  report.direction = Direction::kSufficiency;
  double c = kInf;
  if (hold) {
    const double young = fx.witness(kYoungOrder).value_or(1.0);
    switch (fx.theorem) {
      case TheoremId::kSst:
      case TheoremId::kWeakSst:
      case TheoremId::kSstSameYoung:
        c = young * *fx.witness(kGrowthDominated);
        break;
      case TheoremId::kNakai:
      case TheoremId::kWeakNakai:
        c = young * std::max(*fx.witness(kGrowthDominated), 1.0);
        break;
      case TheoremId::kGuliyev:
        c = young * *fx.witness(kGrowthDominates) * std::max(*fx.witness(kInverseOrder), 1.0);
        break;
      case TheoremId::kMorreyPower:
        break;
    }
  } else {
    report.note = "hypotheses overridden; no proof constant";
  }
  report.proof_constant = c;

  for (std::size_t i = 0; i < fx.samples.size(); ++i) {
    const auto& f = fx.samples[i];
    const auto radii = sample_radii(fx, f);
    const double lhs = global_norm(f, fx.space1, radii).value;
    const double rhs = global_norm(f, fx.space2, radii).value;
    report.rows.push_back({i, lhs, rhs, ratio_of(lhs, rhs), c, within(lhs, c, rhs, tol)});
  }
  finish(report);
  return report;
}

VerificationReport verify_necessity(const TheoremFixture& fx, double assumed_c, double tol) {
  if (!(assumed_c > 0.0) || !std::isfinite(assumed_c))
    throw std::invalid_argument("assumed constant must be positive and finite");
  VerificationReport report;
  report.theorem = fx.theorem;
  report.direction = Direction::kNecessity;
  const int n = fx.space1.dimension();

  switch (fx.theorem) {
    case TheoremId::kSst:
    case TheoremId::kSstSameYoung:
    case TheoremId::kWeakSst:
    case TheoremId::kMorreyPower: {
      const double c1 =
          assumed_c * fx.space1.young().inverse(1.0) / fx.space2.young().inverse(1.0);
      report.proof_constant = c1;
      for (std::size_t i = 0; i < fx.radii.size(); ++i) {
        const double m = ball_volume(n, fx.radii[i]);
        const double lhs = fx.space1.growth()(m);
        const double rhs = fx.space2.growth()(m);
        report.rows.push_back({i, lhs, rhs, ratio_of(lhs, rhs), c1, within(lhs, c1, rhs, tol)});
      }
      break;
    }
    case TheoremId::kNakai:
    case TheoremId::kWeakNakai: {
      const auto dom = check_preceq(fx.space2.growth(), fx.space1.growth());
      if (!dom.holds) {
        report.proof_constant = kInf;
        report.note = "growth2 <= C growth1 fails on the grid; Young relation not recoverable";
        return report;
      }
      const double c3 = assumed_c * std::max(*dom.witness_c, 1.0);
      report.proof_constant = c3;
      for (std::size_t i = 0; i < fx.radii.size(); ++i) {
        const double r = fx.radii[i];
        // Premise: the assumed inclusion on chi_B.
        const double char1 = char_norm_closed(fx.space1, r);
        const double char2 = char_norm_closed(fx.space2, r);
        const bool premise = within(char1, assumed_c, char2, tol);
        const double s = 1.0 / fx.space2.growth()(ball_volume(n, r));
        const double t = fx.space2.young().inverse(s);
        const double lhs = fx.space1.young().saturating(t / c3);
        const double rhs = fx.space2.young().saturating(t);
        report.rows.push_back(
            {i, lhs, rhs, ratio_of(lhs, rhs), 1.0, premise && within(lhs, 1.0, rhs, tol)});
      }
      break;
    }
    case TheoremId::kGuliyev: {
      report.proof_constant = assumed_c;
      for (std::size_t i = 0; i < fx.radii.size(); ++i) {
        const double x = std::pow(ball_volume(n, fx.radii[i]), 1.0 / n);
        const double lhs = fx.space2.growth()(x);
        const double rhs = fx.space1.growth()(x);
        report.rows.push_back(
            {i, lhs, rhs, ratio_of(lhs, rhs), assumed_c, within(lhs, assumed_c, rhs, tol)});
      }
      break;
    }
  }
  finish(report);
  return report;
}

double power_mean(const SimpleRadialFunction& f, double p, double r) {
  if (!(p >= 1.0)) throw std::invalid_argument("power_mean needs p >= 1");
  if (!(r > 0.0)) throw std::domain_error("power_mean needs r > 0");
  const int n = f.dimension();
  const auto& rho = f.breakpoints();
  const auto& v = f.values();
  // Volumes cancel: use r^n-normalized shells.
  double acc = 0.0;
  double inner = 0.0;
  for (std::size_t j = 0; j < rho.size(); ++j) {
    const double outer = std::pow(std::min(rho[j], r) / r, n);
    if (v[j] != 0.0) acc += std::pow(std::abs(v[j]), p) * (outer - inner);
    inner = outer;
    if (rho[j] >= r) break;
  }
  return std::pow(acc, 1.0 / p);
}

VerificationReport morrey_power_crosscheck(double p1, double p2, const GrowthFunction& psi1,
                                           const GrowthFunction& psi2, int dimension,
                                           std::span<const SimpleRadialFunction> samples,
                                           std::span<const double> radii, double tol) {
  if (!(p1 >= 1.0) || !(p2 >= 1.0)) throw std::invalid_argument("exponents must be >= 1");
  if (p1 > p2) throw PreconditionError("generalized Morrey inclusion needs p1 <= p2");
  const auto dom = check_preceq(psi1, psi2);
  if (!dom.holds) throw PreconditionError("growth1 <= C growth2 fails on the grid");
  const auto s1 = SpaceSpec::make(Variant::kSst, YoungFunction::power(p1), psi1, dimension);
  const auto s2 = SpaceSpec::make(Variant::kSst, YoungFunction::power(p2), psi2, dimension);

  VerificationReport report;
  report.theorem = TheoremId::kMorreyPower;
  report.direction = Direction::kSufficiency;
  report.proof_constant = *dom.witness_c;
  double gap = 0.0;
  bool agree = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& f = samples[i];
    const auto grid = merge_grids(radii, f.breakpoints());
    double m1 = 0.0;
    double m2 = 0.0;
    for (double r : grid) {
      const double vol = ball_volume(dimension, r);
      m1 = std::max(m1, psi1(vol) * power_mean(f, p1, r));
      m2 = std::max(m2, psi2(vol) * power_mean(f, p2, r));
    }
    const double lhs = global_norm(f, s1, grid).value;
    const double rhs = global_norm(f, s2, grid).value;
    const double g = std::max(relative_gap(lhs, m1), relative_gap(rhs, m2));
    gap = std::max(gap, g);
    agree = agree && g <= tol;
    report.rows.push_back({i, lhs, rhs, ratio_of(lhs, rhs), report.proof_constant,
                           g <= tol && within(lhs, report.proof_constant, rhs, tol)});
  }
  report.path_deviation = gap;
  finish(report);
  if (!agree) report.note = "Luxemburg and L^p-mean paths disagree";
  return report;
}

std::vector<SimpleRadialFunction> sample_corpus(std::uint64_t seed, std::size_t random_count,
                                                std::span<const double> radii, int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  const std::vector<double> center(static_cast<std::size_t>(dimension), 0.0);
  std::vector<SimpleRadialFunction> out;
  for (double r : radii) out.push_back(SimpleRadialFunction::characteristic(center, r));

  // mt19937_64 output is fixed by the standard; map it to [0, 1) by hand so
  // the corpus does not depend on the library's distributions.
  std::mt19937_64 rng(seed);
  auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (std::size_t i = 0; i < random_count; ++i) {
    const auto k = 1 + static_cast<std::size_t>(unit() * 8.0);
    std::vector<double> bp;
    for (std::size_t j = 0; j < k; ++j) bp.push_back(std::exp2(-4.0 + 8.0 * unit()));
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    std::vector<double> vals;
    for (std::size_t j = 0; j < bp.size(); ++j) vals.push_back(10.0 * unit());
    out.emplace_back(center, std::move(bp), std::move(vals));
  }
  return out;
}

TheoremFixture reference_fixture(TheoremId theorem, std::uint64_t seed,
                                 std::size_t random_count) {
  using G = GrowthFunction;
  using Y = YoungFunction;
  constexpr int n = 1;
  auto radii = pow2_grid(-6, 6);
  auto samples = sample_corpus(seed, random_count, radii, n);
  auto build = [&](Y y1, G g1, Y y2, G g2) {
    const Variant v = theorem_variant(theorem);
    return make_fixture(theorem, SpaceSpec::make(v, std::move(y1), std::move(g1), n),
                        SpaceSpec::make(v, std::move(y2), std::move(g2), n), std::move(samples),
                        std::move(radii));
  };
  switch (theorem) {
    case TheoremId::kSst:
    case TheoremId::kWeakSst:
      return build(Y::power(2), G::power_capped(0.5), Y::sum(Y::power(1), Y::power(2)),
                   G::power(0.5));
    case TheoremId::kSstSameYoung:
      return build(Y::power(2), G::power_capped(0.5), Y::power(2), G::power(0.5));
    case TheoremId::kNakai:
      return build(Y::power(1), G::power(0.5), Y::sum(Y::power(1), Y::power(2)), G::power(0.5));
    case TheoremId::kWeakNakai:
      return build(Y::power(1), G::power(0.5), Y::exp_minus_one(), G::power(0.5));
    case TheoremId::kGuliyev:
      return build(Y::power(2), G::inv_power(0.5), Y::power(2),
                   G::scale(0.5, G::inv_power(0.5)));
    case TheoremId::kMorreyPower:
      return build(Y::power(1), G::power_capped(0.5), Y::power(2), G::power(0.5));
  }
  throw std::invalid_argument("unknown theorem");
}

TheoremFixture contrapositive_fixture(std::uint64_t seed, std::size_t random_count) {
  constexpr int n = 1;
  auto radii = pow2_grid(-6, 6);
  auto samples = sample_corpus(seed, random_count, radii, n);
  auto s1 = SpaceSpec::make(Variant::kWeakSst, YoungFunction::power(2),
                            GrowthFunction::power(0.5), n);
  auto s2 = SpaceSpec::make(Variant::kWeakSst, YoungFunction::power(2),
                            GrowthFunction::power(0.25), n);
  return make_fixture(TheoremId::kWeakSst, std::move(s1), std::move(s2), std::move(samples),
                      std::move(radii), true);
}

}  // namespace omlab
