#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "omlab/geometry.hpp"
#include "omlab/norms.hpp"
#include "omlab/relation.hpp"

namespace omlab {

/// The inclusion statements that can be exercised.
enum class TheoremId {
  kNakai,          // Nakai spaces, Phi1 < Phi2 with phi1 ≈ phi2
  kSst,            // SST spaces, psi1 ⪯ psi2 under Psi1 < Psi2
  kSstSameYoung,   // SST spaces sharing one Young function
  kWeakNakai,      // weak Nakai spaces, Phi1 < Phi2 with phi1 ⪯ phi2
  kWeakSst,        // weak SST spaces
  kGuliyev,        // Guliyev spaces, theta2 ⪯ theta1
  kMorreyPower,    // generalized Morrey spaces, Psi_i = t^{p_i}, p1 <= p2
};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name) noexcept;

/// Variant both spaces of a theorem fixture must have.
Variant theorem_variant(TheoremId id) noexcept;

struct Hypothesis {
  std::string statement;
  RelationReport relation;
};

/// Two spaces, the theorem connecting them, the checked hypotheses and the
/// sample functions the inequality is tested on. Build with make_fixture.
struct TheoremFixture {
  TheoremId theorem;
  SpaceSpec space1;
  SpaceSpec space2;
  std::vector<Hypothesis> hypotheses;
  std::vector<SimpleRadialFunction> samples;
  std::vector<double> radii;
  bool override_hypotheses = false;

  bool hypotheses_hold() const noexcept;
  /// Witness of the named hypothesis, if it holds.
  std::optional<double> witness(std::string_view statement) const;
};

/// Checks the hypotheses of `theorem` on the relation grids and assembles
/// the fixture. Throws std::invalid_argument when the spaces do not match
/// the theorem (wrong variant, different dimensions, non-power Young
/// functions for kMorreyPower, distinct Young functions for kSstSameYoung).
TheoremFixture make_fixture(TheoremId theorem, SpaceSpec space1, SpaceSpec space2,
                            std::vector<SimpleRadialFunction> samples, std::vector<double> radii,
                            bool override_hypotheses = false,
                            std::span<const double> t_grid = grids::default_t(),
                            std::span<const double> c_grid = grids::default_c());

enum class Direction { kSufficiency, kNecessity };

std::string_view to_string(Direction d) noexcept;

struct VerificationRow {
  std::size_t sample_id = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::kSst;
  Direction direction = Direction::kSufficiency;
  bool passed = false;
  /// Largest lhs/rhs over the rows.
  double measured_constant = 0.0;
  /// Constant assembled from the hypotheses (sufficiency) or recovered from
  /// the assumed constant (necessity).
  double proof_constant = 0.0;
  std::vector<VerificationRow> rows;
  /// Largest relative gap between two independent evaluation paths, when the
  /// check has one.
  std::optional<double> path_deviation;
  std::string note;
};

/// Default slack of every "lhs <= bound * rhs" comparison.
inline constexpr double kVerificationTolerance = 1e-9;

/// Runs ||f||_1 <= C ||f||_2 on every sample with the proof constant:
///   sst, sst-same-young, weak-sst   C1 * C2
///   nakai, weak-nakai               C1 * max(C2, 1)
///   guliyev                         C1 * C2 * max(C3, 1)
///   morrey-power                    C2 (delegates to morrey_power_crosscheck)
/// where C1 is the Young witness, C2 the growth witness and C3 the witness
/// of the inverse relation. Norms use the fixture radii merged with each
/// sample's breakpoints. Throws PreconditionError when a hypothesis fails
/// and the fixture was not built with the override.
VerificationReport verify_sufficiency(const TheoremFixture& fixture,
                                      double tol = kVerificationTolerance);

/// Recovers the growth (or Young) relation from the characteristic-function
/// norms, assuming ||f||_1 <= assumed_c ||f||_2:
///   SST family   psi1(|B|) <= C1 psi2(|B|), C1 = C Psi1^{-1}(1)/Psi2^{-1}(1)
///   Nakai family Phi1(t/C3) <= Phi2(t) at t = Phi2^{-1}(1/phi2(|B|)),
///                C3 = C max(C2, 1) with C2 the witness of phi2 ⪯ phi1
///   guliyev      theta2(|B|^{1/n}) <= C theta1(|B|^{1/n})
/// checked for every ball radius in the fixture grid.
VerificationReport verify_necessity(const TheoremFixture& fixture, double assumed_c,
                                    double tol = kVerificationTolerance);

/// Generalized Morrey inclusion for Psi_i = t^{p_i}. Each global norm is
/// computed twice, through the Luxemburg solver and through exact L^p means
/// of the simple function; both must agree within `tol`.
VerificationReport morrey_power_crosscheck(double p1, double p2, const GrowthFunction& psi1,
                                           const GrowthFunction& psi2, int dimension,
                                           std::span<const SimpleRadialFunction> samples,
                                           std::span<const double> radii,
                                           double tol = kVerificationTolerance);

/// (1/|B|) ∫_B |f|^p, raised to 1/p, for B = B(f.center, r); computed from
/// the annulus radii without the Luxemburg solver.
double power_mean(const SimpleRadialFunction& f, double p, double r);

/// Characteristic functions chi_{B(0, r)} for every r in `radii`, followed by
/// `random_count` seeded simple functions (at most 8 annuli, breakpoints in
/// [2^-4, 2^4], values in [0, 10]) centred at the origin of R^n.
std::vector<SimpleRadialFunction> sample_corpus(std::uint64_t seed, std::size_t random_count,
                                                std::span<const double> radii, int dimension);

/// The stock fixtures used by the verification suite (n = 1, radii 2^-6..2^6).
TheoremFixture reference_fixture(TheoremId theorem, std::uint64_t seed = 0,
                                 std::size_t random_count = 20);

/// Weak SST pair with psi1 = t^0.5, psi2 = t^0.25 (psi1 not ⪯ psi2), built
/// with the hypothesis override. Necessity must fail on wide radius grids.
TheoremFixture contrapositive_fixture(std::uint64_t seed = 0, std::size_t random_count = 20);

}  // namespace omlab
