#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "omlab/cli/report.hpp"
#include "omlab/inclusion.hpp"

namespace omlab::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInput = 2;

struct RunConfig {
  /// eval, inverse, norm, char-norm, check-relation or verify.
  std::string command;
  std::string space;
  std::string young;
  std::string growth;
  std::string function;
  std::string fixture;
  std::string kind;  // check-relation: young | growth
  std::string lhs;
  std::string rhs;
  std::string theorem;
  std::string direction = "sufficiency";  // verify: sufficiency | necessity | round-trip
  std::optional<std::string> radii;
  std::vector<double> at;
  std::optional<double> assumed_c;
  std::optional<double> r0;
  int dimension = 1;
  std::uint64_t seed = 0;
  std::size_t random_samples = 20;
  double tol = kVerificationTolerance;
  bool override_hypotheses = false;
  bool builtin = false;
  std::string out;  // stem; writes <out>.csv and <out>.json
  std::string format = "csv";
};

/// Parses argv. Returns an exit status when the process should stop
/// (help, version or a usage error); diagnostics go to `err`.
std::optional<int> parse_args(int argc, const char* const* argv, RunConfig& config,
                              std::ostream& out, std::ostream& err);

/// Radius grid from --radii, else OMLAB_DEFAULT_GRID, else 2^-6..2^6.
std::vector<double> resolve_radii(const std::optional<std::string>& flag);

/// Runs the command and builds its report. Throws DocumentError,
/// PreconditionError or std::exception on bad input.
Report execute(const RunConfig& config, int& status);

/// execute() plus output: files when config.out is set, otherwise `out` in
/// config.format. Errors are printed to `err` and mapped to exit status 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace omlab::cli
