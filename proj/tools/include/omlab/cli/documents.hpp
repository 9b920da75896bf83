#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "omlab/geometry.hpp"
#include "omlab/growth.hpp"
#include "omlab/young.hpp"

namespace omlab::cli {

/// Malformed or invalid input document. what() names the file (or
/// "<inline>") and the offending field or parse position.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A function document with the id used in reports.
struct NamedFunction {
  std::string id;
  SimpleRadialFunction function;
};

/// Reads a document given either as inline JSON (first non-blank character
/// '{' or '[') or as a path. Relative paths resolve against `base`.
struct Source {
  nlohmann::json doc;
  std::string origin;          // file path or "<inline>"
  std::filesystem::path base;  // directory for nested references
};
Source load_source(const std::string& text_or_path,
                   const std::filesystem::path& base = std::filesystem::current_path());

// Documents use a "kind" discriminator. Nested documents (sum, arg-scale,
// scale, fixture members) may be objects or paths relative to the enclosing
// file.
//
//   young:    power {p}, power-log {p}, exp-minus-one, ramp {t0},
//             sum {a, b}, arg-scale {c, inner}
//   growth:   power {a}, power-capped {a}, power-log {a}, constant {c},
//             scale {k, inner}, inv-power {a}
//   function: simple-radial {center, breakpoints, values, id?},
//             characteristic {center, radius, id?}
YoungFunction parse_young(const Source& src);
GrowthFunction parse_growth(const Source& src);
NamedFunction parse_function(const Source& src);

/// Subdocument `node` found at `field` inside `parent`.
Source nested(const Source& parent, const nlohmann::json& node, const std::string& field);

/// "a,b,c" or "pow2:kmin:kmax". Throws DocumentError.
std::vector<double> parse_radii(const std::string& text);

}  // namespace omlab::cli
