#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace omlab::cli {

/// A CSV table plus a JSON summary. Both serialize deterministically.
struct Report {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json summary;
};

/// %.17g; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);
inline std::string format_bool(bool b) { return b ? "true" : "false"; }

/// JSON value for a double: the number itself, or the string form when it is
/// not finite (JSON has no infinities).
nlohmann::ordered_json json_number(double x);

std::string to_csv(const Report& r);
std::string to_json(const Report& r);

}  // namespace omlab::cli
