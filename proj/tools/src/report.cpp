#include "omlab/cli/report.hpp"

#include <cmath>
#include <cstdio>

namespace omlab::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

nlohmann::ordered_json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

namespace {

std::string quoted(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void append_line(std::string& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += quoted(cells[i]);
  }
  out += '\n';
}

}  // namespace

std::string to_csv(const Report& r) {
  std::string out;
  append_line(out, r.header);
  for (const auto& row : r.rows) append_line(out, row);
  return out;
}

std::string to_json(const Report& r) { return r.summary.dump(2) + "\n"; }

}  // namespace omlab::cli
