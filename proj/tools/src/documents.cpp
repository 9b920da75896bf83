#include "omlab/cli/documents.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "omlab/grid.hpp"

namespace omlab::cli {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

[[noreturn]] void fail(const Source& src, const std::string& field, const std::string& what) {
  throw DocumentError(src.origin + ": field '" + field + "': " + what);
}

const json& member(const Source& src, const std::string& field) {
  if (!src.doc.is_object()) fail(src, field, "document is not an object");
  auto it = src.doc.find(field);
  if (it == src.doc.end()) fail(src, field, "missing");
  return *it;
}

double number(const Source& src, const std::string& field) {
  const json& v = member(src, field);
  if (!v.is_number()) fail(src, field, "expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const Source& src, const std::string& field) {
  const json& v = member(src, field);
  if (!v.is_array()) fail(src, field, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) fail(src, field, "expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

std::string kind_of(const Source& src) {
  const json& v = member(src, "kind");
  if (!v.is_string()) fail(src, "kind", "expected a string");
  return v.get<std::string>();
}

// Library constructors reject bad parameters with std::invalid_argument or
// std::domain_error; report them against the document.
template <class F>
auto guarded(const Source& src, const std::string& field, F&& make) {
  try {
    return make();
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    fail(src, field, e.what());
  }
}

}  // namespace

Source load_source(const std::string& text, const fs::path& base) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && (text[i] == '{' || text[i] == '[')) {
    try {
      return {json::parse(text), "<inline>", base};
    } catch (const json::parse_error& e) {
      throw DocumentError(std::string("<inline>: ") + e.what());
    }
  }
  fs::path p(text);
  if (p.is_relative()) p = base / p;
  std::ifstream in(p);
  if (!in) throw DocumentError(p.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return {json::parse(buf.str()), p.string(), p.parent_path()};
  } catch (const json::parse_error& e) {
    throw DocumentError(p.string() + ": " + e.what());
  }
}

Source nested(const Source& parent, const json& node, const std::string& field) {
  if (node.is_string()) {
    try {
      return load_source(node.get<std::string>(), parent.base);
    } catch (const DocumentError& e) {
      fail(parent, field, e.what());
    }
  }
  if (!node.is_object()) fail(parent, field, "expected an object or a path");
  return {node, parent.origin + "#" + field, parent.base};
}

YoungFunction parse_young(const Source& src) {
  const std::string kind = kind_of(src);
  if (kind == "power")
    return guarded(src, "p", [&] { return YoungFunction::power(number(src, "p")); });
  if (kind == "power-log")
    return guarded(src, "p", [&] { return YoungFunction::power_log(number(src, "p")); });
  if (kind == "exp-minus-one") return YoungFunction::exp_minus_one();
  if (kind == "ramp")
    return guarded(src, "t0", [&] { return YoungFunction::ramp(number(src, "t0")); });
  if (kind == "sum") {
    auto a = parse_young(nested(src, member(src, "a"), "a"));
    auto b = parse_young(nested(src, member(src, "b"), "b"));
    return YoungFunction::sum(std::move(a), std::move(b));
  }
  if (kind == "arg-scale") {
    auto inner = parse_young(nested(src, member(src, "inner"), "inner"));
    return guarded(src, "c", [&] { return YoungFunction::arg_scale(number(src, "c"), inner); });
  }
  fail(src, "kind", "unknown Young function kind '" + kind + "'");
}

GrowthFunction parse_growth(const Source& src) {
  const std::string kind = kind_of(src);
  if (kind == "power")
    return guarded(src, "a", [&] { return GrowthFunction::power(number(src, "a")); });
  if (kind == "power-capped")
    return guarded(src, "a", [&] { return GrowthFunction::power_capped(number(src, "a")); });
  if (kind == "power-log")
    return guarded(src, "a", [&] { return GrowthFunction::power_log(number(src, "a")); });
  if (kind == "inv-power")
    return guarded(src, "a", [&] { return GrowthFunction::inv_power(number(src, "a")); });
  if (kind == "constant")
    return guarded(src, "c", [&] { return GrowthFunction::constant(number(src, "c")); });
  if (kind == "scale") {
    auto inner = parse_growth(nested(src, member(src, "inner"), "inner"));
    return guarded(src, "k", [&] { return GrowthFunction::scale(number(src, "k"), inner); });
  }
  fail(src, "kind", "unknown growth function kind '" + kind + "'");
}

NamedFunction parse_function(const Source& src) {
  const std::string kind = kind_of(src);
  std::string id = "f";
  if (src.doc.contains("id")) {
    if (!src.doc["id"].is_string()) fail(src, "id", "expected a string");
    id = src.doc["id"].get<std::string>();
  } else if (src.origin != "<inline>" && src.origin.find('#') == std::string::npos) {
    id = fs::path(src.origin).stem().string();
  }
  auto center = numbers(src, "center");
  if (kind == "characteristic") {
    const double r = number(src, "radius");
    return {id, guarded(src, "radius",
                        [&] { return SimpleRadialFunction::characteristic(center, r); })};
  }
  if (kind == "simple-radial") {
    auto bp = numbers(src, "breakpoints");
    auto vals = numbers(src, "values");
    return {id, guarded(src, "breakpoints",
                        [&] { return SimpleRadialFunction(center, bp, vals); })};
  }
  fail(src, "kind", "unknown function kind '" + kind + "'");
}

std::vector<double> parse_radii(const std::string& text) {
  const Source where{json(), "radii", {}};
  try {
    if (text.rfind("pow2:", 0) == 0) {
      const auto a = text.find(':', 5);
      if (a == std::string::npos) throw std::invalid_argument("expected pow2:kmin:kmax");
      std::size_t used = 0;
      const int kmin = std::stoi(text.substr(5, a - 5), &used);
      if (used != a - 5) throw std::invalid_argument("bad kmin");
      const std::string rest = text.substr(a + 1);
      const int kmax = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("bad kmax");
      return pow2_grid(kmin, kmax);
    }
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    }
    require_increasing_positive(out, "radius grid");
    return out;
  } catch (const std::exception& e) {
    throw DocumentError("radius grid '" + text + "': " + e.what());
  }
}

}  // namespace omlab::cli
