// JSON run configuration for the command-line tool.
//
//   {
//     "source_profile": "gaussian" | "rect",          (required)
//     "xi": 1.0, "L": 2.25, "epsilon": 0.02,
//     "detector": {"type": "point_pair"}
//               | {"type": "finite_width", "nodes_per_axis": 32, "rule": "gauss_legendre"},
//     "grid": {"x_min": -10, "x_max": 10, "points": 4001},
//     "statistics": ["boson", "fermion"],
//     "window": [-8, 8],                                (average)
//     "probe": {"x_regular": 0.5, "x_zero": 2.25}       (convergence)
//   }
//
// Omitted keys take the defaults of the chosen profile. Unknown keys are
// rejected at every level.

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bunching/scan.hpp"
#include "json.hpp"

namespace bunching {

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ExperimentConfig experiment;
  std::optional<Interval> window;
  double x_regular = 0.5;
  std::optional<double> x_zero;
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
  }
}

inline double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "must be a number");
  return v.get<double>();
}

inline int integer(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ConfigError(field, "must be an integer");
  const auto i = v.get<long long>();
  if (i < -2147483647LL || i > 2147483647LL) throw ConfigError(field, "out of range");
  return static_cast<int>(i);
}

inline std::string string(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field, "must be a string");
  return v.get<std::string>();
}

inline Statistics parse_statistics(const std::string& s, const std::string& field) {
  if (s == "boson") return Statistics::boson;
  if (s == "fermion") return Statistics::fermion;
  if (s == "distinguishable") return Statistics::distinguishable;
  throw ConfigError(field, "unknown statistics '" + s + "'");
}

}  // namespace detail

inline RunConfig parse_run_config(const nlohmann::json& doc) {
  using detail::integer;
  using detail::number;
  using detail::string;
  if (!doc.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  detail::reject_unknown(doc, "",
                         {"source_profile", "xi", "L", "epsilon", "detector", "grid", "statistics", "window", "probe"});

  if (!doc.contains("source_profile")) throw ConfigError("source_profile", "required");
  const auto profile = string(doc["source_profile"], "source_profile");
  RunConfig rc;
  if (profile == "gaussian") {
    rc.experiment = default_experiment(SourceProfile::gaussian);
  } else if (profile == "rect") {
    rc.experiment = default_experiment(SourceProfile::rect);
  } else {
    throw ConfigError("source_profile", "must be \"gaussian\" or \"rect\"");
  }
  auto& e = rc.experiment;

  if (doc.contains("xi")) e.xi = number(doc["xi"], "xi");
  if (doc.contains("L")) e.L = number(doc["L"], "L");
  if (doc.contains("epsilon")) e.epsilon = number(doc["epsilon"], "epsilon");

  if (doc.contains("detector")) {
    const auto& d = doc["detector"];
    if (!d.is_object()) throw ConfigError("detector", "must be an object");
    detail::reject_unknown(d, "detector", {"type", "nodes_per_axis", "rule"});
    const auto type = d.contains("type") ? string(d["type"], "detector.type") : std::string("point_pair");
    if (type == "point_pair") {
      if (d.contains("nodes_per_axis") || d.contains("rule"))
        throw ConfigError("detector", "quadrature keys only apply to finite_width");
      e.detector = PointPair{};
    } else if (type == "finite_width") {
      FiniteWidth fw;
      if (d.contains("nodes_per_axis")) fw.quad.nodes_per_axis = integer(d["nodes_per_axis"], "detector.nodes_per_axis");
      if (d.contains("rule") && string(d["rule"], "detector.rule") != "gauss_legendre")
        throw ConfigError("detector.rule", "only \"gauss_legendre\" is supported");
      e.detector = fw;
    } else {
      throw ConfigError("detector.type", "must be \"point_pair\" or \"finite_width\"");
    }
  }

  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (!g.is_object()) throw ConfigError("grid", "must be an object");
    detail::reject_unknown(g, "grid", {"x_min", "x_max", "points"});
    if (g.contains("x_min")) e.grid.x_min = number(g["x_min"], "grid.x_min");
    if (g.contains("x_max")) e.grid.x_max = number(g["x_max"], "grid.x_max");
    if (g.contains("points")) e.grid.points = integer(g["points"], "grid.points");
  }

  if (doc.contains("statistics")) {
    const auto& s = doc["statistics"];
    if (!s.is_array() || s.empty()) throw ConfigError("statistics", "must be a non-empty array");
    e.statistics.clear();
    for (const auto& item : s) {
      const auto st = detail::parse_statistics(string(item, "statistics"), "statistics");
      if (!e.wants(st)) e.statistics.push_back(st);
    }
  }

  if (doc.contains("window")) {
    const auto& w = doc["window"];
    if (!w.is_array() || w.size() != 2) throw ConfigError("window", "must be [lo, hi]");
    const Interval iv{number(w[0], "window"), number(w[1], "window")};
    if (!(iv.lo < iv.hi)) throw ConfigError("window", "lo must be below hi");
    rc.window = iv;
  }

  if (doc.contains("probe")) {
    const auto& p = doc["probe"];
    if (!p.is_object()) throw ConfigError("probe", "must be an object");
    detail::reject_unknown(p, "probe", {"x_regular", "x_zero"});
    if (p.contains("x_regular")) rc.x_regular = number(p["x_regular"], "probe.x_regular");
    if (p.contains("x_zero")) rc.x_zero = number(p["x_zero"], "probe.x_zero");
  }

  e.validate();
  return rc;
}

inline RunConfig parse_run_config_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + ex.what());
  }
  return parse_run_config(doc);
}

inline RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_run_config_text(ss.str());
}

}  // namespace bunching
