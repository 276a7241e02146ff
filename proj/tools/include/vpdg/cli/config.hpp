#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "vpdg/basis.hpp"
#include "vpdg/scenarios.hpp"

namespace vpdg::cli {

/// Parse or validation failure; `line` is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

/// Fully resolved run description. Every field is explicit after parsing.
struct RunConfig {
  // [scenario]
  std::string scenario;
  double amplitude = 0.0;
  double k = 0.5;
  std::optional<double> drive_amplitude;  ///< driven scenarios only
  std::optional<double> drive_omega;
  // [mesh]
  int nx = 40;
  int nv = 40;
  double vc = 5.0;
  double length = 0.0;
  // [basis]
  Family family = Family::TensorQ;
  int degree = 2;
  // [time]
  double cfl = 0.3;
  double t_end = 0.0;
  double diag_every = 0.05;
  std::vector<double> snapshot_times;
  // [limiter]
  bool limiter = false;
  // [output]
  std::string output_dir = "output";
  // [run]
  int threads = 0;  ///< 0: OpenMP default

  bool operator==(const RunConfig&) const = default;
};

/// INI text: `[section]` headers, `key = value` lines, `#` or `;` comments.
RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

/// Canonical INI form; parse_config(to_ini(c)) == c.
std::string to_ini(const RunConfig& c);

nlohmann::ordered_json to_json(const RunConfig& c);
RunConfig from_json(const nlohmann::json& j);

/// Scenario with the configuration's overrides applied.
Scenario resolve_scenario(const RunConfig& c);

}  // namespace vpdg::cli
