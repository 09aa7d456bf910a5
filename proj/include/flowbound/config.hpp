#ifndef FLOWBOUND_CONFIG_HPP_
#define FLOWBOUND_CONFIG_HPP_

#include <stdexcept>
#include <string>

#include "flowbound/geometry.hpp"
#include "flowbound/inflow.hpp"

namespace flowbound::config {

// Raised with `path:line: message` diagnostics.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InflowConfig {
  std::string type;  // "analytic" | "sampled"
  double amplitude = 0.0;
  std::string grid_file;
  double compat_tol = inflow::kDefaultCompatTol;
};

struct SweepConfig {
  bool present = false;
  std::string parameter;  // amplitude | viscosity | obstacle.volume | box.a
  double lo = 0.0;
  double hi = 0.0;
  int steps = 0;
};

struct RunConfig {
  geometry::ChannelGeometry geom;
  bool has_geometry = false;
  double viscosity = 0.0;
  bool has_fluid = false;
  InflowConfig inflow;
  bool has_inflow = false;
  SweepConfig sweep;
  std::string output_path;
  std::string output_format;  // "json" | "csv" | ""
};

// Flat `key = value` file with dotted keys and `#` comments.  Unknown or
// duplicate keys and malformed numbers are ConfigErrors carrying the line.
RunConfig parse_config_file(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& path_label);

// Builds the inflow datum from the config (reading the grid file for
// sampled inflow) and validates cross-field invariants for the requested
// command.
inflow::InflowDatum make_inflow_datum(const RunConfig& cfg);

}  // namespace flowbound::config

#endif  // FLOWBOUND_CONFIG_HPP_
