#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "shocklab/gas_model.hpp"
#include "shocklab/grid_fields.hpp"

namespace shocklab {

/// Everything a simulation needs. Keys of the text format are listed in
/// config_keys(); the bump placement is internal and not configurable.
struct SimConfig {
  GasParams gas;
  double rho_minus = 1.0;
  double delta = 0.1;
  double L = 50.0;
  int n1 = 400;
  int n2 = 16;
  int n3 = 16;
  double k_mean = 0.5;
  double k_amp = 0.2;
  double cfl = 0.4;
  double t_end = 20.0;
  double output_every = 1.0;
  PerturbationSpec pert;

  /// Throws Error(kConfig) naming the offending key.
  void validate() const;
  bool operator==(const SimConfig&) const = default;
};

const std::vector<std::string>& config_keys();

/// Parses `key = value` lines; `#` starts a comment. Unspecified keys keep
/// their defaults, unknown or repeated keys are rejected.
SimConfig parse_config(std::string_view text);

/// Applies a single `key=value` override.
void apply_setting(SimConfig& cfg, std::string_view assignment);

/// Every key with a round-trip exact value.
std::string emit_config(const SimConfig& cfg);

}  // namespace shocklab
