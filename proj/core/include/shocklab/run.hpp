#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shocklab/config.hpp"
#include "shocklab/energy_diag.hpp"
#include "shocklab/profile.hpp"
#include "shocklab/solver3d.hpp"

namespace shocklab {

/// Admissibility threshold on E(t) for accepted runs.
inline constexpr double kEnergyThreshold = 1.0;

/// Derived objects shared by `simulate` and `analyze`.
struct RunSetup {
  SimConfig config;
  ShockConnection conn;
  ProfileTable table;
  HalfSpaceGrid grid;
  BoundarySpec bc;
  PerturbationSpec pert;  ///< with the bump placement filled in
  double alpha = 0.0;
  bool shift_found = false;
  /// Zero-mode mass left unbalanced when no shift exists.
  double unmatched_mass = 0.0;
  double shock_width = 0.0;
};

RunSetup prepare_run(const SimConfig& config);

/// Energy record of a state together with the anti-derivative residual over
/// one stable step taken from it. Pure function of (setup, state).
EnergyRecord diagnose(const RunSetup& setup, const State& state);

struct RunOptions {
  /// Run directory; empty means nothing is written.
  std::filesystem::path out_dir;
  /// Keep a copy of the state at every output time.
  bool keep_states = false;
};

struct RunArtifacts {
  std::vector<EnergyRecord> records;
  std::vector<State> states;
  std::vector<std::string> manifest;
  std::vector<std::string> warnings;
  std::optional<std::string> abort_reason;
  double alpha = 0.0;
  bool shift_found = false;
  double unmatched_mass = 0.0;
  long steps = 0;
  double wall_clock = 0.0;
  /// Largest per-step |mass change - boundary flux budget| / mass.
  double mass_audit_max = 0.0;
  /// Largest per-interval defect of the zero-mode mass balance.
  double zero_mode_balance_max = 0.0;
  /// Lyapunov audit: lyapunov(t) + int_0^t diss_psi_weighted at each output.
  std::vector<double> lyapunov_audit;
  /// max(0, max_t [audit(t) - lyapunov(0)]) / delta
  double c_audit = 0.0;
  /// E stayed below kEnergyThreshold at every output.
  bool admissible = true;
};

/// Executes init, time stepping and diagnostics. Runtime aborts (density
/// window, non-finite values) are reported through abort_reason after the
/// state is dumped; configuration problems throw.
RunArtifacts run(const SimConfig& config, const RunOptions& options = {});

/// Recomputes energy.csv content from the snapshots listed in a run
/// directory's run.json.
std::string analyze_run(const std::filesystem::path& run_dir);

}  // namespace shocklab
