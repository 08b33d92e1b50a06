#include "shocklab/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "shocklab/errors.hpp"
#include "shocklab/parallel.hpp"
#include "shocklab/wave_tracking.hpp"

namespace shocklab {

namespace fs = std::filesystem;

namespace {

// Exact mass of the shifted profile over [0, L].
double profile_mass(const RunSetup& su, double t) {
  const double shift = su.alpha - su.conn.s * t;
  const double J = su.table.mass_flux;
  const double len = su.grid.L;
  const double m = m_bar_integral(su.table, len + shift) - m_bar_integral(su.table, shift);
  return (m - J * len) / su.conn.s;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + p.string());
}

std::string snapshot_name(std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%05zu.bin", k);
  return buf;
}

std::string csv_text(const std::vector<EnergyRecord>& records) {
  std::string out = energy_csv_header() + "\n";
  for (const auto& r : records) out += energy_csv_row(r) + "\n";
  return out;
}

}  // namespace

RunSetup prepare_run(const SimConfig& config) {
  config.validate();
  RunSetup su;
  su.config = config;
  su.conn = solve_hugoniot(config.gas, config.rho_minus, config.delta);
  su.table = build_profile(config.gas, su.conn);
  su.grid = make_grid(config.L, config.n1, config.n2, config.n3);
  su.bc = make_boundary(su.grid, su.conn, config.k_mean, config.k_amp);
  su.shock_width = transition_width(su.table);
  try {
    const ShiftResult sh = solve_shift(config.pert.zero_mass, su.table);
    su.alpha = sh.alpha;
    su.shift_found = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoRoot && e.code() != ErrorCode::kBracketFailure) throw;
    su.alpha = 0.0;
    su.shift_found = false;
    su.unmatched_mass = config.pert.zero_mass;
  }
  // The bump is narrow compared with the shock layer and starts just ahead of
  // the initial shock centre, so it is swept into the layer early in the run.
  su.pert = config.pert;
  su.pert.halfwidth = su.shock_width / 3.0;
  su.pert.center = std::max(-su.alpha, 0.0) + 1.1 * su.pert.halfwidth;
  return su;
}

EnergyRecord diagnose(const RunSetup& su, const State& state) {
  EnergyRecord r = energy_record(state, su.table, su.alpha, su.bc, su.grid);
  State next = state;
  Stepper stepper(su.grid);
  const double dt = stable_dt(state, su.config.gas, su.grid, su.config.cfl);
  stepper.step(next, dt, su.bc, su.config.gas);
  attach_residual(r, antideriv_residual(su.grid, su.table, su.alpha, state, next));
  return r;
}

RunArtifacts run(const SimConfig& config, const RunOptions& opt) {
  const auto clock0 = std::chrono::steady_clock::now();
  const RunSetup su = prepare_run(config);
  const HalfSpaceGrid& grid = su.grid;
  const GasParams& gas = config.gas;

  RunArtifacts art;
  art.alpha = su.alpha;
  art.shift_found = su.shift_found;
  art.unmatched_mass = su.unmatched_mass;
  if (!su.shift_found) {
    art.warnings.push_back("no shift balances the zero-mode mass; using alpha = 0");
  }
  const double front = -su.alpha + su.conn.s * config.t_end;
  // The layer width that matters here is the decay length of the far tail.
  const double far_width = 1.0 / su.table.right_rate;
  if (config.L - front < 10.0 * far_width) {
    std::ostringstream os;
    os << "shock centre reaches x1 = " << front << " by t_end, within 10 far-tail widths ("
       << far_width << ") of the far boundary";
    art.warnings.push_back(os.str());
  }

  const bool write = !opt.out_dir.empty();
  if (write) fs::create_directories(opt.out_dir);

  State state = init_state(grid, su.table, su.alpha, su.pert);
  apply_navier_bc(state, su.bc, grid);

  Stepper stepper(grid);
  const double lyap_scale = config.delta;
  double diss_acc = 0.0;
  double lyap0 = 0.0;
  double diss_prev = weighted_psi_dissipation(state, su.table, su.alpha, grid);
  double zero_mass_prev = total_mass(grid, state.rho) - profile_mass(su, 0.0);
  double flux_budget = 0.0;  // discrete boundary flux budget over the interval

  const long n_out = static_cast<long>(std::ceil(config.t_end / config.output_every - 1e-12));
  auto emit = [&](std::size_t k) {
    if (opt.keep_states) art.states.push_back(state);
    EnergyRecord rec = diagnose(su, state);
    if (k == 0) lyap0 = rec.lyapunov;
    art.lyapunov_audit.push_back(rec.lyapunov + diss_acc);
    art.c_audit = std::max(art.c_audit, (art.lyapunov_audit.back() - lyap0) / lyap_scale);
    if (!(rec.E <= kEnergyThreshold)) art.admissible = false;
    art.records.push_back(rec);
    if (write) {
      const std::string name = snapshot_name(k);
      write_snapshot(opt.out_dir / name, grid, state);
      art.manifest.push_back(name);
    }
  };

  auto finish = [&]() {
    art.wall_clock =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - clock0).count();
    if (!write) return;
    write_text(opt.out_dir / "energy.csv", csv_text(art.records));
    art.manifest.push_back("energy.csv");
    art.manifest.push_back("run.json");
    nlohmann::ordered_json j;
    j["config"] = emit_config(config);
    j["wall_clock_s"] = art.wall_clock;
    j["threads"] = thread_count();
    j["abort_reason"] = art.abort_reason ? nlohmann::json(*art.abort_reason) : nlohmann::json();
    j["alpha"] = art.alpha;
    j["shift_found"] = art.shift_found;
    j["unmatched_mass"] = art.unmatched_mass;
    j["steps"] = art.steps;
    j["mass_audit_max"] = art.mass_audit_max;
    j["zero_mode_balance_max"] = art.zero_mode_balance_max;
    j["c_audit"] = art.c_audit;
    j["admissible"] = art.admissible;
    j["lyapunov_audit"] = art.lyapunov_audit;
    j["warnings"] = art.warnings;
    j["manifest"] = art.manifest;
    write_text(opt.out_dir / "run.json", j.dump(2) + "\n");
  };

  try {
    emit(0);
    for (long k = 1; k <= n_out; ++k) {
      const double t_next = std::min(k * config.output_every, config.t_end);
      while (state.t < t_next) {
        const double rem = t_next - state.t;
        const double dt_max = stable_dt(state, gas, grid, config.cfl);
        const double n = std::ceil(rem / dt_max);
        const double dt = n <= 1.0 ? rem : rem / n;
        StepAudit audit;
        stepper.step(state, dt, su.bc, gas, &audit);
        if (n <= 1.0) state.t = t_next;
        ++art.steps;
        flux_budget += audit.expected_change;
        art.mass_audit_max =
            std::max(art.mass_audit_max, std::abs(audit.mass_after - audit.mass_before -
                                                  audit.expected_change) /
                                             audit.mass_before);
        const double diss = weighted_psi_dissipation(state, su.table, su.alpha, grid);
        diss_acc += 0.5 * dt * (diss_prev + diss);
        diss_prev = diss;
      }
      const double zero_mass = total_mass(grid, state.rho) - profile_mass(su, state.t);
      const double t_prev = std::min((k - 1) * config.output_every, config.t_end);
      const double profile_change = profile_mass(su, state.t) - profile_mass(su, t_prev);
      // d/dt int phi0 = -[psi0]_0^L, split into the discrete flux budget and
      // the exact profile flux.
      const double defect = (zero_mass - zero_mass_prev) - (flux_budget - profile_change);
      art.zero_mode_balance_max = std::max(art.zero_mode_balance_max, std::abs(defect));
      zero_mass_prev = zero_mass;
      flux_budget = 0.0;
      emit(static_cast<std::size_t>(k));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kDensityFloor && e.code() != ErrorCode::kNonFinite) throw;
    art.abort_reason = e.what();
    if (write) {
      write_snapshot(opt.out_dir / "abort.bin", grid, state);
      art.manifest.push_back("abort.bin");
    }
  }
  finish();
  return art;
}

std::string analyze_run(const fs::path& run_dir) {
  std::ifstream in(run_dir / "run.json");
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + (run_dir / "run.json").string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kIo, std::string("malformed run.json: ") + e.what());
  }
  const SimConfig cfg = parse_config(j.at("config").get<std::string>());
  const RunSetup su = prepare_run(cfg);
  std::vector<EnergyRecord> records;
  for (const auto& item : j.at("manifest")) {
    const std::string name = item.get<std::string>();
    if (name.rfind("snap_", 0) != 0) continue;
    Snapshot snap = read_snapshot(run_dir / name);
    if (!(snap.grid == su.grid)) {
      throw Error(ErrorCode::kIo, name + " does not match the configured grid");
    }
    apply_navier_bc(snap.state, su.bc, su.grid);
    records.push_back(diagnose(su, snap.state));
  }
  return csv_text(records);
}

}  // namespace shocklab
