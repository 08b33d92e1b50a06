#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "shocklab/config.hpp"
#include "shocklab/energy_diag.hpp"
#include "shocklab/errors.hpp"
#include "shocklab/gas_model.hpp"
#include "shocklab/profile.hpp"
#include "shocklab/run.hpp"

namespace fs = std::filesystem;
using namespace shocklab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct ConfigArgs {
  std::string path;
  std::vector<std::string> overrides;
};

void add_config_options(CLI::App* cmd, ConfigArgs& args) {
  cmd->add_option("-c,--config", args.path, "key = value configuration file");
  cmd->add_option("--set", args.overrides, "override a single key, e.g. --set wave.delta=0.05");
}

SimConfig load_config(const ConfigArgs& args) {
  SimConfig cfg;
  if (!args.path.empty()) {
    std::ifstream in(args.path);
    if (!in) throw Error(ErrorCode::kConfig, "cannot open config file " + args.path);
    std::stringstream ss;
    ss << in.rdbuf();
    cfg = parse_config(ss.str());
  }
  for (const auto& o : args.overrides) apply_setting(cfg, o);
  cfg.validate();
  return cfg;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_hugoniot(const ConfigArgs& args) {
  const SimConfig cfg = load_config(args);
  const ShockConnection c = solve_hugoniot(cfg.gas, cfg.rho_minus, cfg.delta);
  const auto res = rh_residuals(cfg.gas, c);
  nlohmann::ordered_json j;
  j["rho_minus"] = c.left.rho;
  j["rho_plus"] = c.right.rho;
  j["u_plus"] = c.right.u1;
  j["s"] = c.s;
  j["delta"] = c.delta;
  j["lax_ok"] = c.lax_ok;
  j["rh_residuals"] = {res[0], res[1]};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_profile(const ConfigArgs& args, const std::string& out) {
  const SimConfig cfg = load_config(args);
  const ShockConnection c = solve_hugoniot(cfg.gas, cfg.rho_minus, cfg.delta);
  const ProfileTable t = build_profile(cfg.gas, c);
  std::ofstream f(out);
  if (!f) throw Error(ErrorCode::kIo, "cannot write " + out);
  f << "xi,rho_bar,u1_bar,u1_prime,u1_second,m_bar,w_bar\n";
  char buf[256];
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t.xi[i],
                  t.rho_bar[i], t.u1_bar[i], t.u1_prime[i], t.u1_second[i], t.m_bar[i],
                  t.w_bar[i]);
    f << buf;
  }
  const ProfileReport r = verify_profile(t);
  std::cerr << "wrote " << t.size() << " rows to " << out << " (width " << r.width
            << ", monotonicity violations " << r.monotonicity_violations << ")\n";
  return kExitOk;
}

int cmd_simulate(const ConfigArgs& args, const std::string& out) {
  const SimConfig cfg = load_config(args);
  RunOptions opt;
  opt.out_dir = out;
  const RunArtifacts a = run(cfg, opt);
  for (const auto& w : a.warnings) std::cerr << "warning: " << w << "\n";
  std::cerr << "steps " << a.steps << ", records " << a.records.size() << ", wall clock "
            << a.wall_clock << " s, alpha " << a.alpha << "\n";
  if (a.abort_reason) {
    std::cerr << "run aborted: " << *a.abort_reason << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_analyze(const std::string& dir, std::string out) {
  if (out.empty()) out = (fs::path(dir) / "energy_analyze.csv").string();
  const std::string text = analyze_run(dir);
  std::ofstream(out, std::ios::binary) << text;
  const fs::path original = fs::path(dir) / "energy.csv";
  if (fs::exists(original)) {
    if (read_file(original) != text) {
      std::cerr << "recomputed diagnostics differ from " << original << "\n";
      return kExitRuntime;
    }
    std::cerr << "recomputed diagnostics match " << original << "\n";
  }
  return kExitOk;
}

int cmd_check(const std::string& out, int samples) {
  InequalityReport rep = inequality_checks(samples);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(rep.to_json());

  // Quick property sweep over the built-in defaults.
  const GasParams gas;
  bool props = true;
  nlohmann::ordered_json p = nlohmann::ordered_json::array();
  for (double delta : {0.05, 0.1, 0.2}) {
    const ShockConnection c = solve_hugoniot(gas, 1.0, delta);
    const auto res = rh_residuals(gas, c);
    const ProfileReport r = verify_profile(build_profile(gas, c));
    const bool ok = c.lax_ok && std::abs(res[0]) <= 1e-12 && std::abs(res[1]) <= 1e-12 &&
                    r.monotonicity_violations == 0;
    props = props && ok;
    p.push_back({{"delta", delta}, {"s", c.s}, {"lax_ok", c.lax_ok},
                 {"monotonicity_violations", r.monotonicity_violations}, {"ok", ok}});
  }
  j["profile_properties"] = p;
  j["pass"] = rep.pass && props;
  std::ofstream(out) << j.dump(2) << "\n";
  std::cout << (rep.pass && props ? "check passed" : "check FAILED") << " (" << out << ")\n";
  return rep.pass && props ? kExitOk : kExitRuntime;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Viscous shock stability lab for 3-D isentropic Navier-Stokes with slip walls"};
  app.require_subcommand(1);

  ConfigArgs hug_args, prof_args, sim_args;
  std::string prof_out = "profile.csv", sim_out = "run", an_dir, an_out,
              check_out = "inequality_report.json";
  int samples = 100;

  auto* hug = app.add_subcommand("hugoniot", "Print the shock connection as JSON");
  add_config_options(hug, hug_args);
  auto* prof = app.add_subcommand("profile", "Tabulate the viscous shock profile");
  add_config_options(prof, prof_args);
  prof->add_option("-o,--out", prof_out, "output CSV");
  auto* sim = app.add_subcommand("simulate", "Run a stability experiment");
  add_config_options(sim, sim_args);
  sim->add_option("-o,--out", sim_out, "run directory");
  auto* an = app.add_subcommand("analyze", "Recompute energy.csv from a run's snapshots");
  an->add_option("run_dir", an_dir, "run directory")->required();
  an->add_option("-o,--out", an_out, "output CSV (default RUN_DIR/energy_analyze.csv)");
  auto* chk = app.add_subcommand("check", "Run the inequality and property suite");
  chk->add_option("-o,--out", check_out, "report path");
  chk->add_option("--samples", samples, "random samples")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*hug) return cmd_hugoniot(hug_args);
    if (*prof) return cmd_profile(prof_args, prof_out);
    if (*sim) return cmd_simulate(sim_args, sim_out);
    if (*an) return cmd_analyze(an_dir, an_out);
    if (*chk) return cmd_check(check_out, samples);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kConfig ? kExitUsage : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
