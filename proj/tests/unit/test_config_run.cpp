#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "shocklab/config.hpp"
#include "shocklab/errors.hpp"
#include "shocklab/run.hpp"

using namespace shocklab;
namespace fs = std::filesystem;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kDomain;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SimConfig small_config() {
  SimConfig c;
  c.n1 = 200;
  c.n2 = 4;
  c.n3 = 4;
  c.t_end = 1.0;
  c.output_every = 0.4;
  return c;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("shocklab_test_" + name);
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST(Config, DefaultsAndComments) {
  const SimConfig c = parse_config("# nothing but a comment\n\n   \n");
  EXPECT_EQ(c, SimConfig{});
  EXPECT_EQ(c.gas.a, 1.0);
  EXPECT_EQ(c.gas.gamma, 2.0);
  EXPECT_EQ(c.gas.mu, 0.1);
  EXPECT_EQ(c.gas.lambda, 0.0);
  EXPECT_EQ(c.rho_minus, 1.0);
  EXPECT_EQ(c.delta, 0.1);
  EXPECT_EQ(c.L, 50.0);
  EXPECT_EQ(c.n1, 400);
  EXPECT_EQ(c.pert.zero_mass, -0.02);
  EXPECT_EQ(c.pert.transverse_amp, 1e-2);

  const SimConfig d = parse_config("wave.delta = 0.05  # weaker shock\ngrid.N2=8\n");
  EXPECT_EQ(d.delta, 0.05);
  EXPECT_EQ(d.n2, 8);
}

TEST(Config, KeysAreComplete) {
  const std::set<std::string> expected{
      "gas.a",      "gas.gamma",   "visc.mu",        "visc.lambda",        "wave.rho_minus",
      "wave.delta", "grid.L",      "grid.N1",        "grid.N2",            "grid.N3",
      "bc.k_mean",  "bc.k_amp",    "run.cfl",        "run.t_end",          "run.output_every",
      "pert.zero_mass", "pert.transverse_amp", "pert.seed"};
  const auto& keys = config_keys();
  EXPECT_EQ(std::set<std::string>(keys.begin(), keys.end()), expected);
}

TEST(Config, Rejections) {
  EXPECT_EQ(code_of([] { parse_config("gas.gamma = 0.9"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("visc.mu = 0.1\nvisc.lambda = -0.2"); }),
            ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("grid.N4 = 3"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("wave.delta = 0.1\nwave.delta = 0.2"); }),
            ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("wave.delta ="); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("wave.delta = abc"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("grid.N1 = 12.5"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("run.cfl = 1.5"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("run.t_end = 0"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([] { parse_config("just words"); }), ErrorCode::kConfig);
  try {
    parse_config("gas.gamma = 0.9");
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("gamma"), std::string::npos);
  }
}

TEST(Config, RoundTripRandomConfigs) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int n = 0; n < 200; ++n) {
    SimConfig c;
    c.gas.a = 0.1 + 3.0 * U(rng);
    c.gas.gamma = 1.0 + 1e-3 + 2.0 * U(rng);
    c.gas.mu = 1e-3 + U(rng);
    c.gas.lambda = -c.gas.mu * U(rng);
    c.delta = 0.01 + 0.3 * U(rng);
    c.L = 10.0 + 100.0 * U(rng);
    c.n1 = 8 + static_cast<int>(1000 * U(rng));
    c.n2 = 1 + static_cast<int>(30 * U(rng));
    c.k_mean = 0.3 + U(rng);
    c.k_amp = 0.25 * U(rng);
    c.cfl = 0.05 + 0.9 * U(rng);
    c.t_end = 0.1 + 30.0 * U(rng);
    c.output_every = 0.01 + U(rng);
    c.pert.zero_mass = -0.1 * U(rng);
    c.pert.transverse_amp = 0.05 * U(rng);
    c.pert.seed = rng();
    const SimConfig back = parse_config(emit_config(c));
    EXPECT_EQ(back, c);
  }
}

TEST(Config, ApplySetting) {
  SimConfig c;
  apply_setting(c, "run.t_end=3.5");
  EXPECT_EQ(c.t_end, 3.5);
  apply_setting(c, " pert.seed = 99 ");
  EXPECT_EQ(c.pert.seed, 99u);
  EXPECT_EQ(code_of([&] { apply_setting(c, "run.t_end"); }), ErrorCode::kConfig);
  EXPECT_EQ(code_of([&] { apply_setting(c, "nope=1"); }), ErrorCode::kConfig);
}

TEST(Run, OutputsRecordsAndAnalyzeMatches) {
  const fs::path dir = scratch("run");
  const SimConfig c = small_config();
  const RunArtifacts a = run(c, {dir, false});
  ASSERT_FALSE(a.abort_reason.has_value());
  EXPECT_TRUE(a.shift_found);
  EXPECT_EQ(a.records.size(), static_cast<std::size_t>(std::ceil(1.0 / 0.4)) + 1);
  EXPECT_EQ(a.records.back().t, 1.0);
  EXPECT_LE(a.mass_audit_max, 1e-12);
  EXPECT_LE(a.zero_mode_balance_max, 1e-8);
  EXPECT_TRUE(a.admissible);
  for (const auto& r : a.records) {
    EXPECT_TRUE(std::isfinite(r.E));
    EXPECT_LE(r.poincare_ratio, 1.0 + 1e-12);
    EXPECT_GE(r.rel_entropy, 0.0);
  }

  std::set<std::string> on_disk;
  for (const auto& e : fs::directory_iterator(dir)) on_disk.insert(e.path().filename().string());
  EXPECT_EQ(on_disk, std::set<std::string>(a.manifest.begin(), a.manifest.end()));

  const auto meta = nlohmann::json::parse(slurp(dir / "run.json"));
  EXPECT_EQ(parse_config(meta.at("config").get<std::string>()), c);
  EXPECT_TRUE(meta.at("abort_reason").is_null());

  const std::string csv = slurp(dir / "energy.csv");
  EXPECT_EQ(analyze_run(dir), csv);
  EXPECT_EQ(analyze_run(dir), csv);
  fs::remove_all(dir);
}

TEST(Run, Deterministic) {
  SimConfig c = small_config();
  c.t_end = 0.5;
  c.output_every = 0.25;
  const auto a = run(c);
  const auto b = run(c);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(energy_csv_row(a.records[k]), energy_csv_row(b.records[k]));
  }
}

TEST(Run, NonNegativeMassFallsBackToZeroShift) {
  SimConfig c = small_config();
  c.t_end = 0.2;
  c.output_every = 0.2;
  c.pert.zero_mass = 0.01;
  const auto a = run(c);
  EXPECT_FALSE(a.shift_found);
  EXPECT_EQ(a.alpha, 0.0);
  EXPECT_EQ(a.unmatched_mass, 0.01);
  ASSERT_FALSE(a.warnings.empty());
}

TEST(Run, FarBoundaryWarning) {
  SimConfig c = small_config();
  c.L = 10.0;
  c.n1 = 80;
  c.t_end = 0.2;
  c.output_every = 0.2;
  const auto a = run(c);
  bool found = false;
  for (const auto& w : a.warnings) found |= w.find("far boundary") != std::string::npos;
  EXPECT_TRUE(found);
}

TEST(Run, RejectsInvalidConfig) {
  SimConfig c = small_config();
  c.cfl = 0.0;
  EXPECT_EQ(code_of([&] { run(c); }), ErrorCode::kConfig);
}
