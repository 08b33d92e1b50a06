#include "shocklab/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "shocklab/errors.hpp"

namespace shocklab {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::string_view key, const std::string& why) {
  throw Error(ErrorCode::kConfig, std::string(key) + ": " + why);
}

double to_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out)) {
    fail(key, "expected a finite number, got '" + std::string(v) + "'");
  }
  return out;
}

template <class Int>
Int to_int(std::string_view key, std::string_view v) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    fail(key, "expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Key {
  std::function<void(SimConfig&, std::string_view, std::string_view)> set;
  std::function<std::string(const SimConfig&)> get;
};

template <class M>
Key real(M member) {
  return {[member](SimConfig& c, std::string_view k, std::string_view v) {
            member(c) = to_double(k, v);
          },
          [member](const SimConfig& c) { return fmt(member(const_cast<SimConfig&>(c))); }};
}

const std::map<std::string, Key, std::less<>>& table() {
  static const std::map<std::string, Key, std::less<>> keys = [] {
    std::map<std::string, Key, std::less<>> m;
    m["gas.a"] = real([](SimConfig& c) -> double& { return c.gas.a; });
    m["gas.gamma"] = real([](SimConfig& c) -> double& { return c.gas.gamma; });
    m["visc.mu"] = real([](SimConfig& c) -> double& { return c.gas.mu; });
    m["visc.lambda"] = real([](SimConfig& c) -> double& { return c.gas.lambda; });
    m["wave.rho_minus"] = real([](SimConfig& c) -> double& { return c.rho_minus; });
    m["wave.delta"] = real([](SimConfig& c) -> double& { return c.delta; });
    m["grid.L"] = real([](SimConfig& c) -> double& { return c.L; });
    m["grid.N1"] = {[](SimConfig& c, auto k, auto v) { c.n1 = to_int<int>(k, v); },
                    [](const SimConfig& c) { return std::to_string(c.n1); }};
    m["grid.N2"] = {[](SimConfig& c, auto k, auto v) { c.n2 = to_int<int>(k, v); },
                    [](const SimConfig& c) { return std::to_string(c.n2); }};
    m["grid.N3"] = {[](SimConfig& c, auto k, auto v) { c.n3 = to_int<int>(k, v); },
                    [](const SimConfig& c) { return std::to_string(c.n3); }};
    m["bc.k_mean"] = real([](SimConfig& c) -> double& { return c.k_mean; });
    m["bc.k_amp"] = real([](SimConfig& c) -> double& { return c.k_amp; });
    m["run.cfl"] = real([](SimConfig& c) -> double& { return c.cfl; });
    m["run.t_end"] = real([](SimConfig& c) -> double& { return c.t_end; });
    m["run.output_every"] = real([](SimConfig& c) -> double& { return c.output_every; });
    m["pert.zero_mass"] = real([](SimConfig& c) -> double& { return c.pert.zero_mass; });
    m["pert.transverse_amp"] =
        real([](SimConfig& c) -> double& { return c.pert.transverse_amp; });
    m["pert.seed"] = {
        [](SimConfig& c, auto k, auto v) { c.pert.seed = to_int<std::uint64_t>(k, v); },
        [](const SimConfig& c) { return std::to_string(c.pert.seed); }};
    return m;
  }();
  return keys;
}

void set_key(SimConfig& cfg, std::string_view key, std::string_view value) {
  const auto it = table().find(key);
  if (it == table().end()) fail(key, "unknown key");
  if (value.empty()) fail(key, "missing value");
  it->second.set(cfg, key, value);
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "gas.a",     "gas.gamma",  "visc.mu",          "visc.lambda",    "wave.rho_minus",
      "wave.delta", "grid.L",    "grid.N1",          "grid.N2",        "grid.N3",
      "bc.k_mean", "bc.k_amp",   "run.cfl",          "run.t_end",      "run.output_every",
      "pert.zero_mass", "pert.transverse_amp", "pert.seed"};
  return keys;
}

void SimConfig::validate() const {
  if (!(gas.a > 0.0)) fail("gas.a", "must be positive");
  if (!(gas.gamma > 1.0)) fail("gas.gamma", "must exceed 1");
  if (!(gas.mu > 0.0)) fail("visc.mu", "must be positive");
  if (!(gas.mu + gas.lambda >= 0.0)) fail("visc.lambda", "mu + lambda must be non-negative");
  if (!(rho_minus > 0.0)) fail("wave.rho_minus", "must be positive");
  if (!(delta > 0.0 && delta < rho_minus)) fail("wave.delta", "must lie in (0, rho_minus)");
  if (!(L > 0.0)) fail("grid.L", "must be positive");
  if (n1 < 8) fail("grid.N1", "must be at least 8");
  if (n2 < 1) fail("grid.N2", "must be at least 1");
  if (n3 < 1) fail("grid.N3", "must be at least 1");
  if (!(k_mean > std::abs(k_amp))) fail("bc.k_mean", "must exceed |bc.k_amp|");
  if (!(cfl > 0.0 && cfl <= 1.0)) fail("run.cfl", "must lie in (0, 1]");
  if (!(t_end > 0.0)) fail("run.t_end", "must be positive");
  if (!(output_every > 0.0)) fail("run.output_every", "must be positive");
  if (!(pert.transverse_amp >= 0.0)) fail("pert.transverse_amp", "must be non-negative");
}

SimConfig parse_config(std::string_view text) {
  SimConfig cfg;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kConfig,
                  "line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (!seen.insert(std::string(key)).second) fail(key, "given more than once");
    set_key(cfg, key, trim(line.substr(eq + 1)));
  }
  cfg.validate();
  return cfg;
}

void apply_setting(SimConfig& cfg, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw Error(ErrorCode::kConfig, "override '" + std::string(assignment) + "' lacks '='");
  }
  set_key(cfg, trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::string emit_config(const SimConfig& cfg) {
  std::string out;
  for (const auto& k : config_keys()) out += k + " = " + table().at(k).get(cfg) + "\n";
  return out;
}

}  // namespace shocklab
