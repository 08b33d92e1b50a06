#include "shocklab/gas_model.hpp"

#include <cmath>
#include <sstream>

#include "shocklab/errors.hpp"

namespace shocklab {

void GasParams::validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::kConfig, msg); };
  if (!(a > 0.0)) fail("gas.a must be > 0");
  if (!(gamma > 1.0)) fail("gas.gamma must satisfy gamma > 1");
  if (!(mu > 0.0)) fail("visc.mu must be > 0");
  if (!(mu + lambda >= 0.0)) fail("visc.mu + visc.lambda must be >= 0");
}

namespace {

void require_positive_density(double rho) {
  if (!(rho > 0.0)) {
    std::ostringstream os;
    os << "density must be positive, got " << rho;
    throw Error(ErrorCode::kDomain, os.str());
  }
}

}  // namespace

double pressure(const GasParams& gas, double rho) {
  require_positive_density(rho);
  if (gas.gamma == 2.0) return gas.a * rho * rho;
  return gas.a * std::pow(rho, gas.gamma);
}

double sound_speed_sq(const GasParams& gas, double rho) {
  require_positive_density(rho);
  if (gas.gamma == 2.0) return 2.0 * gas.a * rho;
  return gas.a * gas.gamma * std::pow(rho, gas.gamma - 1.0);
}

double pressure_second_derivative(const GasParams& gas, double rho) {
  require_positive_density(rho);
  return gas.a * gas.gamma * (gas.gamma - 1.0) * std::pow(rho, gas.gamma - 2.0);
}

CharSpeeds char_speeds(const GasParams& gas, double rho, double u1) {
  const double c = std::sqrt(sound_speed_sq(gas, rho));
  return {u1 - c, u1 + c};
}

std::array<double, 2> rh_residuals(const GasParams& gas, const ShockConnection& conn) {
  const double rm = conn.left.rho;
  const double rp = conn.right.rho;
  const double mm = rm * conn.left.u1;
  const double mp = rp * conn.right.u1;
  const double mass = -conn.s * (rp - rm) + mp - mm;
  const double momentum = -conn.s * (mp - mm) + mp * mp / rp - mm * mm / rm +
                          pressure(gas, rp) - pressure(gas, rm);
  return {mass, momentum};
}

LaxReport check_lax(const GasParams& gas, const ShockConnection& conn) {
  LaxReport r;
  const CharSpeeds right = char_speeds(gas, conn.right.rho, conn.right.u1);
  const CharSpeeds left = char_speeds(gas, conn.left.rho, conn.left.u1);
  r.lambda2_right = right.lambda2;
  r.lambda2_left = left.lambda2;
  r.margin_right = conn.s - right.lambda2;
  r.margin_left = left.lambda2 - conn.s;
  r.s_minus_lambda1_left = conn.s - left.lambda1;
  r.degenerate = conn.left.rho == conn.right.rho;
  r.ok = !r.degenerate && r.margin_right > 0.0 && r.margin_left > 0.0;
  return r;
}

namespace {

void validate_strength(double rho_minus, double delta) {
  require_positive_density(rho_minus);
  if (!(delta > 0.0) || !(delta < rho_minus)) {
    std::ostringstream os;
    os << "strength must satisfy 0 < delta < rho_minus (delta=" << delta
       << ", rho_minus=" << rho_minus << ")";
    throw Error(ErrorCode::kInvalidStrength, os.str());
  }
}

ShockConnection make_connection(double rho_minus, double rho_plus, double s) {
  ShockConnection c;
  c.left = {rho_minus, 0.0};
  c.right = {rho_plus, s * (rho_plus - rho_minus) / rho_plus};
  c.s = s;
  c.delta = std::abs(rho_plus - rho_minus);
  return c;
}

}  // namespace

ShockConnection solve_hugoniot(const GasParams& gas, double rho_minus, double delta) {
  validate_strength(rho_minus, delta);
  const double rho_plus = rho_minus - delta;
  const double dp = pressure(gas, rho_minus) - pressure(gas, rho_plus);
  const double s_abs = std::sqrt(rho_plus * dp / (rho_minus * (rho_minus - rho_plus)));
  for (const double s : {s_abs, -s_abs}) {
    ShockConnection c = make_connection(rho_minus, rho_plus, s);
    if (check_lax(gas, c).ok) {
      c.lax_ok = true;
      return c;
    }
  }
  throw Error(ErrorCode::kNoAdmissibleRoot,
              "neither sign of the shock speed satisfies the Lax inequalities");
}

ShockConnection solve_hugoniot_bisection(const GasParams& gas, double rho_minus, double delta) {
  validate_strength(rho_minus, delta);
  const double rho_plus = rho_minus - delta;
  // With m- = 0 and m+ = s (rho+ - rho-) the mass equation holds identically;
  // only the momentum residual depends on s, and it is monotone in s^2.
  auto momentum = [&](double s) {
    return rh_residuals(gas, make_connection(rho_minus, rho_plus, s))[1];
  };
  // Admissible speeds lie between lambda2(rho+,u+) and lambda2(rho-,0); the
  // upper bound is sqrt(p'(rho-)), the lower bound is positive for weak shocks.
  double lo = 0.0;
  double hi = 2.0 * std::sqrt(sound_speed_sq(gas, rho_minus)) + 1.0;
  double flo = momentum(lo);
  const double fhi = momentum(hi);
  if (flo * fhi > 0.0) {
    throw Error(ErrorCode::kNoAdmissibleRoot, "momentum residual does not change sign on s > 0");
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = momentum(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  ShockConnection c = make_connection(rho_minus, rho_plus, 0.5 * (lo + hi));
  c.lax_ok = check_lax(gas, c).ok;
  if (!c.lax_ok) {
    throw Error(ErrorCode::kNoAdmissibleRoot, "bisection root violates the Lax inequalities");
  }
  return c;
}

}  // namespace shocklab
