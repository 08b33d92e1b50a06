#pragma once

#include <array>

namespace shocklab {

/// Isentropic gamma-law gas p = a rho^gamma with constant viscosities.
struct GasParams {
  double a = 1.0;
  double gamma = 2.0;
  double mu = 0.1;
  double lambda = 0.0;

  /// Effective one-dimensional viscosity 2 mu + lambda.
  double mu_tilde() const noexcept { return 2.0 * mu + lambda; }

  /// Throws Error(kConfig) unless a > 0, gamma > 1, mu > 0, mu + lambda >= 0.
  void validate() const;

  bool operator==(const GasParams&) const = default;
};

struct ConstState {
  double rho = 1.0;
  double u1 = 0.0;
};

struct ShockConnection {
  ConstState left;   ///< wall side, u1 = 0
  ConstState right;  ///< far field
  double s = 0.0;
  double delta = 0.0;
  bool lax_ok = false;
};

struct CharSpeeds {
  double lambda1;
  double lambda2;
};

struct LaxReport {
  bool ok = false;
  bool degenerate = false;
  double lambda2_right = 0.0;  ///< lambda2(rho+, u+)
  double lambda2_left = 0.0;   ///< lambda2(rho-, u-)
  double margin_right = 0.0;   ///< s - lambda2(rho+, u+)
  double margin_left = 0.0;    ///< lambda2(rho-, u-) - s
  /// s - lambda1(rho-, u-). Recorded only; with a resting left state the
  /// second Lax inequality s < lambda1 would force s < 0.
  double s_minus_lambda1_left = 0.0;
};

double pressure(const GasParams& gas, double rho);
/// dp/drho
double sound_speed_sq(const GasParams& gas, double rho);
/// d^2p/drho^2
double pressure_second_derivative(const GasParams& gas, double rho);

CharSpeeds char_speeds(const GasParams& gas, double rho, double u1);

/// Mass and momentum jump residuals of the connection.
std::array<double, 2> rh_residuals(const GasParams& gas, const ShockConnection& conn);

/// 2-shock from a resting wall state (rho_minus, 0) to rho_plus = rho_minus - delta,
/// solved in closed form by eliminating the far-field momentum.
ShockConnection solve_hugoniot(const GasParams& gas, double rho_minus, double delta);

/// Same connection with s found by bisection on the momentum residual. Used to
/// cross-check the closed form.
ShockConnection solve_hugoniot_bisection(const GasParams& gas, double rho_minus, double delta);

LaxReport check_lax(const GasParams& gas, const ShockConnection& conn);

}  // namespace shocklab
