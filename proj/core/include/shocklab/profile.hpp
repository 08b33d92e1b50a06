#pragma once

#include <cstddef>
#include <vector>

#include "shocklab/gas_model.hpp"

namespace shocklab {

/// Tabulated viscous shock profile. Rows are ordered by increasing xi; the
/// velocity decreases from ~0 (wall state) to ~u+ (far state). Immutable after
/// build_profile returns it.
struct ProfileTable {
  GasParams gas;
  ShockConnection conn;
  double mass_flux = 0.0;  ///< J = rho (u1 - s), constant along the profile
  double eps_endpoint = 0.0;

  std::vector<double> xi;
  std::vector<double> rho_bar;
  std::vector<double> u1_bar;
  std::vector<double> u1_prime;
  std::vector<double> u1_second;
  std::vector<double> m_bar;
  std::vector<double> w_bar;

  /// m_cum[i] = integral of m_bar from xi[0] to xi[i] (of the interpolant).
  std::vector<double> m_cum;
  /// Exponential rates of |u1'| fitted on the two tails; used to extend
  /// integrals of m_bar beyond the table.
  double left_rate = 0.0;
  double right_rate = 0.0;

  std::size_t size() const noexcept { return xi.size(); }
  double xi_min() const { return xi.front(); }
  double xi_max() const { return xi.back(); }
};

struct ProfileSample {
  double rho_bar;
  double u1_bar;
  double u1_prime;
  double u1_second;
  double m_bar;
  double w_bar;
};

struct ProfileReport {
  int monotonicity_violations = 0;
  double left_rate_fit = 0.0;
  double right_rate_fit = 0.0;
  double left_rate_theory = 0.0;   ///< R'(0) / mu_tilde
  double right_rate_theory = 0.0;  ///< |R'(u+)| / mu_tilde
  double c3 = 0.0;                 ///< max |u1''| / (delta |u1'|)
  double envelope_amplitude = 0.0; ///< max |u1'| / delta^2
  double envelope_c_left = 0.0;    ///< left_rate_fit / delta
  double envelope_c_right = 0.0;   ///< right_rate_fit / delta
  double u_bound_constant = 0.0;   ///< max |u1| / delta
  double mass_flux_residual = 0.0; ///< max |rho (u - s) - J| / |J|
  double endpoint_residual = 0.0;  ///< max(|R(0)|, |R(u+)|)
  double width = 0.0;              ///< 5%-95% transition width
};

/// Once-integrated momentum balance along the wave: mu_tilde u1' = R(u1).
double traveling_wave_rhs(const GasParams& gas, const ShockConnection& conn, double u1);
double traveling_wave_rhs_derivative(const GasParams& gas, const ShockConnection& conn, double u1);

inline constexpr double kDefaultEpsEndpoint = 1e-9;
inline constexpr int kDefaultProfileNodes = 2048;

/// Integrates d xi / d u1 = mu_tilde / R(u1) node by node over
/// [u+ (1 - eps), u+ eps]; n_nodes uniform velocity nodes are refined on the
/// tails so that no xi gap exceeds ~40 / (n_nodes * rate).
ProfileTable build_profile(const GasParams& gas, const ShockConnection& conn,
                           double eps_endpoint = kDefaultEpsEndpoint,
                           int n_nodes = kDefaultProfileNodes);

/// Monotone cubic Hermite interpolation of u1 inside the table; the remaining
/// quantities follow from u1 through the wave relations. Outside the table
/// the exact end states are returned with zero derivatives.
ProfileSample profile_eval(const ProfileTable& table, double xi);

/// Integral of m_bar over (-inf, upper], with exponential tail extension.
double m_bar_integral(const ProfileTable& table, double upper);

/// Distance in xi between the points where u1 = lo_frac u+ and u1 = hi_frac u+,
/// computed by direct quadrature of mu_tilde / R.
double transition_width(const ProfileTable& table, double lo_frac = 0.05, double hi_frac = 0.95);

ProfileReport verify_profile(const ProfileTable& table);

}  // namespace shocklab
