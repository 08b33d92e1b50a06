#pragma once

#include <utility>
#include <vector>

#include "shocklab/grid_fields.hpp"
#include "shocklab/profile.hpp"

namespace shocklab {

struct ShiftResult {
  double alpha = 0.0;
  double zero_mode_mass = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;  ///< |I(alpha)|
  int iterations = 0;
  /// Every (alpha, I(alpha)) evaluated during bracketing and bisection.
  std::vector<std::pair<double, double>> trace;
  /// True when I is strictly increasing along the trace sorted by alpha.
  bool trace_monotone = false;
};

/// I(alpha) = mass - (1/s) * integral of m_bar over (-inf, alpha].
double shift_functional(const ProfileTable& table, double zero_mode_mass, double alpha);

/// Finds the shift that balances the zero-mode mass of the initial
/// perturbation. A root exists only for strictly negative mass (NoRoot
/// otherwise); BracketFailure once |alpha| would exceed max_range.
ShiftResult solve_shift(double zero_mode_mass, const ProfileTable& table,
                        double max_range = 1e4);

/// A(t) = -(1/s) * integral of m_bar over (-inf, alpha - s t]. Non-negative and
/// decays to zero; A'(t) = m_bar(alpha - s t).
double boundary_driver_A(const ProfileTable& table, double alpha, double t);

/// Anti-derivatives of the zero-mode perturbation on the n1 + 1 faces of the
/// x1 grid: Phi[i] = -sum over cells j >= i of phi0[j] dx1, so Phi[n1] = 0 and
/// (Phi[i+1] - Phi[i]) / dx1 returns the cell value exactly.
struct AntiderivativeState {
  std::vector<double> Phi;
  std::vector<double> Psi;
  double t = 0.0;
  /// |phi0| at the last cell times a decay length fitted on the last cells.
  double trunc_bound = 0.0;
  double decay_length = 0.0;
};

AntiderivativeState antiderivative(const HalfSpaceGrid& grid, const std::vector<double>& phi0,
                                   const std::vector<double>& psi10, double t = 0.0);

/// Zero-mode (torus-averaged) lines of a state relative to the profile
/// shifted to x1 - s t + alpha, together with the nonlinear remainders of the
/// anti-derivative system.
struct ZeroModeLines {
  std::vector<double> phi;   ///< D0 (rho - rho_bar)
  std::vector<double> psi1;  ///< D0 (m1 - m1_bar)
  std::vector<double> n11;   ///< D0 N11
  std::vector<double> n21;   ///< D0 N21
  std::vector<ProfileSample> profile;  ///< at cell centres
};

ZeroModeLines zero_mode_lines(const HalfSpaceGrid& grid, const ProfileTable& table, double alpha,
                              const State& state);

struct AntiderivResidual {
  double res1 = 0.0;  ///< L2 residual of d_t Phi + d_1 Psi = 0
  double res2 = 0.0;  ///< L2 residual of the damped wave equation for Psi
  double n11_norm = 0.0;
  double n21_norm = 0.0;  ///< L2 norm of d_1 D0 N21
  double nonlinear_norm() const noexcept { return n11_norm + n21_norm; }
};

/// Evaluates both anti-derivative equations between two states of the same run
/// (time differences, central differences in x1, all terms averaged over the
/// two time levels). Cells within two of either end of the x1 grid are
/// excluded.
AntiderivResidual antideriv_residual(const HalfSpaceGrid& grid, const ProfileTable& table,
                                     double alpha, const State& s0, const State& s1);

}  // namespace shocklab
