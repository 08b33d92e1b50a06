#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shocklab/grid_fields.hpp"
#include "shocklab/profile.hpp"
#include "shocklab/wave_tracking.hpp"

namespace shocklab {

/// Deviation of a state from the shifted profile. Lattices share the state
/// layout; ghost rows are zero.
struct PerturbationField {
  Lattice phi;
  Lattice psi1, psi2, psi3;
  Lattice zeta1, zeta2, zeta3;
  double t = 0.0;
  double alpha = 0.0;
};

PerturbationField perturbation(const State& state, const ProfileTable& table, double alpha,
                               const HalfSpaceGrid& grid);

/// Largest absolute value over phi and the three zeta components.
double sup_norm(const PerturbationField& f, const HalfSpaceGrid& grid);

struct Norms {
  double l2 = 0.0;
  double linf = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
};

/// Cell-volume weighted norms over the interior. Derivatives are second-order
/// central inside, second-order one-sided at both x1 ends and periodic across
/// the torus; H2 includes every entry of the Hessian.
Norms discrete_norms(const Lattice& field, const HalfSpaceGrid& grid);

/// Squared L2 norms of the non-zero mode and of the transverse gradient,
/// computed from the discrete Fourier transform of each x1 plane.
struct TransverseSpectrum {
  double nonzero_sq = 0.0;
  double grad_sq = 0.0;
};

TransverseSpectrum transverse_spectrum(const Lattice& field, const HalfSpaceGrid& grid);

struct EnergyRecord {
  double t = 0.0;
  double E = 0.0;
  double N_inf = 0.0;
  double diss_psi_weighted = 0.0;
  double diss_zeta1 = 0.0;
  double diss_grad = 0.0;
  double bdry_psi = 0.0;
  double bdry_phi = 0.0;
  double bdry_zeta_prime = 0.0;
  double lyapunov = 0.0;
  double rel_entropy = 0.0;
  double Phi_at_wall = 0.0;
  double A_of_t = 0.0;
  double nonzero_mode_norm = 0.0;
  double shift_alpha = 0.0;
  double antideriv_residual_1 = 0.0;
  double antideriv_residual_2 = 0.0;
  double nonlinear_norm = 0.0;
  double trunc_bound = 0.0;
  double phi0_max = 0.0;  ///< max |D0 phi|
  /// 2 pi ||Dneq phi|| / ||grad' phi||; at most 1 on the unit torus.
  double poincare_ratio = 0.0;
};

/// Column names of energy.csv in record order.
const std::vector<std::string>& energy_csv_columns();
std::string energy_csv_header();
std::string energy_csv_row(const EnergyRecord& r);

/// Every monitored functional of one state. The residual columns are left at
/// zero; see attach_residual.
EnergyRecord energy_record(const State& state, const ProfileTable& table, double alpha,
                           const BoundarySpec& bc, const HalfSpaceGrid& grid);

void attach_residual(EnergyRecord& r, const AntiderivResidual& res);

/// Weighted dissipation ||sqrt|u1_bar'| Psi||^2 of the zero mode only; cheap
/// enough to accumulate every time step.
double weighted_psi_dissipation(const State& state, const ProfileTable& table, double alpha,
                                const HalfSpaceGrid& grid);

/// Int (rho Xi(rho, rho_bar)) with Xi the relative pressure potential.
double relative_pressure_potential(const GasParams& gas, double rho, double rho_bar);

struct InequalityReport {
  int samples = 0;
  std::uint64_t seed = 0;
  double poincare_equality_ratio = 0.0;  ///< ||Dneq f|| / ||grad' f|| for sin(2 pi x2)
  double poincare_worst = 0.0;           ///< max of 2 pi ||Dneq f|| / ||grad' f||
  double agmon_equality_ratio = 0.0;     ///< for exp(-x1) at dx1 = 0.01
  double agmon_worst = 0.0;              ///< max of ||g||inf^2 / (2 ||g|| ||g'||)
  double pythagoras_worst = 0.0;         ///< relative defect
  double zero_of_nonzero_worst = 0.0;    ///< max |D0 Dneq f|
  double gn3d_ratio_max = 0.0;           ///< empirical constant of the 3-D interpolation bound
  bool pass = false;
  std::string to_json() const;
};

/// Randomized trigonometric-polynomial checks of the torus Poincare bound, the
/// half-line Agmon bound and the mode-split identities.
InequalityReport inequality_checks(int sample_count, std::uint64_t seed = 7);

}  // namespace shocklab
