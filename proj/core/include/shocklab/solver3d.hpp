#pragma once

#include "shocklab/gas_model.hpp"
#include "shocklab/grid_fields.hpp"

namespace shocklab {

/// Per-cell time derivatives of the conservative fields, same layout as the
/// state lattices (ghost rows stay zero).
struct Tendency {
  Lattice d_rho, d_m1, d_m2, d_m3;
};

Tendency make_tendency(const HalfSpaceGrid& grid);

/// Torus-integrated mass fluxes through the wall face (x1 = 0) and the far
/// face (x1 = L), positive in +x1.
struct BoundaryFluxes {
  double wall_mass = 0.0;
  double far_mass = 0.0;
};

/// Semi-discrete right-hand side of the 3-D isentropic Navier-Stokes system.
/// Convective part: MUSCL (van Leer limited, primitive variables) with a local
/// Lax-Friedrichs interface flux; viscous part: central differences of
/// mu Lap u + (mu + lambda) grad div u. Ghosts must be filled.
/// Throws DensityFloor when an interior density leaves bc.window and
/// NonFinite when any tendency entry is NaN/Inf.
void rhs(const State& state, const BoundarySpec& bc, const GasParams& gas,
         const HalfSpaceGrid& grid, Tendency& out, BoundaryFluxes* fluxes = nullptr);

Tendency rhs(const State& state, const BoundarySpec& bc, const GasParams& gas,
             const HalfSpaceGrid& grid);

/// cfl * min over cells of [h / (|u| + c), rho h^2 / (2 d mu_tilde)], d = 3,
/// h = min(dx1, h2, h3).
double stable_dt(const State& state, const GasParams& gas, const HalfSpaceGrid& grid, double cfl);

struct StepAudit {
  double mass_before = 0.0;
  double mass_after = 0.0;
  /// -dt * (average of the two stages' far minus wall mass flux)
  double expected_change = 0.0;
  double wall_flux = 0.0;  ///< stage-averaged wall mass flux
};

/// Two-stage SSP Runge-Kutta integrator with reusable stage buffers.
class Stepper {
 public:
  explicit Stepper(const HalfSpaceGrid& grid);

  /// Advances state by dt; ghosts are refreshed before each stage and on exit.
  void step(State& state, double dt, const BoundarySpec& bc, const GasParams& gas,
            StepAudit* audit = nullptr);

 private:
  HalfSpaceGrid grid_;
  Tendency k_;
  State stage_;
};

void step(State& state, double dt, const BoundarySpec& bc, const GasParams& gas,
          const HalfSpaceGrid& grid, StepAudit* audit = nullptr);

}  // namespace shocklab
