#pragma once

#include <functional>
#include <vector>

#include "shocklab/grid_fields.hpp"

// Reference computations written independently of the library code paths.
// They use only textbook formulas and brute-force numerics.
namespace oracle {

struct Hugoniot {
  double rho_plus;
  double s;
  double u_plus;
};

/// Mass and momentum jump conditions with m- = 0 solved by eliminating m+.
Hugoniot closed_form_hugoniot(double a, double gamma, double rho_minus, double delta);

/// R(u) = J u + p(J / (u - s)) - (J u+ + p(rho+)), J = -s rho-.
double traveling_wave_R(double a, double gamma, double rho_minus, const Hugoniot& h, double u);

/// Fourth-order central difference.
double derivative(const std::function<double(double)>& f, double x, double h);

/// Velocity of the profile at each requested xi from classical RK4 on
/// mu_tilde u' = R(u), started from u(0) = u+/2 with step h.
std::vector<double> profile_velocity_rk4(double a, double gamma, double mu_tilde,
                                         double rho_minus, const Hugoniot& h,
                                         const std::vector<double>& xi, double step);

/// Composite Simpson rule with n (even) panels.
double simpson(const std::function<double(double)>& f, double lo, double hi, int n);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Fills every lattice entry (ghosts included) from a function of the cell
/// centre; ghost rows use the mirrored coordinates x1(i) for i < 0 or >= n1.
void fill(shocklab::Lattice& field, const shocklab::HalfSpaceGrid& grid,
          const std::function<double(double, double, double)>& f);

/// Max over interior cells of |a - b|.
double max_abs_diff(const shocklab::HalfSpaceGrid& grid, const shocklab::Lattice& a,
                    const shocklab::Lattice& b);

/// Cell-volume weighted L2 norm of a - b over interior cells with
/// i in [i_lo, n1 - i_hi).
double l2_diff(const shocklab::HalfSpaceGrid& grid, const shocklab::Lattice& a,
               const shocklab::Lattice& b, int i_lo = 0, int i_hi = 0);

}  // namespace oracle
