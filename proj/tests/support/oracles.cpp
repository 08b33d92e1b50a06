#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace oracle {

Hugoniot closed_form_hugoniot(double a, double gamma, double rho_minus, double delta) {
  Hugoniot h;
  h.rho_plus = rho_minus - delta;
  const double p_minus = a * std::pow(rho_minus, gamma);
  const double p_plus = a * std::pow(h.rho_plus, gamma);
  h.s = std::sqrt(h.rho_plus * (p_minus - p_plus) / (rho_minus * (rho_minus - h.rho_plus)));
  h.u_plus = h.s * (h.rho_plus - rho_minus) / h.rho_plus;
  return h;
}

double traveling_wave_R(double a, double gamma, double rho_minus, const Hugoniot& h, double u) {
  const double J = -h.s * rho_minus;
  auto p = [&](double r) { return a * std::pow(r, gamma); };
  return J * u + p(J / (u - h.s)) - (J * h.u_plus + p(h.rho_plus));
}

double derivative(const std::function<double(double)>& f, double x, double h) {
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

std::vector<double> profile_velocity_rk4(double a, double gamma, double mu_tilde,
                                         double rho_minus, const Hugoniot& h,
                                         const std::vector<double>& xi, double step) {
  auto rhs = [&](double u) { return traveling_wave_R(a, gamma, rho_minus, h, u) / mu_tilde; };
  auto march = [&](double u, double from, double to) {
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(to - from) / step)));
    const double dt = (to - from) / n;
    for (int k = 0; k < n; ++k) {
      const double k1 = rhs(u);
      const double k2 = rhs(u + 0.5 * dt * k1);
      const double k3 = rhs(u + 0.5 * dt * k2);
      const double k4 = rhs(u + dt * k3);
      u += dt * (k1 + 2 * k2 + 2 * k3 + k4) / 6.0;
    }
    return u;
  };
  std::vector<double> out(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) out[k] = march(0.5 * h.u_plus, 0.0, xi[k]);
  return out;
}

double simpson(const std::function<double(double)>& f, double lo, double hi, int n) {
  if (n % 2 != 0) throw std::invalid_argument("simpson needs an even panel count");
  const double h = (hi - lo) / n;
  double sum = f(lo) + f(hi);
  for (int k = 1; k < n; ++k) sum += (k % 2 ? 4.0 : 2.0) * f(lo + k * h);
  return sum * h / 3.0;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += x[k];
    sy += y[k];
    sxx += x[k] * x[k];
    sxy += x[k] * y[k];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void fill(shocklab::Lattice& field, const shocklab::HalfSpaceGrid& grid,
          const std::function<double(double, double, double)>& f) {
  using shocklab::HalfSpaceGrid;
  field.assign(grid.lattice_size(), 0.0);
  for (int i = -HalfSpaceGrid::kGhost; i < grid.n1 + HalfSpaceGrid::kGhost; ++i) {
    for (int j = 0; j < grid.n2; ++j) {
      for (int k = 0; k < grid.n3; ++k) {
        field[grid.index(i, j, k)] = f(grid.x1(i), grid.x2(j), grid.x3(k));
      }
    }
  }
}

double max_abs_diff(const shocklab::HalfSpaceGrid& grid, const shocklab::Lattice& a,
                    const shocklab::Lattice& b) {
  double m = 0.0;
  const std::size_t begin = grid.row(0);
  for (std::size_t q = 0; q < grid.interior_size(); ++q) {
    m = std::max(m, std::abs(a[begin + q] - b[begin + q]));
  }
  return m;
}

double l2_diff(const shocklab::HalfSpaceGrid& grid, const shocklab::Lattice& a,
               const shocklab::Lattice& b, int i_lo, int i_hi) {
  double sum = 0.0;
  for (int i = i_lo; i < grid.n1 - i_hi; ++i) {
    const std::size_t r = grid.row(i);
    for (std::size_t p = 0; p < grid.plane(); ++p) {
      const double d = a[r + p] - b[r + p];
      sum += d * d;
    }
  }
  return std::sqrt(sum * grid.cell_volume());
}

}  // namespace oracle
