#include "shocklab/wave_tracking.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shocklab/errors.hpp"
#include "shocklab/gas_model.hpp"

namespace shocklab {

double shift_functional(const ProfileTable& table, double zero_mode_mass, double alpha) {
  return zero_mode_mass - m_bar_integral(table, alpha) / table.conn.s;
}

ShiftResult solve_shift(double zero_mode_mass, const ProfileTable& table, double max_range) {
  if (!(table.conn.s > 0.0)) throw Error(ErrorCode::kDomain, "shock speed must be positive");
  if (!(zero_mode_mass < 0.0)) {
    std::ostringstream os;
    os << "I(alpha) > 0 for every alpha; inf I = " << zero_mode_mass;
    throw Error(ErrorCode::kNoRoot, os.str());
  }

  ShiftResult r;
  r.zero_mode_mass = zero_mode_mass;
  auto I = [&](double a) {
    const double v = shift_functional(table, zero_mode_mass, a);
    r.trace.emplace_back(a, v);
    return v;
  };

  double lo = -1.0, hi = 1.0;
  while (I(lo) >= 0.0) {
    lo *= 2.0;
    if (-lo > max_range) throw Error(ErrorCode::kBracketFailure, "no lower bracket for alpha");
  }
  while (I(hi) <= 0.0) {
    hi *= 2.0;
    if (hi > max_range) throw Error(ErrorCode::kBracketFailure, "no upper bracket for alpha");
  }
  r.bracket_lo = lo;
  r.bracket_hi = hi;

  double mid = 0.5 * (lo + hi);
  double val = 0.0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    val = I(mid);
    ++r.iterations;
    if (val == 0.0) break;
    (val < 0.0 ? lo : hi) = mid;
  }
  r.alpha = mid;
  r.residual = std::abs(shift_functional(table, zero_mode_mass, mid));

  auto sorted = r.trace;
  std::sort(sorted.begin(), sorted.end());
  r.trace_monotone = true;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i + 1].first > sorted[i].first && !(sorted[i + 1].second > sorted[i].second)) {
      // Adjacent bisection points can be closer than the resolution of I.
      if (sorted[i + 1].first - sorted[i].first > 1e-9) r.trace_monotone = false;
    }
  }
  return r;
}

double boundary_driver_A(const ProfileTable& table, double alpha, double t) {
  const double s = table.conn.s;
  return -m_bar_integral(table, alpha - s * t) / s;
}

AntiderivativeState antiderivative(const HalfSpaceGrid& grid, const std::vector<double>& phi0,
                                   const std::vector<double>& psi10, double t) {
  const int n = grid.n1;
  AntiderivativeState a;
  a.t = t;
  a.Phi.assign(n + 1, 0.0);
  a.Psi.assign(n + 1, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    a.Phi[i] = a.Phi[i + 1] - phi0[i] * grid.dx1;
    a.Psi[i] = a.Psi[i + 1] - psi10[i] * grid.dx1;
  }

  // Decay length from a log-linear fit of |phi0| over the last cells.
  const int m = std::max(8, n / 16);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int used = 0;
  for (int i = n - m; i < n; ++i) {
    const double v = std::abs(phi0[i]);
    if (!(v > 0.0)) continue;
    const double x = grid.x1(i), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++used;
  }
  double length = grid.L;
  if (used >= 3) {
    const double slope = (used * sxy - sx * sy) / (used * sxx - sx * sx);
    if (slope < 0.0) length = std::min(grid.L, -1.0 / slope);
  }
  a.decay_length = length;
  a.trunc_bound = std::abs(phi0[n - 1]) * length;
  return a;
}

ZeroModeLines zero_mode_lines(const HalfSpaceGrid& grid, const ProfileTable& table, double alpha,
                              const State& state) {
  const GasParams& gas = table.gas;
  const double mt = gas.mu_tilde();
  const double shift = alpha - table.conn.s * state.t;
  const std::size_t plane = grid.plane();
  const double w = 1.0 / static_cast<double>(plane);

  ZeroModeLines z;
  z.phi.resize(grid.n1);
  z.psi1.resize(grid.n1);
  z.n11.resize(grid.n1);
  z.n21.resize(grid.n1);
  z.profile.resize(grid.n1);
  for (int i = 0; i < grid.n1; ++i) {
    const ProfileSample p = profile_eval(table, grid.x1(i) + shift);
    z.profile[i] = p;
    const double pb = pressure(gas, p.rho_bar);
    const double cb = sound_speed_sq(gas, p.rho_bar);
    const double ub = p.u1_bar;
    const std::size_t r = grid.row(i);
    double sphi = 0, spsi = 0, sn11 = 0, sn21 = 0;
    for (std::size_t q = 0; q < plane; ++q) {
      const double rho = state.rho[r + q];
      const double m1 = state.m1[r + q];
      const double phi = rho - p.rho_bar;
      const double psi = m1 - p.m_bar;
      sphi += phi;
      spsi += psi;
      sn11 += -(m1 * m1 / rho - p.m_bar * p.m_bar / p.rho_bar - 2.0 * ub * psi + ub * ub * phi) -
              (pressure(gas, rho) - pb - cb * phi);
      sn21 += mt * (m1 / rho - ub - psi / p.rho_bar + ub * phi / p.rho_bar);
    }
    z.phi[i] = sphi * w;
    z.psi1[i] = spsi * w;
    z.n11[i] = sn11 * w;
    z.n21[i] = sn21 * w;
  }
  return z;
}

namespace {

struct Terms {
  std::vector<double> Phi_c, Psi_c;  // cell-centre anti-derivatives
  std::vector<double> space2;        // spatial part of equation 2 minus forcing
  std::vector<double> psi1;
  std::vector<double> n11, dn21;
};

Terms assemble(const HalfSpaceGrid& grid, const ProfileTable& table, double alpha,
               const State& s) {
  const ZeroModeLines z = zero_mode_lines(grid, table, alpha, s);
  const AntiderivativeState a = antiderivative(grid, z.phi, z.psi1, s.t);
  const int n = grid.n1;
  const double mt = table.gas.mu_tilde();
  const double inv2dx = 0.5 / grid.dx1;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    const ProfileSample& p = z.profile[i];
    g[i] = (z.psi1[i] - p.u1_bar * z.phi[i]) / p.rho_bar;
  }
  Terms t;
  t.Phi_c.assign(n, 0.0);
  t.Psi_c.assign(n, 0.0);
  t.space2.assign(n, 0.0);
  t.psi1 = z.psi1;
  t.n11 = z.n11;
  t.dn21.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    t.Phi_c[i] = 0.5 * (a.Phi[i] + a.Phi[i + 1]);
    t.Psi_c[i] = 0.5 * (a.Psi[i] + a.Psi[i + 1]);
  }
  for (int i = 1; i + 1 < n; ++i) {
    const ProfileSample& p = z.profile[i];
    const double dg = (g[i + 1] - g[i - 1]) * inv2dx;
    t.dn21[i] = (z.n21[i + 1] - z.n21[i - 1]) * inv2dx;
    t.space2[i] = 2.0 * p.u1_bar * z.psi1[i] + p.w_bar * z.phi[i] - mt * dg - z.n11[i] - t.dn21[i];
  }
  return t;
}

}  // namespace

AntiderivResidual antideriv_residual(const HalfSpaceGrid& grid, const ProfileTable& table,
                                     double alpha, const State& s0, const State& s1) {
  const Terms a = assemble(grid, table, alpha, s0);
  const Terms b = assemble(grid, table, alpha, s1);
  const double dt = s1.t - s0.t;
  const int n = grid.n1;
  double r1 = 0, r2 = 0, nn11 = 0, nn21 = 0;
  for (int i = 2; i < n - 2; ++i) {
    const double e1 = (b.Phi_c[i] - a.Phi_c[i]) / dt + 0.5 * (a.psi1[i] + b.psi1[i]);
    const double e2 = (b.Psi_c[i] - a.Psi_c[i]) / dt + 0.5 * (a.space2[i] + b.space2[i]);
    const double f11 = 0.5 * (a.n11[i] + b.n11[i]);
    const double f21 = 0.5 * (a.dn21[i] + b.dn21[i]);
    r1 += e1 * e1;
    r2 += e2 * e2;
    nn11 += f11 * f11;
    nn21 += f21 * f21;
  }
  AntiderivResidual r;
  r.res1 = std::sqrt(r1 * grid.dx1);
  r.res2 = std::sqrt(r2 * grid.dx1);
  r.n11_norm = std::sqrt(nn11 * grid.dx1);
  r.n21_norm = std::sqrt(nn21 * grid.dx1);
  return r;
}

}  // namespace shocklab
