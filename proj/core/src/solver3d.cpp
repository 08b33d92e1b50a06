#include "shocklab/solver3d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "shocklab/errors.hpp"
#include "shocklab/parallel.hpp"

namespace shocklab {

namespace {

struct Eos {
  double a;
  double gamma;
  bool quadratic;

  explicit Eos(const GasParams& g) : a(g.a), gamma(g.gamma), quadratic(g.gamma == 2.0) {}
  double p(double r) const { return quadratic ? a * r * r : a * std::pow(r, gamma); }
  double c(double r) const {
    return quadratic ? std::sqrt(2.0 * a * r) : std::sqrt(a * gamma * std::pow(r, gamma - 1.0));
  }
};

// Symmetric in its arguments, which keeps the wall reflection exact.
inline double van_leer(double a, double b) {
  const double ab = a * b;
  return ab > 0.0 ? 2.0 * ab / (a + b) : 0.0;
}

struct Prim {
  double r, u1, u2, u3;
};

struct Primitives {
  Lattice r, u1, u2, u3;
};

inline Prim load(const Primitives& q, std::size_t c) { return {q.r[c], q.u1[c], q.u2[c], q.u3[c]}; }

inline Prim face_left(const Prim& qm, const Prim& q0, const Prim& qp) {
  return {q0.r + 0.5 * van_leer(q0.r - qm.r, qp.r - q0.r),
          q0.u1 + 0.5 * van_leer(q0.u1 - qm.u1, qp.u1 - q0.u1),
          q0.u2 + 0.5 * van_leer(q0.u2 - qm.u2, qp.u2 - q0.u2),
          q0.u3 + 0.5 * van_leer(q0.u3 - qm.u3, qp.u3 - q0.u3)};
}

inline Prim face_right(const Prim& q0, const Prim& q1, const Prim& q2) {
  return {q1.r - 0.5 * van_leer(q1.r - q0.r, q2.r - q1.r),
          q1.u1 - 0.5 * van_leer(q1.u1 - q0.u1, q2.u1 - q1.u1),
          q1.u2 - 0.5 * van_leer(q1.u2 - q0.u2, q2.u2 - q1.u2),
          q1.u3 - 0.5 * van_leer(q1.u3 - q0.u3, q2.u3 - q1.u3)};
}

using Flux = std::array<double, 4>;

// Local Lax-Friedrichs flux in direction dir (0, 1, 2).
inline Flux rusanov(const Prim& L, const Prim& R, int dir, const Eos& eos) {
  const double unL = dir == 0 ? L.u1 : (dir == 1 ? L.u2 : L.u3);
  const double unR = dir == 0 ? R.u1 : (dir == 1 ? R.u2 : R.u3);
  const double pL = eos.p(L.r);
  const double pR = eos.p(R.r);
  const double speed = std::max(std::abs(unL) + eos.c(L.r), std::abs(unR) + eos.c(R.r));
  const double mL = L.r * unL;
  const double mR = R.r * unR;
  Flux f;
  f[0] = 0.5 * (mL + mR) - 0.5 * speed * (R.r - L.r);
  f[1] = 0.5 * (mL * L.u1 + mR * R.u1) - 0.5 * speed * (R.r * R.u1 - L.r * L.u1);
  f[2] = 0.5 * (mL * L.u2 + mR * R.u2) - 0.5 * speed * (R.r * R.u2 - L.r * L.u2);
  f[3] = 0.5 * (mL * L.u3 + mR * R.u3) - 0.5 * speed * (R.r * R.u3 - L.r * L.u3);
  f[1 + dir] += 0.5 * (pL + pR);
  return f;
}

void compute_primitives(const State& s, Primitives& q) {
  const std::size_t n = s.rho.size();
  q.r.resize(n);
  q.u1.resize(n);
  q.u2.resize(n);
  q.u3.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double r = s.rho[c];
    const double inv = 1.0 / r;
    q.r[c] = r;
    q.u1[c] = s.m1[c] * inv;
    q.u2[c] = s.m2[c] * inv;
    q.u3[c] = s.m3[c] * inv;
  }
}

void check_window(const State& s, const BoundarySpec& bc, const HalfSpaceGrid& grid) {
  const std::size_t begin = grid.row(0);
  const std::size_t end = begin + grid.interior_size();
  for (std::size_t c = begin; c < end; ++c) {
    const double r = s.rho[c];
    if (!bc.window.contains(r)) {
      std::ostringstream os;
      const std::size_t q = c - begin;
      os << "density " << r << " at cell (" << q / grid.plane() << ", "
         << (q % grid.plane()) / grid.n3 << ", " << q % grid.n3 << ") outside [" << bc.window.lo
         << ", " << bc.window.hi << "]";
      throw Error(std::isfinite(r) ? ErrorCode::kDensityFloor : ErrorCode::kNonFinite, os.str());
    }
  }
}

thread_local Primitives tl_prims;

}  // namespace

Tendency make_tendency(const HalfSpaceGrid& grid) {
  const std::size_t n = grid.lattice_size();
  return {Lattice(n, 0.0), Lattice(n, 0.0), Lattice(n, 0.0), Lattice(n, 0.0)};
}

void rhs(const State& s, const BoundarySpec& bc, const GasParams& gas, const HalfSpaceGrid& grid,
         Tendency& out, BoundaryFluxes* fluxes) {
  check_window(s, bc, grid);
  const Eos eos(gas);
  Primitives& q = tl_prims;
  compute_primitives(s, q);

  const std::size_t n = grid.lattice_size();
  for (Lattice* d : {&out.d_rho, &out.d_m1, &out.d_m2, &out.d_m3}) d->assign(n, 0.0);

  const int n1 = grid.n1, n2 = grid.n2, n3 = grid.n3;
  const std::size_t plane = grid.plane();
  const std::size_t s1 = plane;
  std::vector<int> jp(n2), jm(n2), kp(n3), km(n3);
  for (int j = 0; j < n2; ++j) {
    jp[j] = (j + 1) % n2;
    jm[j] = (j + n2 - 1) % n2;
  }
  for (int k = 0; k < n3; ++k) {
    kp[k] = (k + 1) % n3;
    km[k] = (k + n3 - 1) % n3;
  }

  const double inv_dx = 1.0 / grid.dx1;
  const double inv_h2 = 1.0 / grid.h2;
  const double inv_h3 = 1.0 / grid.h3;
  const double mu = gas.mu;
  const double mu_l = gas.mu + gas.lambda;

  std::vector<double> wall_flux(plane, 0.0), far_flux(plane, 0.0);

  auto add = [&](std::size_t c, const Flux& f, double scale) {
    out.d_rho[c] += scale * f[0];
    out.d_m1[c] += scale * f[1];
    out.d_m2[c] += scale * f[2];
    out.d_m3[c] += scale * f[3];
  };

  parallel_for(0, n1, [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
    // x1 direction: face f separates cells f-1 and f.
    std::vector<Flux> prev(plane), curr(plane);
    auto face_row = [&](int f, std::vector<Flux>& row) {
      const std::size_t rm = grid.row(f - 2), r0 = grid.row(f - 1), r1 = grid.row(f),
                        r2 = grid.row(f + 1);
      for (std::size_t p = 0; p < plane; ++p) {
        const Prim L = face_left(load(q, rm + p), load(q, r0 + p), load(q, r1 + p));
        const Prim R = face_right(load(q, r0 + p), load(q, r1 + p), load(q, r2 + p));
        row[p] = rusanov(L, R, 0, eos);
      }
    };
    face_row(static_cast<int>(lo), prev);
    if (lo == 0) {
      for (std::size_t p = 0; p < plane; ++p) wall_flux[p] = prev[p][0];
    }
    for (int i = static_cast<int>(lo); i < hi; ++i) {
      face_row(i + 1, curr);
      const std::size_t r = grid.row(i);
      for (std::size_t p = 0; p < plane; ++p) {
        Flux d;
        for (int v = 0; v < 4; ++v) d[v] = curr[p][v] - prev[p][v];
        add(r + p, d, -inv_dx);
      }
      if (i + 1 == n1) {
        for (std::size_t p = 0; p < plane; ++p) far_flux[p] = curr[p][0];
      }
      std::swap(prev, curr);
    }

    std::vector<Flux> row(plane);
    for (int i = static_cast<int>(lo); i < hi; ++i) {
      const std::size_t base = grid.row(i);
      // x2 direction: row[j * n3 + k] is the flux through face j + 1/2.
      if (n2 > 1) {
        for (int j = 0; j < n2; ++j) {
          const int j0 = jm[j], j2 = jp[j], j3 = jp[jp[j]];
          for (int k = 0; k < n3; ++k) {
            const Prim qm = load(q, base + j0 * n3 + k);
            const Prim q0 = load(q, base + j * n3 + k);
            const Prim q1 = load(q, base + j2 * n3 + k);
            const Prim q2 = load(q, base + j3 * n3 + k);
            row[j * n3 + k] = rusanov(face_left(qm, q0, q1), face_right(q0, q1, q2), 1, eos);
          }
        }
        for (int j = 0; j < n2; ++j) {
          for (int k = 0; k < n3; ++k) {
            const Flux& fp = row[j * n3 + k];
            const Flux& fm = row[jm[j] * n3 + k];
            add(base + j * n3 + k, {fp[0] - fm[0], fp[1] - fm[1], fp[2] - fm[2], fp[3] - fm[3]},
                -inv_h2);
          }
        }
      }
      // x3 direction
      if (n3 > 1) {
        for (int j = 0; j < n2; ++j) {
          const std::size_t b = base + j * n3;
          for (int k = 0; k < n3; ++k) {
            const Prim qm = load(q, b + km[k]);
            const Prim q0 = load(q, b + k);
            const Prim q1 = load(q, b + kp[k]);
            const Prim q2 = load(q, b + kp[kp[k]]);
            row[j * n3 + k] = rusanov(face_left(qm, q0, q1), face_right(q0, q1, q2), 2, eos);
          }
          for (int k = 0; k < n3; ++k) {
            const Flux& fp = row[j * n3 + k];
            const Flux& fm = row[j * n3 + km[k]];
            add(b + k, {fp[0] - fm[0], fp[1] - fm[1], fp[2] - fm[2], fp[3] - fm[3]}, -inv_h3);
          }
        }
      }

      // Viscous terms.
      const double c11 = inv_dx * inv_dx;
      const double c22 = inv_h2 * inv_h2;
      const double c33 = inv_h3 * inv_h3;
      const double c12 = 0.25 * inv_dx * inv_h2;
      const double c13 = 0.25 * inv_dx * inv_h3;
      const double c23 = 0.25 * inv_h2 * inv_h3;
      const std::size_t up = base + s1, dn = base - s1;
      for (int j = 0; j < n2; ++j) {
        const std::size_t J = static_cast<std::size_t>(j) * n3;
        const std::size_t Jp = static_cast<std::size_t>(jp[j]) * n3;
        const std::size_t Jm = static_cast<std::size_t>(jm[j]) * n3;
        for (int k = 0; k < n3; ++k) {
          const std::size_t c = base + J + k;
          const std::size_t K = k, Kp = kp[k], Km = km[k];
          auto second = [&](const Lattice& u, std::array<double, 3>& d2) {
            const double u0 = u[c];
            d2[0] = (u[up + J + K] - 2.0 * u0 + u[dn + J + K]) * c11;
            d2[1] = n2 > 1 ? (u[base + Jp + K] - 2.0 * u0 + u[base + Jm + K]) * c22 : 0.0;
            d2[2] = n3 > 1 ? (u[base + J + Kp] - 2.0 * u0 + u[base + J + Km]) * c33 : 0.0;
          };
          std::array<double, 3> a1, a2, a3;
          second(q.u1, a1);
          second(q.u2, a2);
          second(q.u3, a3);
          double x12 = 0.0, x13 = 0.0, x21 = 0.0, x23 = 0.0, x31 = 0.0, x32 = 0.0;
          if (n2 > 1) {
            // d1 d2 u2 and d2 d1 u1
            x12 = (q.u2[up + Jp + K] - q.u2[up + Jm + K] - q.u2[dn + Jp + K] + q.u2[dn + Jm + K]) *
                  c12;
            x21 = (q.u1[up + Jp + K] - q.u1[up + Jm + K] - q.u1[dn + Jp + K] + q.u1[dn + Jm + K]) *
                  c12;
          }
          if (n3 > 1) {
            x13 = (q.u3[up + J + Kp] - q.u3[up + J + Km] - q.u3[dn + J + Kp] + q.u3[dn + J + Km]) *
                  c13;
            x31 = (q.u1[up + J + Kp] - q.u1[up + J + Km] - q.u1[dn + J + Kp] + q.u1[dn + J + Km]) *
                  c13;
          }
          if (n2 > 1 && n3 > 1) {
            x23 = (q.u3[base + Jp + Kp] - q.u3[base + Jp + Km] - q.u3[base + Jm + Kp] +
                   q.u3[base + Jm + Km]) *
                  c23;
            x32 = (q.u2[base + Jp + Kp] - q.u2[base + Jp + Km] - q.u2[base + Jm + Kp] +
                   q.u2[base + Jm + Km]) *
                  c23;
          }
          out.d_m1[c] += mu * (a1[0] + a1[1] + a1[2]) + mu_l * (a1[0] + x12 + x13);
          out.d_m2[c] += mu * (a2[0] + a2[1] + a2[2]) + mu_l * (x21 + a2[1] + x23);
          out.d_m3[c] += mu * (a3[0] + a3[1] + a3[2]) + mu_l * (x31 + x32 + a3[2]);
        }
      }
    }
  });

  const std::size_t begin = grid.row(0);
  const std::size_t end = begin + grid.interior_size();
  for (const Lattice* d : {&out.d_rho, &out.d_m1, &out.d_m2, &out.d_m3}) {
    for (std::size_t c = begin; c < end; ++c) {
      if (!std::isfinite((*d)[c])) {
        throw Error(ErrorCode::kNonFinite, "non-finite tendency at lattice index " +
                                               std::to_string(c - begin));
      }
    }
  }

  if (fluxes != nullptr) {
    fluxes->wall_mass = pairwise_sum(wall_flux) * grid.torus_weight();
    fluxes->far_mass = pairwise_sum(far_flux) * grid.torus_weight();
  }
}

Tendency rhs(const State& state, const BoundarySpec& bc, const GasParams& gas,
             const HalfSpaceGrid& grid) {
  Tendency t = make_tendency(grid);
  rhs(state, bc, gas, grid, t);
  return t;
}

double stable_dt(const State& s, const GasParams& gas, const HalfSpaceGrid& grid, double cfl) {
  const Eos eos(gas);
  const double h = grid.min_spacing();
  const double visc = h * h / (2.0 * 3.0 * gas.mu_tilde());
  double best = std::numeric_limits<double>::infinity();
  const std::size_t begin = grid.row(0);
  const std::size_t end = begin + grid.interior_size();
  for (std::size_t c = begin; c < end; ++c) {
    const double r = s.rho[c];
    const double u1 = s.m1[c] / r, u2 = s.m2[c] / r, u3 = s.m3[c] / r;
    const double speed = std::sqrt(u1 * u1 + u2 * u2 + u3 * u3) + eos.c(r);
    best = std::min({best, h / speed, r * visc});
  }
  return cfl * best;
}

Stepper::Stepper(const HalfSpaceGrid& grid)
    : grid_(grid), k_(make_tendency(grid)), stage_(make_state(grid)) {}

void Stepper::step(State& s, double dt, const BoundarySpec& bc, const GasParams& gas,
                   StepAudit* audit) {
  BoundaryFluxes f0, f1;
  apply_navier_bc(s, bc, grid_);
  if (audit != nullptr) audit->mass_before = total_mass(grid_, s.rho);

  rhs(s, bc, gas, grid_, k_, &f0);
  const std::size_t n = s.rho.size();
  for (std::size_t c = 0; c < n; ++c) {
    stage_.rho[c] = s.rho[c] + dt * k_.d_rho[c];
    stage_.m1[c] = s.m1[c] + dt * k_.d_m1[c];
    stage_.m2[c] = s.m2[c] + dt * k_.d_m2[c];
    stage_.m3[c] = s.m3[c] + dt * k_.d_m3[c];
  }
  stage_.t = s.t + dt;
  apply_navier_bc(stage_, bc, grid_);

  rhs(stage_, bc, gas, grid_, k_, &f1);
  for (std::size_t c = 0; c < n; ++c) {
    s.rho[c] = 0.5 * s.rho[c] + 0.5 * (stage_.rho[c] + dt * k_.d_rho[c]);
    s.m1[c] = 0.5 * s.m1[c] + 0.5 * (stage_.m1[c] + dt * k_.d_m1[c]);
    s.m2[c] = 0.5 * s.m2[c] + 0.5 * (stage_.m2[c] + dt * k_.d_m2[c]);
    s.m3[c] = 0.5 * s.m3[c] + 0.5 * (stage_.m3[c] + dt * k_.d_m3[c]);
  }
  s.t += dt;
  apply_navier_bc(s, bc, grid_);

  if (audit != nullptr) {
    audit->mass_after = total_mass(grid_, s.rho);
    audit->wall_flux = 0.5 * (f0.wall_mass + f1.wall_mass);
    audit->expected_change =
        -dt * 0.5 * ((f0.far_mass - f0.wall_mass) + (f1.far_mass - f1.wall_mass));
  }
}

void step(State& state, double dt, const BoundarySpec& bc, const GasParams& gas,
          const HalfSpaceGrid& grid, StepAudit* audit) {
  Stepper stepper(grid);
  stepper.step(state, dt, bc, gas, audit);
}

}  // namespace shocklab
