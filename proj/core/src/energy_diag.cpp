#include "shocklab/energy_diag.hpp"

#include <fftw3.h>

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <numbers>
#include <random>

#include "shocklab/gas_model.hpp"
#include "shocklab/parallel.hpp"

namespace shocklab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Interior values, index i * plane + j * n3 + k.
using Field = std::vector<double>;

Field interior(const Lattice& f, const HalfSpaceGrid& g) {
  const auto begin = f.begin() + static_cast<std::ptrdiff_t>(g.row(0));
  return Field(begin, begin + static_cast<std::ptrdiff_t>(g.interior_size()));
}

Field d_x1(const Field& f, const HalfSpaceGrid& g) {
  const std::size_t P = g.plane();
  const int n = g.n1;
  const double inv = 1.0 / (2.0 * g.dx1);
  Field d(f.size());
  for (std::size_t p = 0; p < P; ++p) {
    auto at = [&](int i) { return f[i * P + p]; };
    d[p] = (-3.0 * at(0) + 4.0 * at(1) - at(2)) * inv;
    for (int i = 1; i < n - 1; ++i) d[i * P + p] = (at(i + 1) - at(i - 1)) * inv;
    d[(n - 1) * P + p] = (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) * inv;
  }
  return d;
}

Field d_x1x1(const Field& f, const HalfSpaceGrid& g) {
  const std::size_t P = g.plane();
  const int n = g.n1;
  const double inv = 1.0 / (g.dx1 * g.dx1);
  Field d(f.size());
  for (std::size_t p = 0; p < P; ++p) {
    auto at = [&](int i) { return f[i * P + p]; };
    d[p] = (2.0 * at(0) - 5.0 * at(1) + 4.0 * at(2) - at(3)) * inv;
    for (int i = 1; i < n - 1; ++i) d[i * P + p] = (at(i + 1) - 2.0 * at(i) + at(i - 1)) * inv;
    d[(n - 1) * P + p] = (2.0 * at(n - 1) - 5.0 * at(n - 2) + 4.0 * at(n - 3) - at(n - 4)) * inv;
  }
  return d;
}

// Periodic derivative across the torus; dir 2 or 3, order 1 or 2.
Field d_trans(const Field& f, const HalfSpaceGrid& g, int dir, int order) {
  Field d(f.size(), 0.0);
  const int m = dir == 2 ? g.n2 : g.n3;
  if (m == 1) return d;
  const double h = dir == 2 ? g.h2 : g.h3;
  const std::size_t stride = dir == 2 ? static_cast<std::size_t>(g.n3) : 1;
  const std::size_t P = g.plane();
  for (int i = 0; i < g.n1; ++i) {
    for (int j = 0; j < g.n2; ++j) {
      for (int k = 0; k < g.n3; ++k) {
        const int c = dir == 2 ? j : k;
        const std::size_t base = i * P + static_cast<std::size_t>(j) * g.n3 + k - c * stride;
        const double fp = f[base + ((c + 1) % m) * stride];
        const double fm = f[base + ((c + m - 1) % m) * stride];
        const double f0 = f[base + c * stride];
        d[base + c * stride] = order == 1 ? (fp - fm) / (2.0 * h) : (fp - 2.0 * f0 + fm) / (h * h);
      }
    }
  }
  return d;
}

double sum_sq(const Field& f) {
  std::vector<double> sq(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) sq[i] = f[i] * f[i];
  return pairwise_sum(sq);
}

Norms norms_of(const Field& f, const HalfSpaceGrid& g) {
  const double vol = g.cell_volume();
  Norms n;
  double linf = 0.0;
  for (double v : f) linf = std::max(linf, std::abs(v));
  const Field d1 = d_x1(f, g);
  const Field d2 = d_trans(f, g, 2, 1);
  const Field d3 = d_trans(f, g, 3, 1);
  const double l2sq = sum_sq(f);
  const double gradsq = sum_sq(d1) + sum_sq(d2) + sum_sq(d3);
  const double hess = sum_sq(d_x1x1(f, g)) + sum_sq(d_trans(f, g, 2, 2)) +
                      sum_sq(d_trans(f, g, 3, 2)) +
                      2.0 * (sum_sq(d_trans(d1, g, 2, 1)) + sum_sq(d_trans(d1, g, 3, 1)) +
                             sum_sq(d_trans(d2, g, 3, 1)));
  n.l2 = std::sqrt(l2sq * vol);
  n.linf = linf;
  n.h1 = std::sqrt((l2sq + gradsq) * vol);
  n.h2 = std::sqrt((l2sq + gradsq + hess) * vol);
  return n;
}

// Trapezoid weights on the n1 + 1 faces.
double face_integral(const std::vector<double>& v, double dx) {
  std::vector<double> w(v);
  w.front() *= 0.5;
  w.back() *= 0.5;
  return pairwise_sum(w) * dx;
}

TransverseSpectrum spectrum_of(const Field& f, const HalfSpaceGrid& g) {
  TransverseSpectrum out;
  const int n2 = g.n2, n3 = g.n3;
  const int nc = n3 / 2 + 1;
  const std::size_t P = g.plane();
  std::vector<double> in(P);
  std::vector<std::complex<double>> spec(static_cast<std::size_t>(n2) * nc);
  fftw_plan plan = fftw_plan_dft_r2c_2d(n2, n3, in.data(),
                                        reinterpret_cast<fftw_complex*>(spec.data()),
                                        FFTW_ESTIMATE);
  std::vector<double> nz(g.n1), gr(g.n1);
  const double norm = 1.0 / static_cast<double>(P);
  for (int i = 0; i < g.n1; ++i) {
    std::copy(f.begin() + i * P, f.begin() + (i + 1) * P, in.begin());
    fftw_execute(plan);
    double a = 0.0, b = 0.0;
    for (int j = 0; j < n2; ++j) {
      const int k2 = j <= n2 / 2 ? j : j - n2;
      for (int k = 0; k < nc; ++k) {
        if (j == 0 && k == 0) continue;
        const double mult = (k == 0 || (n3 % 2 == 0 && k == n3 / 2)) ? 1.0 : 2.0;
        const double e = mult * std::norm(spec[static_cast<std::size_t>(j) * nc + k]);
        a += e;
        b += e * kTwoPi * kTwoPi * static_cast<double>(k2 * k2 + k * k);
      }
    }
    // Parseval on the unit torus: sum |f|^2 h2 h3 = sum |F|^2 / P^2.
    nz[i] = a * norm * norm;
    gr[i] = b * norm * norm;
  }
  fftw_destroy_plan(plan);
  out.nonzero_sq = pairwise_sum(nz) * g.dx1;
  out.grad_sq = pairwise_sum(gr) * g.dx1;
  return out;
}

Field nonzero_part(const Field& f, const HalfSpaceGrid& g) {
  const std::size_t P = g.plane();
  Field out(f.size());
  for (int i = 0; i < g.n1; ++i) {
    const auto b = f.begin() + i * P;
    const double mean = pairwise_sum(std::span<const double>(&*b, P)) / static_cast<double>(P);
    for (std::size_t p = 0; p < P; ++p) out[i * P + p] = f[i * P + p] - mean;
  }
  return out;
}

}  // namespace

PerturbationField perturbation(const State& state, const ProfileTable& table, double alpha,
                               const HalfSpaceGrid& grid) {
  PerturbationField f;
  const std::size_t n = grid.lattice_size();
  for (Lattice* l : {&f.phi, &f.psi1, &f.psi2, &f.psi3, &f.zeta1, &f.zeta2, &f.zeta3}) {
    l->assign(n, 0.0);
  }
  f.t = state.t;
  f.alpha = alpha;
  const double shift = alpha - table.conn.s * state.t;
  const std::size_t P = grid.plane();
  for (int i = 0; i < grid.n1; ++i) {
    const ProfileSample p = profile_eval(table, grid.x1(i) + shift);
    const std::size_t r = grid.row(i);
    for (std::size_t q = r; q < r + P; ++q) {
      const double rho = state.rho[q];
      f.phi[q] = rho - p.rho_bar;
      f.psi1[q] = state.m1[q] - p.m_bar;
      f.psi2[q] = state.m2[q];
      f.psi3[q] = state.m3[q];
      f.zeta1[q] = state.m1[q] / rho - p.u1_bar;
      f.zeta2[q] = state.m2[q] / rho;
      f.zeta3[q] = state.m3[q] / rho;
    }
  }
  return f;
}

double sup_norm(const PerturbationField& f, const HalfSpaceGrid& grid) {
  double m = 0.0;
  const std::size_t b = grid.row(0), e = b + grid.interior_size();
  for (const Lattice* l : {&f.phi, &f.zeta1, &f.zeta2, &f.zeta3}) {
    for (std::size_t c = b; c < e; ++c) m = std::max(m, std::abs((*l)[c]));
  }
  return m;
}

Norms discrete_norms(const Lattice& field, const HalfSpaceGrid& grid) {
  return norms_of(interior(field, grid), grid);
}

TransverseSpectrum transverse_spectrum(const Lattice& field, const HalfSpaceGrid& grid) {
  return spectrum_of(interior(field, grid), grid);
}

double relative_pressure_potential(const GasParams& gas, double rho, double rho_bar) {
  if (gas.gamma == 2.0) {
    const double d = rho - rho_bar;
    return gas.a * d * d / rho;
  }
  const double pb = pressure(gas, rho_bar);
  auto f = [&](double s) { return (pressure(gas, s) - pb) / (s * s); };
  return boost::math::quadrature::gauss<double, 10>::integrate(f, rho_bar, rho);
}

const std::vector<std::string>& energy_csv_columns() {
  static const std::vector<std::string> cols{
      "t",           "E",           "N_inf",           "diss_psi_weighted",
      "diss_zeta1",  "diss_grad",   "bdry_psi",        "bdry_phi",
      "bdry_zeta_prime", "lyapunov", "rel_entropy",    "Phi_at_wall",
      "A_of_t",      "nonzero_mode_norm", "shift_alpha", "antideriv_residual_1",
      "antideriv_residual_2", "nonlinear_norm", "trunc_bound", "phi0_max",
      "poincare_ratio"};
  return cols;
}

std::string energy_csv_header() {
  std::string s;
  for (const auto& c : energy_csv_columns()) {
    if (!s.empty()) s += ',';
    s += c;
  }
  return s;
}

std::string energy_csv_row(const EnergyRecord& r) {
  const double v[] = {r.t,
                      r.E,
                      r.N_inf,
                      r.diss_psi_weighted,
                      r.diss_zeta1,
                      r.diss_grad,
                      r.bdry_psi,
                      r.bdry_phi,
                      r.bdry_zeta_prime,
                      r.lyapunov,
                      r.rel_entropy,
                      r.Phi_at_wall,
                      r.A_of_t,
                      r.nonzero_mode_norm,
                      r.shift_alpha,
                      r.antideriv_residual_1,
                      r.antideriv_residual_2,
                      r.nonlinear_norm,
                      r.trunc_bound,
                      r.phi0_max,
                      r.poincare_ratio};
  std::string s;
  char buf[32];
  for (double x : v) {
    if (!s.empty()) s += ',';
    std::snprintf(buf, sizeof buf, "%.17g", x);
    s += buf;
  }
  return s;
}

EnergyRecord energy_record(const State& state, const ProfileTable& table, double alpha,
                           const BoundarySpec& bc, const HalfSpaceGrid& grid) {
  EnergyRecord r;
  r.t = state.t;
  r.shift_alpha = alpha;
  const double shift = alpha - table.conn.s * state.t;
  const double dx = grid.dx1;
  const std::size_t P = grid.plane();

  const PerturbationField pf = perturbation(state, table, alpha, grid);
  const Field phi = interior(pf.phi, grid);
  const Field z1 = interior(pf.zeta1, grid);
  const Field z2 = interior(pf.zeta2, grid);
  const Field z3 = interior(pf.zeta3, grid);

  const Norms nphi = norms_of(phi, grid);
  const Norms nz1 = norms_of(z1, grid), nz2 = norms_of(z2, grid), nz3 = norms_of(z3, grid);
  r.N_inf = sup_norm(pf, grid);
  r.diss_zeta1 = nz1.l2 * nz1.l2;

  double grad_h2 = 0.0;
  for (const Field* z : {&z1, &z2, &z3}) {
    for (const Field& d : {d_x1(*z, grid), d_trans(*z, grid, 2, 1), d_trans(*z, grid, 3, 1)}) {
      const double h = norms_of(d, grid).h2;
      grad_h2 += h * h;
    }
  }
  r.diss_grad = nphi.h2 * nphi.h2 + grad_h2;

  const ZeroModeLines z = zero_mode_lines(grid, table, alpha, state);
  const AntiderivativeState a = antiderivative(grid, z.phi, z.psi1, state.t);
  r.Phi_at_wall = a.Phi.front();
  r.trunc_bound = a.trunc_bound;
  for (double v : z.phi) r.phi0_max = std::max(r.phi0_max, std::abs(v));
  r.A_of_t = boundary_driver_A(table, alpha, state.t);

  const int n1 = grid.n1;
  std::vector<double> pp(n1 + 1), lyap(n1 + 1), diss(n1 + 1);
  for (int i = 0; i <= n1; ++i) {
    const ProfileSample p = profile_eval(table, i * dx + shift);
    pp[i] = a.Phi[i] * a.Phi[i] + a.Psi[i] * a.Psi[i];
    lyap[i] = 0.5 * a.Phi[i] * a.Phi[i] + a.Psi[i] * a.Psi[i] / (2.0 * p.w_bar);
    diss[i] = std::abs(p.u1_prime) * a.Psi[i] * a.Psi[i];
  }
  const double pp_norm = std::sqrt(face_integral(pp, dx));
  r.lyapunov = face_integral(lyap, dx);
  r.diss_psi_weighted = face_integral(diss, dx);
  const double hsum = nphi.h2 * nphi.h2 + nz1.h2 * nz1.h2 + nz2.h2 * nz2.h2 + nz3.h2 * nz3.h2;
  r.E = pp_norm + std::sqrt(hsum);

  const ProfileSample wall = profile_eval(table, shift);
  r.bdry_psi = std::abs(wall.u1_bar) * a.Psi.front() * a.Psi.front();
  double rho0 = 0.0;
  {
    const std::size_t b = grid.row(0);
    rho0 = pairwise_sum(std::span<const double>(&state.rho[b], P)) / static_cast<double>(P);
  }
  const double phi_wall = rho0 - wall.rho_bar;
  r.bdry_phi = std::abs(wall.u1_prime) * phi_wall * phi_wall;
  {
    std::vector<double> tr(P);
    const std::size_t b = grid.row(0);
    for (std::size_t p = 0; p < P; ++p) {
      const double face = 0.5 * (1.0 + slip_ghost_factor(bc.k_wall[p], dx));
      const double u2 = face * state.m2[b + p] / state.rho[b + p];
      const double u3 = face * state.m3[b + p] / state.rho[b + p];
      tr[p] = u2 * u2 + u3 * u3;
    }
    r.bdry_zeta_prime = pairwise_sum(tr) * grid.torus_weight();
  }

  {
    std::vector<double> ent(grid.interior_size());
    for (int i = 0; i < n1; ++i) {
      const double rb = z.profile[i].rho_bar;
      for (std::size_t p = 0; p < P; ++p) {
        const std::size_t c = i * P + p;
        const double rho = state.rho[grid.row(0) + c];
        const double zz = z1[c] * z1[c] + z2[c] * z2[c] + z3[c] * z3[c];
        ent[c] = rho * relative_pressure_potential(table.gas, rho, rb) + 0.5 * rho * zz;
      }
    }
    r.rel_entropy = pairwise_sum(ent) * grid.cell_volume();
  }

  double nz_sq = 0.0;
  for (const Field* f : {&phi, &z1, &z2, &z3}) {
    nz_sq += sum_sq(nonzero_part(*f, grid)) * grid.cell_volume();
  }
  r.nonzero_mode_norm = std::sqrt(nz_sq);

  const TransverseSpectrum sp = spectrum_of(phi, grid);
  r.poincare_ratio = sp.grad_sq > 0.0 ? kTwoPi * std::sqrt(sp.nonzero_sq / sp.grad_sq) : 0.0;
  return r;
}

void attach_residual(EnergyRecord& r, const AntiderivResidual& res) {
  r.antideriv_residual_1 = res.res1;
  r.antideriv_residual_2 = res.res2;
  r.nonlinear_norm = res.nonlinear_norm();
}

double weighted_psi_dissipation(const State& state, const ProfileTable& table, double alpha,
                                const HalfSpaceGrid& grid) {
  const double shift = alpha - table.conn.s * state.t;
  const std::size_t P = grid.plane();
  const int n1 = grid.n1;
  std::vector<double> psi(n1);
  for (int i = 0; i < n1; ++i) {
    const ProfileSample p = profile_eval(table, grid.x1(i) + shift);
    const std::size_t b = grid.row(i);
    psi[i] = pairwise_sum(std::span<const double>(&state.m1[b], P)) / static_cast<double>(P) -
             p.m_bar;
  }
  std::vector<double> w(n1 + 1);
  double Psi = 0.0;
  for (int i = n1; i >= 0; --i) {
    if (i < n1) Psi -= psi[i] * grid.dx1;
    w[i] = std::abs(profile_eval(table, i * grid.dx1 + shift).u1_prime) * Psi * Psi;
  }
  return face_integral(w, grid.dx1);
}

std::string InequalityReport::to_json() const {
  nlohmann::ordered_json j;
  j["samples"] = samples;
  j["seed"] = seed;
  j["poincare_equality_ratio"] = poincare_equality_ratio;
  j["poincare_equality_target"] = 1.0 / kTwoPi;
  j["poincare_worst"] = poincare_worst;
  j["agmon_equality_ratio"] = agmon_equality_ratio;
  j["agmon_worst"] = agmon_worst;
  j["pythagoras_worst"] = pythagoras_worst;
  j["zero_of_nonzero_worst"] = zero_of_nonzero_worst;
  j["gn3d_ratio_max"] = gn3d_ratio_max;
  j["pass"] = pass;
  return j.dump(2);
}

namespace {

struct LineNorms {
  double sup, l2, dl2;
};

// Cell-centred samples on [0, L]; derivative central inside, one-sided at the ends.
LineNorms line_norms(const std::vector<double>& g, double dx) {
  const std::size_t n = g.size();
  double sup = 0.0;
  std::vector<double> sq(n), dsq(n);
  for (std::size_t i = 0; i < n; ++i) {
    sup = std::max(sup, std::abs(g[i]));
    double d;
    if (i == 0) {
      d = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dx);
    } else if (i + 1 == n) {
      d = (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * dx);
    } else {
      d = (g[i + 1] - g[i - 1]) / (2.0 * dx);
    }
    sq[i] = g[i] * g[i];
    dsq[i] = d * d;
  }
  return {sup, std::sqrt(pairwise_sum(sq) * dx), std::sqrt(pairwise_sum(dsq) * dx)};
}

double agmon_ratio(const std::vector<double>& g, double dx) {
  const LineNorms n = line_norms(g, dx);
  return n.sup * n.sup / (2.0 * n.l2 * n.dl2);
}

}  // namespace

InequalityReport inequality_checks(int sample_count, std::uint64_t seed) {
  InequalityReport rep;
  rep.samples = sample_count;
  rep.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);

  // Equality case of the torus bound.
  {
    const HalfSpaceGrid g = make_grid(1.0, 8, 16, 16);
    Field f(g.interior_size());
    for (int i = 0; i < g.n1; ++i)
      for (int j = 0; j < g.n2; ++j)
        for (int k = 0; k < g.n3; ++k) f[i * g.plane() + j * g.n3 + k] = std::sin(kTwoPi * g.x2(j));
    const TransverseSpectrum s = spectrum_of(f, g);
    rep.poincare_equality_ratio = std::sqrt(s.nonzero_sq / s.grad_sq);
  }
  // Equality case of the half-line bound.
  {
    const double dx = 0.01;
    std::vector<double> g(4000);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::exp(-(i + 0.5) * dx);
    rep.agmon_equality_ratio = agmon_ratio(g, dx);
  }

  const HalfSpaceGrid g = make_grid(8.0, 64, 16, 16);
  const std::size_t P = g.plane();
  for (int sample = 0; sample < sample_count; ++sample) {
    // Random trigonometric polynomial in x' with x1-decaying coefficients.
    struct Term {
      int k2, k3;
      double amp, decay, ph, slope;
    };
    std::vector<Term> terms;
    for (int k2 = -2; k2 <= 2; ++k2)
      for (int k3 = -2; k3 <= 2; ++k3)
        terms.push_back({k2, k3, unit(rng), 1.0 + 0.5 * (unit(rng) + 1.0), phase(rng), unit(rng)});
    Field f(g.interior_size());
    for (int i = 0; i < g.n1; ++i) {
      const double x = g.x1(i);
      for (int j = 0; j < g.n2; ++j) {
        for (int k = 0; k < g.n3; ++k) {
          double v = 0.0;
          for (const Term& t : terms) {
            v += t.amp * (1.0 + t.slope * x) * std::exp(-t.decay * x) *
                 std::cos(kTwoPi * (t.k2 * g.x2(j) + t.k3 * g.x3(k)) + t.ph);
          }
          f[i * P + j * g.n3 + k] = v;
        }
      }
    }
    const TransverseSpectrum s = spectrum_of(f, g);
    if (s.grad_sq > 0.0) {
      rep.poincare_worst = std::max(rep.poincare_worst, kTwoPi * std::sqrt(s.nonzero_sq / s.grad_sq));
    }

    const Field nz = nonzero_part(f, g);
    std::vector<double> zero(g.n1);
    for (int i = 0; i < g.n1; ++i) {
      zero[i] = pairwise_sum(std::span<const double>(&f[i * P], P)) / static_cast<double>(P);
      const double m =
          pairwise_sum(std::span<const double>(&nz[i * P], P)) / static_cast<double>(P);
      rep.zero_of_nonzero_worst = std::max(rep.zero_of_nonzero_worst, std::abs(m));
    }
    const double total = sum_sq(f) * g.cell_volume();
    std::vector<double> zsq(g.n1);
    for (int i = 0; i < g.n1; ++i) zsq[i] = zero[i] * zero[i];
    const double split = pairwise_sum(zsq) * g.dx1 + sum_sq(nz) * g.cell_volume();
    rep.pythagoras_worst = std::max(rep.pythagoras_worst, std::abs(total - split) / total);

    // Empirical constant of the second term of the 3-D interpolation bound.
    {
      const Norms n = norms_of(f, g);
      const double grad = std::sqrt(std::max(0.0, n.h1 * n.h1 - n.l2 * n.l2));
      const double hess = std::sqrt(std::max(0.0, n.h2 * n.h2 - n.h1 * n.h1));
      const double first = std::sqrt(2.0) * std::sqrt(n.l2 * grad);
      if (grad > 0.0 && hess > 0.0) {
        const double c = (n.linf - first) / std::sqrt(grad * hess);
        rep.gn3d_ratio_max = std::max(rep.gn3d_ratio_max, std::max(0.0, c));
      }
    }

    // Half-line bound on a random decaying line.
    {
      const double dx = 0.01;
      std::vector<double> line(4000, 0.0);
      for (int t = 0; t < 3; ++t) {
        const double c = unit(rng), a = 0.5 + 1.25 * (unit(rng) + 1.0), b = 1.5 * (unit(rng) + 1.0),
                     ph = phase(rng);
        for (std::size_t i = 0; i < line.size(); ++i) {
          const double x = (i + 0.5) * dx;
          line[i] += c * std::exp(-a * x) * std::cos(b * x + ph);
        }
      }
      rep.agmon_worst = std::max(rep.agmon_worst, agmon_ratio(line, dx));
    }
  }

  rep.pass = std::abs(rep.poincare_equality_ratio - 1.0 / kTwoPi) <= 1e-6 &&
             std::abs(rep.agmon_equality_ratio - 1.0) <= 0.02 && rep.poincare_worst <= 1.0 + 1e-12 &&
             rep.agmon_worst <= 1.0 && rep.pythagoras_worst <= 1e-12 &&
             rep.zero_of_nonzero_worst <= 1e-13;
  return rep;
}

}  // namespace shocklab
