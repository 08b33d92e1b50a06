#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "shocklab/errors.hpp"
#include "shocklab/grid_fields.hpp"

using namespace shocklab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Setup {
  GasParams gas;
  ShockConnection conn = solve_hugoniot(gas, 1.0, 0.1);
  ProfileTable table = build_profile(gas, conn);
};

const Setup& setup() {
  static const Setup s;
  return s;
}

Lattice random_field(const HalfSpaceGrid& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  Lattice f(g.lattice_size(), 0.0);
  for (std::size_t q = 0; q < g.interior_size(); ++q) f[g.row(0) + q] = U(rng);
  return f;
}

}  // namespace

TEST(Grid, Spacings) {
  const auto g = make_grid(50.0, 400, 16, 16);
  EXPECT_DOUBLE_EQ(g.dx1, 0.125);
  EXPECT_DOUBLE_EQ(g.h2, 1.0 / 16);
  EXPECT_DOUBLE_EQ(g.h3, 1.0 / 16);
  EXPECT_DOUBLE_EQ(g.torus_weight() * g.plane(), 1.0);
  const auto g1 = make_grid(50.0, 400, 1, 1);
  EXPECT_EQ(g1.torus_weight(), 1.0);
  EXPECT_EQ(g1.plane(), 1u);
  for (int n : {3, 7, 12}) {
    const auto gn = make_grid(1.0, 8, n, n + 2);
    double sum = 0.0;
    for (std::size_t p = 0; p < gn.plane(); ++p) sum += gn.torus_weight();
    EXPECT_NEAR(sum, 1.0, 1e-14);
  }
}

TEST(Grid, InvalidInputs) {
  EXPECT_THROW(make_grid(0.0, 400, 1, 1), Error);
  EXPECT_THROW(make_grid(50.0, 4, 1, 1), Error);
  EXPECT_THROW(make_grid(50.0, 400, 0, 1), Error);
  try {
    make_grid(-1.0, 400, 1, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidGrid);
  }
}

TEST(SlipClosure, Limits) {
  EXPECT_NEAR(slip_ghost_factor(1e-300, 0.1), -1.0, 1e-15);
  EXPECT_EQ(slip_ghost_factor(INFINITY, 0.1), 1.0);
  EXPECT_NEAR(slip_ghost_factor(1e12, 0.1), 1.0, 1e-12);
  EXPECT_EQ(slip_ghost_factor(0.05, 0.1), 0.0);
}

// For u = a + b x1 with a = k b the closure must return the exact ghost values.
TEST(SlipClosure, ExactOnLinearProfiles) {
  const auto& su = setup();
  const auto g = make_grid(10.0, 40, 4, 4);
  const auto bc = make_boundary(g, su.conn);
  State s = make_state(g);
  const double b = 0.3;
  for (int i = 0; i < g.n1; ++i) {
    for (int j = 0; j < g.n2; ++j) {
      for (int k = 0; k < g.n3; ++k) {
        const double kw = bc.k_wall[j * g.n3 + k];
        const std::size_t c = g.index(i, j, k);
        s.rho[c] = 1.0;
        s.m2[c] = kw * b + b * g.x1(i);
        s.m3[c] = -2.0 * (kw * b + b * g.x1(i));
      }
    }
  }
  apply_navier_bc(s, bc, g);
  for (int j = 0; j < g.n2; ++j) {
    for (int k = 0; k < g.n3; ++k) {
      const double kw = bc.k_wall[j * g.n3 + k];
      for (int i : {-1, -2}) {
        const double exact = kw * b + b * g.x1(i);
        EXPECT_NEAR(s.m2[g.index(i, j, k)], exact, 1e-14);
        EXPECT_NEAR(s.m3[g.index(i, j, k)], -2.0 * exact, 1e-14);
      }
    }
  }
}

TEST(NavierBc, ReflectionAndFarState) {
  const auto& su = setup();
  const auto g = make_grid(10.0, 40, 2, 3);
  const auto bc = make_boundary(g, su.conn);
  EXPECT_NEAR(bc.k_lo, 0.3, 1e-15);
  EXPECT_NEAR(bc.k_hi, 0.7, 1e-15);
  for (double k : bc.k_wall) {
    EXPECT_GE(k, bc.k_lo);
    EXPECT_LE(k, bc.k_hi);
  }
  std::mt19937_64 rng(3);
  State s = make_state(g);
  s.rho = random_field(g, rng);
  for (double& r : s.rho) r = 1.0 + 0.1 * r;
  s.m1 = random_field(g, rng);
  apply_navier_bc(s, bc, g);
  for (std::size_t p = 0; p < g.plane(); ++p) {
    EXPECT_EQ(s.rho[g.row(-1) + p], s.rho[g.row(0) + p]);
    EXPECT_EQ(s.rho[g.row(-2) + p], s.rho[g.row(1) + p]);
    // Odd reflection: the face average of m1 is exactly zero.
    EXPECT_EQ(s.m1[g.row(-1) + p] + s.m1[g.row(0) + p], 0.0);
    EXPECT_EQ(s.m1[g.row(-2) + p] + s.m1[g.row(1) + p], 0.0);
    for (int i : {g.n1, g.n1 + 1}) {
      EXPECT_EQ(s.rho[g.row(i) + p], 0.9);
      EXPECT_EQ(s.m1[g.row(i) + p], 0.9 * su.conn.right.u1);
      EXPECT_EQ(s.m2[g.row(i) + p], 0.0);
    }
  }
}

TEST(InitState, UnperturbedEqualsSampledProfile) {
  const auto& su = setup();
  const auto g = make_grid(50.0, 100, 2, 2);
  PerturbationSpec p;
  p.zero_mass = 0.0;
  p.transverse_amp = 0.0;
  const State s = init_state(g, su.table, -3.0, p);
  for (int i = 0; i < g.n1; ++i) {
    const auto ps = profile_eval(su.table, g.x1(i) - 3.0);
    for (std::size_t q = 0; q < g.plane(); ++q) {
      EXPECT_EQ(s.rho[g.row(i) + q], ps.rho_bar);
      EXPECT_EQ(s.m1[g.row(i) + q], ps.m_bar);
      EXPECT_EQ(s.m2[g.row(i) + q], 0.0);
    }
  }
}

TEST(InitState, BumpMassAndDeterminism) {
  const auto& su = setup();
  const auto g = make_grid(50.0, 400, 8, 8);
  PerturbationSpec p;
  p.zero_mass = -0.02;
  p.transverse_amp = 1e-2;
  p.center = 6.0;
  p.halfwidth = 2.0;
  p.seed = 42;
  PerturbationSpec p0 = p;
  p0.zero_mass = 0.0;
  p0.transverse_amp = 0.0;
  const State s = init_state(g, su.table, -1.0, p);
  const State base = init_state(g, su.table, -1.0, p0);
  // Discrete zero-mode mass of the perturbation.
  Lattice diff(s.rho.size());
  for (std::size_t q = 0; q < diff.size(); ++q) diff[q] = s.rho[q] - base.rho[q];
  const auto line = zero_mode(g, diff);
  double mass = 0.0;
  for (double v : line) mass += v * g.dx1;
  EXPECT_NEAR(mass, -0.02, 1e-10);
  // Transverse part is mean-free in every field.
  Lattice dm2 = s.m2;
  for (double v : zero_mode(g, dm2)) EXPECT_NEAR(v, 0.0, 1e-17);

  const State again = init_state(g, su.table, -1.0, p);
  EXPECT_EQ(s.rho, again.rho);
  EXPECT_EQ(s.m1, again.m1);
  EXPECT_EQ(s.m3, again.m3);
  p.seed = 43;
  const State other = init_state(g, su.table, -1.0, p);
  EXPECT_NE(s.m2, other.m2);
}

TEST(InitState, MassTooLarge) {
  const auto& su = setup();
  const auto g = make_grid(50.0, 400, 1, 1);
  PerturbationSpec p;
  p.zero_mass = -5.0;
  p.center = 6.0;
  p.halfwidth = 2.0;
  try {
    init_state(g, su.table, -1.0, p);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMassTooLarge);
  }
}

TEST(Modes, ConstantAndMeanFreeFields) {
  const auto g = make_grid(4.0, 8, 8, 4);
  Lattice c;
  oracle::fill(c, g, [](double, double, double) { return 2.5; });
  auto split = decompose_modes(g, c);
  for (double v : split.zero) EXPECT_NEAR(v, 2.5, 1e-15);
  EXPECT_LT(oracle::max_abs_diff(g, split.nonzero, Lattice(c.size(), 0.0)), 1e-15);

  Lattice f;
  oracle::fill(f, g, [](double, double y, double) { return std::sin(kTwoPi * y); });
  split = decompose_modes(g, f);
  for (double v : split.zero) EXPECT_NEAR(v, 0.0, 1e-16);
  EXPECT_LT(oracle::max_abs_diff(g, split.nonzero, f), 1e-15);
}

TEST(Modes, ProjectionAlgebraAndPythagoras) {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    const auto g = make_grid(3.0, 8 + n % 5, 1 + n % 7, 2 + n % 4);
    const Lattice f = random_field(g, rng);
    const auto split = decompose_modes(g, f);
    const auto again = decompose_modes(g, split.nonzero);
    double scale = 0.0;
    for (double v : f) scale = std::max(scale, std::abs(v));
    for (double v : again.zero) EXPECT_LE(std::abs(v), 1e-13 * scale);
    EXPECT_LT(oracle::max_abs_diff(g, again.nonzero, split.nonzero), 1e-13 * scale);
    // D0 of a zero-mode field returns the same line.
    Lattice z(f.size(), 0.0);
    for (int i = 0; i < g.n1; ++i) {
      for (std::size_t p = 0; p < g.plane(); ++p) z[g.row(i) + p] = split.zero[i];
    }
    const auto zz = zero_mode(g, z);
    for (int i = 0; i < g.n1; ++i) EXPECT_NEAR(zz[i], split.zero[i], 1e-13 * scale);

    const double ff = inner_product(g, f, f);
    double zero_sq = 0.0;
    for (double v : split.zero) zero_sq += v * v * g.dx1;
    const double nz_sq = inner_product(g, split.nonzero, split.nonzero);
    EXPECT_LE(std::abs(ff - zero_sq - nz_sq), 1e-12 * ff);
  }
}

TEST(Snapshot, RoundTripAndLayout) {
  const auto& su = setup();
  const auto g = make_grid(50.0, 16, 2, 3);
  PerturbationSpec p;
  p.center = 5.0;
  p.halfwidth = 3.0;
  State s = init_state(g, su.table, -1.0, p);
  s.t = 1.25;
  const auto path = std::filesystem::temp_directory_path() / "shocklab_snapshot_test.bin";
  write_snapshot(path, g, s);
  const auto snap = read_snapshot(path);
  EXPECT_EQ(snap.grid, g);
  EXPECT_EQ(snap.state.t, 1.25);
  for (std::size_t q = 0; q < g.interior_size(); ++q) {
    EXPECT_EQ(snap.state.rho[g.row(0) + q], s.rho[g.row(0) + q]);
    EXPECT_EQ(snap.state.m3[g.row(0) + q], s.m3[g.row(0) + q]);
  }
  // Header: magic, version, three counts, L, t, then interior lattices.
  std::ifstream in(path, std::ios::binary);
  char magic[4];
  in.read(magic, 4);
  EXPECT_EQ(std::string(magic, 4), "CNS3");
  const auto size = std::filesystem::file_size(path);
  EXPECT_EQ(size, 4u + 4u * 4u + 2u * 8u + 4u * 8u * g.interior_size());
  std::filesystem::remove(path);
}

TEST(Snapshot, RejectsCorruptFile) {
  const auto path = std::filesystem::temp_directory_path() / "shocklab_bad_snapshot.bin";
  {
    std::ofstream out(path, std::ios::binary);
    out << "XXXX0000";
  }
  EXPECT_THROW(read_snapshot(path), Error);
  std::filesystem::remove(path);
}
