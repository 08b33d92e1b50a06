#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "shocklab/profile.hpp"

namespace shocklab {

/// Cell-centred grid on [0, L] x T^2 with a unit torus. Lattices carry two
/// ghost layers on each end in x1 and none transversally (periodic wrap).
/// Storage is row-major with x3 fastest.
struct HalfSpaceGrid {
  static constexpr int kGhost = 2;

  double L = 0.0;
  int n1 = 0, n2 = 0, n3 = 0;
  double dx1 = 0.0, h2 = 0.0, h3 = 0.0;

  std::size_t plane() const noexcept { return static_cast<std::size_t>(n2) * n3; }
  std::size_t lattice_size() const noexcept { return (n1 + 2 * kGhost) * plane(); }
  std::size_t interior_size() const noexcept { return n1 * plane(); }
  /// i may range over [-kGhost, n1 + kGhost).
  std::size_t index(int i, int j, int k) const noexcept {
    return (static_cast<std::size_t>(i + kGhost) * n2 + j) * n3 + k;
  }
  std::size_t row(int i) const noexcept { return static_cast<std::size_t>(i + kGhost) * plane(); }

  double x1(int i) const noexcept { return (i + 0.5) * dx1; }
  double x2(int j) const noexcept { return (j + 0.5) * h2; }
  double x3(int k) const noexcept { return (k + 0.5) * h3; }
  double torus_weight() const noexcept { return h2 * h3; }
  double cell_volume() const noexcept { return dx1 * h2 * h3; }
  double min_spacing() const noexcept;

  bool operator==(const HalfSpaceGrid&) const = default;
};

HalfSpaceGrid make_grid(double L, int n1, int n2, int n3);

using Lattice = std::vector<double>;

struct State {
  Lattice rho, m1, m2, m3;
  double t = 0.0;
};

State make_state(const HalfSpaceGrid& grid);

/// Admissible density window [rho_-/2, rho_-/2 + rho_+].
struct DensityWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double rho) const noexcept { return rho >= lo && rho <= hi; }
};

DensityWindow density_window(const ShockConnection& conn);

struct BoundarySpec {
  std::vector<double> k_wall;  ///< slip length per wall cell (n2 * n3)
  double k_lo = 0.0;
  double k_hi = 0.0;
  double far_rho = 0.0;  ///< fixed far-field state
  double far_m1 = 0.0;
  DensityWindow window;
};

/// k(x') = k_mean + k_amp sin(2 pi x2) cos(2 pi x3), far state (rho+, rho+ u+).
BoundarySpec make_boundary(const HalfSpaceGrid& grid, const ShockConnection& conn,
                           double k_mean = 0.5, double k_amp = 0.2);

/// Ratio u_ghost / u_interior of the second-order slip closure.
double slip_ghost_factor(double k, double dx1) noexcept;

void apply_navier_bc(State& state, const BoundarySpec& bc, const HalfSpaceGrid& grid);

struct PerturbationSpec {
  double zero_mass = -0.02;       ///< integral of the zero-mode density bump
  double transverse_amp = 1e-2;   ///< max amplitude of the non-zero modes
  std::uint64_t seed = 1;
  double center = 10.0;           ///< x1 centre of the bump and of the envelope
  double halfwidth = 4.0;         ///< support half-width in x1

  bool operator==(const PerturbationSpec&) const = default;
};

/// Smooth compact bump exp(1 - 1/(1 - r^2)), r = (x - center) / halfwidth.
double bump(double x, double center, double halfwidth) noexcept;

/// Samples the shifted profile and adds the perturbation: a density bump with
/// discrete mass zero_mass plus mean-free trigonometric modes on all four
/// fields with seed-derived phases.
State init_state(const HalfSpaceGrid& grid, const ProfileTable& table, double alpha,
                 const PerturbationSpec& pert);

struct ModeSplit {
  std::vector<double> zero;  ///< n1 values
  Lattice nonzero;           ///< same layout as the input, ghosts zero
};

/// D0 f = torus average, Dneq f = f - D0 f, on interior cells.
std::vector<double> zero_mode(const HalfSpaceGrid& grid, const Lattice& field);
ModeSplit decompose_modes(const HalfSpaceGrid& grid, const Lattice& field);

/// Cell-volume weighted inner product over interior cells.
double inner_product(const HalfSpaceGrid& grid, const Lattice& a, const Lattice& b);
/// Sum of rho * volume over the interior.
double total_mass(const HalfSpaceGrid& grid, const Lattice& rho);

inline constexpr std::uint32_t kSnapshotVersion = 1;

void write_snapshot(const std::filesystem::path& path, const HalfSpaceGrid& grid,
                    const State& state);

struct Snapshot {
  HalfSpaceGrid grid;
  State state;
};

Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace shocklab
