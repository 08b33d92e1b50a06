#include "shocklab/grid_fields.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "shocklab/errors.hpp"
#include "shocklab/parallel.hpp"

namespace shocklab {

double HalfSpaceGrid::min_spacing() const noexcept { return std::min({dx1, h2, h3}); }

HalfSpaceGrid make_grid(double L, int n1, int n2, int n3) {
  if (!(L > 0.0) || n1 < 8 || n2 < 1 || n3 < 1) {
    std::ostringstream os;
    os << "need L > 0, N1 >= 8, N2 >= 1, N3 >= 1 (got L=" << L << ", " << n1 << "x" << n2 << "x"
       << n3 << ")";
    throw Error(ErrorCode::kInvalidGrid, os.str());
  }
  HalfSpaceGrid g;
  g.L = L;
  g.n1 = n1;
  g.n2 = n2;
  g.n3 = n3;
  g.dx1 = L / n1;
  g.h2 = 1.0 / n2;
  g.h3 = 1.0 / n3;
  return g;
}

State make_state(const HalfSpaceGrid& grid) {
  State s;
  const std::size_t n = grid.lattice_size();
  s.rho.assign(n, 0.0);
  s.m1.assign(n, 0.0);
  s.m2.assign(n, 0.0);
  s.m3.assign(n, 0.0);
  return s;
}

DensityWindow density_window(const ShockConnection& conn) {
  return {0.5 * conn.left.rho, 0.5 * conn.left.rho + conn.right.rho};
}

BoundarySpec make_boundary(const HalfSpaceGrid& grid, const ShockConnection& conn, double k_mean,
                           double k_amp) {
  BoundarySpec bc;
  bc.k_lo = k_mean - std::abs(k_amp);
  bc.k_hi = k_mean + std::abs(k_amp);
  if (!(bc.k_lo > 0.0)) {
    throw Error(ErrorCode::kConfig, "slip length must stay positive: need bc.k_mean > |bc.k_amp|");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  bc.k_wall.resize(grid.plane());
  for (int j = 0; j < grid.n2; ++j) {
    for (int k = 0; k < grid.n3; ++k) {
      const double v =
          k_mean + k_amp * std::sin(two_pi * grid.x2(j)) * std::cos(two_pi * grid.x3(k));
      bc.k_wall[static_cast<std::size_t>(j) * grid.n3 + k] = std::clamp(v, bc.k_lo, bc.k_hi);
    }
  }
  bc.far_rho = conn.right.rho;
  bc.far_m1 = conn.right.rho * conn.right.u1;
  bc.window = density_window(conn);
  return bc;
}

double slip_ghost_factor(double k, double dx1) noexcept {
  if (std::isinf(k)) return 1.0;
  return (2.0 * k - dx1) / (2.0 * k + dx1);
}

void apply_navier_bc(State& s, const BoundarySpec& bc, const HalfSpaceGrid& grid) {
  const std::size_t plane = grid.plane();
  const std::size_t c0 = grid.row(0), c1 = grid.row(1);
  const std::size_t g1 = grid.row(-1), g2 = grid.row(-2);
  for (std::size_t p = 0; p < plane; ++p) {
    const double r0 = s.rho[c0 + p];
    const double r1 = s.rho[c1 + p];
    s.rho[g1 + p] = r0;
    s.rho[g2 + p] = r1;
    // Normal velocity: odd reflection, zero at the wall face.
    s.m1[g1 + p] = -s.m1[c0 + p];
    s.m1[g2 + p] = -s.m1[c1 + p];
    // Tangential velocity: u_w = k du/dx1 at the face, linear extension beyond.
    const double f = slip_ghost_factor(bc.k_wall[p], grid.dx1);
    for (Lattice* m : {&s.m2, &s.m3}) {
      const double uc = (*m)[c0 + p] / r0;
      const double ug1 = f * uc;
      const double ug2 = 2.0 * ug1 - uc;
      (*m)[g1 + p] = r0 * ug1;
      (*m)[g2 + p] = r1 * ug2;
    }
  }
  for (int i = grid.n1; i < grid.n1 + HalfSpaceGrid::kGhost; ++i) {
    const std::size_t r = grid.row(i);
    for (std::size_t p = 0; p < plane; ++p) {
      s.rho[r + p] = bc.far_rho;
      s.m1[r + p] = bc.far_m1;
      s.m2[r + p] = 0.0;
      s.m3[r + p] = 0.0;
    }
  }
}

double bump(double x, double center, double halfwidth) noexcept {
  const double r = (x - center) / halfwidth;
  if (std::abs(r) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

namespace {

// Uniform [0,1) from the top 53 bits; identical on every platform.
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

struct TransverseMode {
  int k2, k3;
};

constexpr std::array<TransverseMode, 3> kModes{{{1, 0}, {0, 1}, {1, 1}}};

// A mode averages to zero on the discrete torus unless both wavenumbers alias
// to zero.
bool mean_free(const HalfSpaceGrid& g, const TransverseMode& m) {
  return (m.k2 % g.n2 != 0) || (m.k3 % g.n3 != 0);
}

}  // namespace

State init_state(const HalfSpaceGrid& grid, const ProfileTable& table, double alpha,
                 const PerturbationSpec& pert) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::kDomain, "shift must be finite");
  if (!(pert.transverse_amp >= 0.0)) {
    throw Error(ErrorCode::kDomain, "perturbation amplitude must be non-negative");
  }
  const bool has_bump = pert.zero_mass != 0.0;
  const bool has_modes = pert.transverse_amp > 0.0;
  if ((has_bump || has_modes) &&
      (pert.center - pert.halfwidth < 0.0 || pert.center + pert.halfwidth > grid.L)) {
    throw Error(ErrorCode::kDomain, "perturbation support must lie inside (0, L)");
  }

  State s = make_state(grid);
  const std::size_t plane = grid.plane();

  std::vector<double> bump_line(grid.n1, 0.0);
  if (has_bump) {
    double mass = 0.0;
    for (int i = 0; i < grid.n1; ++i) {
      bump_line[i] = bump(grid.x1(i), pert.center, pert.halfwidth);
      mass += bump_line[i];
    }
    mass *= grid.dx1;
    if (!(mass > 0.0)) throw Error(ErrorCode::kDomain, "bump is not resolved by the grid");
    for (double& b : bump_line) b *= pert.zero_mass / mass;
  }

  // Phases for each (field, mode); drawn in a fixed order so the state is a
  // pure function of the seed.
  std::mt19937_64 rng(pert.seed);
  std::array<std::array<double, kModes.size()>, 4> phase{};
  for (auto& field : phase) {
    for (double& p : field) p = 2.0 * std::numbers::pi * unit_draw(rng);
  }
  int active = 0;
  for (const auto& m : kModes) active += mean_free(grid, m) ? 1 : 0;

  std::vector<std::array<double, 4>> pattern(plane, {0.0, 0.0, 0.0, 0.0});
  if (has_modes && active > 0) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int j = 0; j < grid.n2; ++j) {
      for (int k = 0; k < grid.n3; ++k) {
        auto& cell = pattern[static_cast<std::size_t>(j) * grid.n3 + k];
        for (int f = 0; f < 4; ++f) {
          double v = 0.0;
          for (std::size_t m = 0; m < kModes.size(); ++m) {
            if (!mean_free(grid, kModes[m])) continue;
            v += std::cos(two_pi * (kModes[m].k2 * grid.x2(j) + kModes[m].k3 * grid.x3(k)) +
                          phase[f][m]);
          }
          cell[f] = pert.transverse_amp * v / active;
        }
      }
    }
  }

  const DensityWindow window = density_window(table.conn);
  for (int i = 0; i < grid.n1; ++i) {
    const ProfileSample ps = profile_eval(table, grid.x1(i) + alpha);
    const double env = has_modes ? bump(grid.x1(i), pert.center, pert.halfwidth) : 0.0;
    const std::size_t r = grid.row(i);
    for (std::size_t p = 0; p < plane; ++p) {
      const auto& c = pattern[p];
      const double rho = ps.rho_bar + bump_line[i] + env * c[0];
      if (!window.contains(rho)) {
        std::ostringstream os;
        os << "initial density " << rho << " at x1=" << grid.x1(i) << " leaves [" << window.lo
           << ", " << window.hi << "]";
        throw Error(ErrorCode::kMassTooLarge, os.str());
      }
      s.rho[r + p] = rho;
      s.m1[r + p] = ps.m_bar + env * c[1];
      s.m2[r + p] = env * c[2];
      s.m3[r + p] = env * c[3];
    }
  }
  s.t = 0.0;
  return s;
}

std::vector<double> zero_mode(const HalfSpaceGrid& grid, const Lattice& field) {
  std::vector<double> line(grid.n1);
  const std::size_t plane = grid.plane();
  const double w = grid.torus_weight();
  parallel_for(0, grid.n1, [&](std::ptrdiff_t lo, std::ptrdiff_t hi) {
    for (std::ptrdiff_t i = lo; i < hi; ++i) {
      const std::span<const double> slab(field.data() + grid.row(static_cast<int>(i)), plane);
      line[i] = pairwise_sum(slab) * w;
    }
  });
  return line;
}

ModeSplit decompose_modes(const HalfSpaceGrid& grid, const Lattice& field) {
  ModeSplit out;
  out.zero = zero_mode(grid, field);
  out.nonzero.assign(field.size(), 0.0);
  const std::size_t plane = grid.plane();
  for (int i = 0; i < grid.n1; ++i) {
    const std::size_t r = grid.row(i);
    for (std::size_t p = 0; p < plane; ++p) out.nonzero[r + p] = field[r + p] - out.zero[i];
  }
  return out;
}

double inner_product(const HalfSpaceGrid& grid, const Lattice& a, const Lattice& b) {
  const std::size_t begin = grid.row(0);
  const std::size_t n = grid.interior_size();
  std::vector<double> prod(n);
  for (std::size_t q = 0; q < n; ++q) prod[q] = a[begin + q] * b[begin + q];
  return pairwise_sum(prod) * grid.cell_volume();
}

double total_mass(const HalfSpaceGrid& grid, const Lattice& rho) {
  return pairwise_sum(std::span<const double>(rho.data() + grid.row(0), grid.interior_size())) *
         grid.cell_volume();
}

namespace {

constexpr std::array<char, 4> kMagic{'C', 'N', 'S', '3'};

template <typename T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::array<unsigned char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &v, sizeof(T));
    std::reverse(bytes.begin(), bytes.end());
    std::memcpy(&v, bytes.data(), sizeof(T));
    return v;
  }
}

template <typename T>
void put(std::ostream& os, T v) {
  v = to_little(v);
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw Error(ErrorCode::kIo, "truncated snapshot");
  return to_little(v);
}

}  // namespace

void write_snapshot(const std::filesystem::path& path, const HalfSpaceGrid& grid,
                    const State& state) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::kIo, "cannot open " + path.string() + " for writing");
  os.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(os, kSnapshotVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(grid.n1));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(grid.n2));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(grid.n3));
  put<double>(os, grid.L);
  put<double>(os, state.t);
  const std::size_t begin = grid.row(0);
  const std::size_t n = grid.interior_size();
  std::vector<double> buf(n);
  for (const Lattice* f : {&state.rho, &state.m1, &state.m2, &state.m3}) {
    for (std::size_t q = 0; q < n; ++q) buf[q] = to_little((*f)[begin + q]);
    os.write(reinterpret_cast<const char*>(buf.data()),
             static_cast<std::streamsize>(n * sizeof(double)));
  }
  if (!os) throw Error(ErrorCode::kIo, "failed writing " + path.string());
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::array<char, 4> magic{};
  is.read(magic.data(), magic.size());
  if (!is || magic != kMagic) throw Error(ErrorCode::kIo, path.string() + " is not a CNS3 snapshot");
  const auto version = get<std::uint32_t>(is);
  if (version != kSnapshotVersion) {
    throw Error(ErrorCode::kIo, "unsupported snapshot version " + std::to_string(version));
  }
  const auto n1 = get<std::uint32_t>(is);
  const auto n2 = get<std::uint32_t>(is);
  const auto n3 = get<std::uint32_t>(is);
  const double L = get<double>(is);
  Snapshot snap;
  snap.grid = make_grid(L, static_cast<int>(n1), static_cast<int>(n2), static_cast<int>(n3));
  snap.state = make_state(snap.grid);
  snap.state.t = get<double>(is);
  const std::size_t begin = snap.grid.row(0);
  const std::size_t n = snap.grid.interior_size();
  std::vector<double> buf(n);
  for (Lattice* f : {&snap.state.rho, &snap.state.m1, &snap.state.m2, &snap.state.m3}) {
    is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(n * sizeof(double)));
    if (!is) throw Error(ErrorCode::kIo, "truncated snapshot " + path.string());
    for (std::size_t q = 0; q < n; ++q) (*f)[begin + q] = to_little(buf[q]);
  }
  return snap;
}

}  // namespace shocklab
