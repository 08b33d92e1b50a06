#include "shocklab/profile.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "shocklab/errors.hpp"

namespace shocklab {

namespace {

using boost::math::quadrature::gauss;
using boost::math::quadrature::gauss_kronrod;

constexpr double kQuadratureTol = 1e-12;

double rho_of_u(const ShockConnection& conn, double mass_flux, double u1) {
  return mass_flux / (u1 - conn.s);
}

// R written relative to the nearer end state, taking the offset du = u1 - end
// directly so it keeps full relative precision as du -> 0. The two forms
// differ by the Rankine-Hugoniot momentum residual only.
double rhs_from_end(const GasParams& gas, const ShockConnection& conn, bool near_wall, double du) {
  const double j = -conn.s * conn.left.rho;
  const double up = conn.right.u1;
  const double rho_ref = near_wall ? conn.left.rho : conn.right.rho;
  // rho(u1) - rho_ref without cancellation.
  const double drho = near_wall ? -conn.left.rho * du / (du - conn.s)
                                : -j * du / ((up - conn.s + du) * (up - conn.s));
  const double dp = pressure(gas, rho_ref) * std::expm1(gas.gamma * std::log1p(drho / rho_ref));
  return j * du + dp;
}

double integrate_dxi(const GasParams& gas, const ShockConnection& conn, double ua, double ub) {
  const double up = conn.right.u1;
  const double mid = 0.5 * up;
  // Intervals straddling the midpoint are split so each piece is integrated
  // in the logarithm of the distance to its nearer end state, where the
  // integrand is smooth even as the interval approaches the singular end.
  if ((ua - mid) * (ub - mid) < 0.0) {
    return integrate_dxi(gas, conn, ua, mid) + integrate_dxi(gas, conn, mid, ub);
  }
  const double mt = gas.mu_tilde();
  const bool near_wall = std::abs(ua + ub) < std::abs(up);
  const double end = near_wall ? 0.0 : up;
  const double sign = near_wall ? -1.0 : 1.0;
  auto f = [&](double t) {
    const double d = std::exp(t);
    return mt * sign * d / rhs_from_end(gas, conn, near_wall, sign * d);
  };
  const double ta = std::log(std::abs(ua - end));
  const double tb = std::log(std::abs(ub - end));
  // Integrate over the reference interval: the adaptive routine reports its
  // error estimate in reference coordinates.
  const double mean = 0.5 * (ta + tb);
  const double half = 0.5 * (tb - ta);
  auto g = [&](double x) { return half * f(mean + half * x); };
  double err = 0.0;
  const double val = gauss_kronrod<double, 31>::integrate(g, -1.0, 1.0, 20, kQuadratureTol, &err);
  if (!std::isfinite(val) || err > 1e-10 * std::abs(val) + 1e-13) {
    std::ostringstream os;
    os << "quadrature over [" << ua << ", " << ub << "] reached error " << err;
    throw Error(ErrorCode::kQuadrature, os.str());
  }
  return val;
}

// Least-squares slope of log|y| against x.
double log_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t lo,
                 std::size_t hi) {
  const double n = static_cast<double>(hi - lo);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    const double ly = std::log(std::abs(y[i]));
    sx += x[i];
    sy += ly;
    sxx += x[i] * x[i];
    sxy += x[i] * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void fit_tail_rates(ProfileTable& t) {
  const std::size_t n = t.size();
  double peak = 0.0;
  for (double d : t.u1_prime) peak = std::max(peak, std::abs(d));
  const double cut = 1e-3 * peak;
  std::size_t left_end = 0;
  while (left_end < n && std::abs(t.u1_prime[left_end]) < cut) ++left_end;
  std::size_t right_begin = n;
  while (right_begin > 0 && std::abs(t.u1_prime[right_begin - 1]) < cut) --right_begin;
  if (left_end < 3 || n - right_begin < 3) {
    throw Error(ErrorCode::kQuadrature, "profile tails too short to fit decay rates");
  }
  t.left_rate = log_slope(t.xi, t.u1_prime, 0, left_end);
  t.right_rate = -log_slope(t.xi, t.u1_prime, right_begin, n);
}

struct Interval {
  std::size_t i;
  double h, t;
};

Interval locate(const ProfileTable& t, double xi) {
  const auto it = std::upper_bound(t.xi.begin(), t.xi.end(), xi);
  std::size_t i = static_cast<std::size_t>(it - t.xi.begin());
  i = std::clamp<std::size_t>(i, 1, t.size() - 1) - 1;
  const double h = t.xi[i + 1] - t.xi[i];
  return {i, h, (xi - t.xi[i]) / h};
}

double hermite_u(const ProfileTable& tab, const Interval& iv) {
  const std::size_t i = iv.i;
  const double h = iv.h;
  const double u0 = tab.u1_bar[i];
  const double u1 = tab.u1_bar[i + 1];
  double d0 = tab.u1_prime[i];
  double d1 = tab.u1_prime[i + 1];
  // Fritsch-Carlson: keep the cubic monotone on strictly monotone data.
  const double secant = (u1 - u0) / h;
  if (secant != 0.0) {
    const double a = d0 / secant;
    const double b = d1 / secant;
    const double r2 = a * a + b * b;
    if (r2 > 9.0) {
      const double tau = 3.0 / std::sqrt(r2);
      d0 *= tau;
      d1 *= tau;
    }
  }
  const double t = iv.t;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * u0 + h10 * h * d0 + h01 * u1 + h11 * h * d1;
}

ProfileSample sample_from_u(const ProfileTable& tab, double u) {
  const GasParams& g = tab.gas;
  const double mt = g.mu_tilde();
  ProfileSample s;
  s.u1_bar = u;
  s.rho_bar = rho_of_u(tab.conn, tab.mass_flux, u);
  s.u1_prime = traveling_wave_rhs(g, tab.conn, u) / mt;
  s.u1_second = traveling_wave_rhs_derivative(g, tab.conn, u) * s.u1_prime / mt;
  s.m_bar = s.rho_bar * u;
  s.w_bar = sound_speed_sq(g, s.rho_bar) - u * u;
  return s;
}

double m_bar_on_interval(const ProfileTable& tab, std::size_t i, double a, double b) {
  const double h = tab.xi[i + 1] - tab.xi[i];
  auto f = [&](double x) {
    const Interval iv{i, h, (x - tab.xi[i]) / h};
    const double u = hermite_u(tab, iv);
    return rho_of_u(tab.conn, tab.mass_flux, u) * u;
  };
  return gauss<double, 10>::integrate(f, a, b);
}

}  // namespace

double traveling_wave_rhs(const GasParams& gas, const ShockConnection& conn, double u1) {
  const bool near_wall = std::abs(u1) <= std::abs(u1 - conn.right.u1);
  return rhs_from_end(gas, conn, near_wall, near_wall ? u1 : u1 - conn.right.u1);
}

double traveling_wave_rhs_derivative(const GasParams& gas, const ShockConnection& conn, double u1) {
  const double j = -conn.s * conn.left.rho;
  const double rho = j / (u1 - conn.s);
  const double drho_du = -j / ((u1 - conn.s) * (u1 - conn.s));
  return j + sound_speed_sq(gas, rho) * drho_du;
}

ProfileTable build_profile(const GasParams& gas, const ShockConnection& conn,
                           double eps_endpoint, int n_nodes) {
  if (!conn.lax_ok || !check_lax(gas, conn).ok) {
    throw Error(ErrorCode::kDomain, "profile requires a Lax-admissible connection");
  }
  if (!(eps_endpoint > 0.0 && eps_endpoint <= 1e-3)) {
    throw Error(ErrorCode::kDomain, "eps_endpoint must lie in (0, 1e-3]");
  }
  if (n_nodes < 64) throw Error(ErrorCode::kDomain, "profile needs at least 64 nodes");

  ProfileTable tab;
  tab.gas = gas;
  tab.conn = conn;
  tab.mass_flux = -conn.s * conn.left.rho;
  tab.eps_endpoint = eps_endpoint;

  const double up = conn.right.u1;
  const double u_hi = up * eps_endpoint;        // near the wall state
  const double u_lo = up * (1.0 - eps_endpoint); // near the far state
  const double u_c = 0.5 * up;
  const int half = n_nodes / 2;

  std::vector<double> u;
  u.reserve(static_cast<std::size_t>(n_nodes) + 1);
  for (int k = 0; k < half; ++k) u.push_back(u_hi + (u_c - u_hi) * k / half);
  const std::size_t center = u.size();
  u.push_back(u_c);
  for (int k = 1; k <= half; ++k) u.push_back(u_c + (u_lo - u_c) * k / half);

  for (std::size_t k = 1; k + 1 < u.size(); ++k) {
    if (!(traveling_wave_rhs(gas, conn, u[k]) < 0.0)) {
      std::ostringstream os;
      os << "R(u1) must be negative between u+ and 0; R(" << u[k]
         << ") = " << traveling_wave_rhs(gas, conn, u[k]);
      throw Error(ErrorCode::kSignError, os.str());
    }
  }

  // Refine intervals whose xi extent is too coarse (the tails, where a uniform
  // velocity spacing spans many e-folds). New nodes are geometric in the
  // distance to the nearer end state, i.e. nearly uniform in xi there.
  const double mt = gas.mu_tilde();
  const double rate_left = traveling_wave_rhs_derivative(gas, conn, 0.0) / mt;
  const double rate_right = -traveling_wave_rhs_derivative(gas, conn, up) / mt;
  const double max_gap = 40.0 / (n_nodes * std::min(rate_left, rate_right));

  std::vector<double> nodes{u.front()};
  std::vector<double> gaps;
  std::size_t center_index = 0;
  for (std::size_t k = 0; k + 1 < u.size(); ++k) {
    const double ua = u[k];
    const double ub = u[k + 1];
    const double gap = integrate_dxi(gas, conn, ua, ub);
    const int pieces = gap > max_gap ? static_cast<int>(std::ceil(gap / max_gap)) : 1;
    if (pieces == 1) {
      nodes.push_back(ub);
      gaps.push_back(gap);
    } else {
      const bool near_wall = std::abs(ua) + std::abs(ub) < std::abs(up);
      const double end = near_wall ? 0.0 : up;
      const double da = std::abs(ua - end);
      const double db = std::abs(ub - end);
      const double sign = (ua - end) < 0.0 ? -1.0 : 1.0;
      double prev = ua;
      for (int p = 1; p <= pieces; ++p) {
        const double next = p == pieces ? ub : end + sign * da * std::pow(db / da, double(p) / pieces);
        gaps.push_back(integrate_dxi(gas, conn, prev, next));
        nodes.push_back(next);
        prev = next;
      }
    }
    if (k + 1 == center) center_index = nodes.size() - 1;
  }

  const std::size_t n = nodes.size();
  tab.xi.assign(n, 0.0);
  for (std::size_t i = center_index + 1; i < n; ++i) tab.xi[i] = tab.xi[i - 1] + gaps[i - 1];
  for (std::size_t i = center_index; i-- > 0;) tab.xi[i] = tab.xi[i + 1] - gaps[i];

  tab.rho_bar.resize(n);
  tab.u1_bar.resize(n);
  tab.u1_prime.resize(n);
  tab.u1_second.resize(n);
  tab.m_bar.resize(n);
  tab.w_bar.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const ProfileSample s = sample_from_u(tab, nodes[i]);
    tab.u1_bar[i] = s.u1_bar;
    tab.rho_bar[i] = s.rho_bar;
    tab.u1_prime[i] = s.u1_prime;
    tab.u1_second[i] = s.u1_second;
    tab.m_bar[i] = s.m_bar;
    tab.w_bar[i] = s.w_bar;
  }

  tab.m_cum.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    tab.m_cum[i + 1] = tab.m_cum[i] + m_bar_on_interval(tab, i, tab.xi[i], tab.xi[i + 1]);
  }
  fit_tail_rates(tab);
  return tab;
}

ProfileSample profile_eval(const ProfileTable& tab, double xi) {
  const GasParams& g = tab.gas;
  if (xi <= tab.xi_min() || xi >= tab.xi_max()) {
    const ConstState& st = xi <= tab.xi_min() ? tab.conn.left : tab.conn.right;
    return {st.rho, st.u1, 0.0, 0.0, st.rho * st.u1, sound_speed_sq(g, st.rho) - st.u1 * st.u1};
  }
  return sample_from_u(tab, hermite_u(tab, locate(tab, xi)));
}

double m_bar_integral(const ProfileTable& tab, double upper) {
  const double x0 = tab.xi_min();
  const double x1 = tab.xi_max();
  const double left_tail = tab.m_bar.front() / tab.left_rate;
  if (upper <= x0) return left_tail * std::exp(tab.left_rate * (upper - x0));
  if (upper < x1) {
    const Interval iv = locate(tab, upper);
    return left_tail + tab.m_cum[iv.i] + m_bar_on_interval(tab, iv.i, tab.xi[iv.i], upper);
  }
  const double m_far = tab.conn.right.rho * tab.conn.right.u1;
  const double dx = upper - x1;
  return left_tail + tab.m_cum.back() + m_far * dx +
         (tab.m_bar.back() - m_far) * (-std::expm1(-tab.right_rate * dx)) / tab.right_rate;
}

double transition_width(const ProfileTable& tab, double lo_frac, double hi_frac) {
  const double up = tab.conn.right.u1;
  return integrate_dxi(tab.gas, tab.conn, lo_frac * up, hi_frac * up);
}

ProfileReport verify_profile(const ProfileTable& tab) {
  ProfileReport r;
  const std::size_t n = tab.size();
  const GasParams& g = tab.gas;
  const double delta = tab.conn.delta;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!(tab.u1_bar[i + 1] < tab.u1_bar[i])) ++r.monotonicity_violations;
    if (!(tab.rho_bar[i + 1] < tab.rho_bar[i])) ++r.monotonicity_violations;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!(tab.u1_prime[i] < 0.0)) ++r.monotonicity_violations;
  }

  r.left_rate_fit = tab.left_rate;
  r.right_rate_fit = tab.right_rate;
  r.left_rate_theory = traveling_wave_rhs_derivative(g, tab.conn, 0.0) / g.mu_tilde();
  r.right_rate_theory =
      std::abs(traveling_wave_rhs_derivative(g, tab.conn, tab.conn.right.u1)) / g.mu_tilde();

  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d1 = std::abs(tab.u1_prime[i]);
    peak = std::max(peak, d1);
    if (d1 > 0.0) r.c3 = std::max(r.c3, std::abs(tab.u1_second[i]) / (delta * d1));
    r.u_bound_constant = std::max(r.u_bound_constant, std::abs(tab.u1_bar[i]) / delta);
    const double j = tab.rho_bar[i] * (tab.u1_bar[i] - tab.conn.s);
    r.mass_flux_residual =
        std::max(r.mass_flux_residual, std::abs(j - tab.mass_flux) / std::abs(tab.mass_flux));
  }
  r.envelope_amplitude = peak / (delta * delta);
  r.envelope_c_left = r.left_rate_fit / delta;
  r.envelope_c_right = r.right_rate_fit / delta;
  r.endpoint_residual = std::max(std::abs(traveling_wave_rhs(g, tab.conn, 0.0)),
                                 std::abs(traveling_wave_rhs(g, tab.conn, tab.conn.right.u1)));
  r.width = transition_width(tab);
  return r;
}

}  // namespace shocklab
