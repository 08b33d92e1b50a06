#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "shocklab/errors.hpp"
#include "shocklab/gas_model.hpp"

using namespace shocklab;

namespace {

GasParams defaults() { return GasParams{}; }

void expect_error(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Pressure, PointValues) {
  EXPECT_DOUBLE_EQ(pressure(defaults(), 1.0), 1.0);
  EXPECT_NEAR(pressure(defaults(), 0.9), 0.81, 1e-15);
  GasParams g;
  g.a = 0.5;
  g.gamma = 1.4;
  EXPECT_DOUBLE_EQ(pressure(g, 1.0), 0.5);
}

TEST(Pressure, RejectsNonPositiveDensity) {
  expect_error(ErrorCode::kDomain, [] { pressure(GasParams{}, 0.0); });
  expect_error(ErrorCode::kDomain, [] { char_speeds(GasParams{}, -1.0, 0.0); });
}

TEST(Pressure, MonotoneAndConvex) {
  for (double gamma : {1.4, 2.0, 3.0}) {
    GasParams g;
    g.gamma = gamma;
    double prev_p = pressure(g, 0.1);
    double prev_l2 = char_speeds(g, 0.1, 0.3).lambda2;
    for (double r = 0.2; r < 3.0; r += 0.1) {
      const double p = pressure(g, r);
      const double l2 = char_speeds(g, r, 0.3).lambda2;
      EXPECT_GT(p, prev_p);
      EXPECT_GT(l2, prev_l2);
      EXPECT_GT(pressure_second_derivative(g, r), 0.0);
      prev_p = p;
      prev_l2 = l2;
    }
  }
}

TEST(CharSpeeds, Examples) {
  GasParams g;
  g.a = 0.5;
  auto c = char_speeds(g, 1.0, 0.0);
  EXPECT_NEAR(c.lambda1, -1.0, 1e-15);
  EXPECT_NEAR(c.lambda2, 1.0, 1e-15);
  c = char_speeds(defaults(), 1.0, 0.0);
  EXPECT_NEAR(c.lambda2, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(c.lambda1, -std::sqrt(2.0), 1e-15);
  c = char_speeds(defaults(), 0.9, -0.145297);
  EXPECT_NEAR(c.lambda2, -0.145297 + std::sqrt(1.8), 1e-12);
  EXPECT_NEAR(c.lambda2, 1.196344, 1e-6);
}

TEST(Hugoniot, MatchesClosedFormOracle) {
  const auto ref = oracle::closed_form_hugoniot(1.0, 2.0, 1.0, 0.1);
  const auto c = solve_hugoniot(defaults(), 1.0, 0.1);
  EXPECT_NEAR(c.right.rho, 0.9, 1e-15);
  EXPECT_NEAR(c.s / ref.s, 1.0, 1e-12);
  EXPECT_NEAR(c.right.u1 / ref.u_plus, 1.0, 1e-12);
  EXPECT_NEAR(c.s, 1.307670, 1e-6);
  EXPECT_NEAR(c.right.u1, -0.145297, 1e-6);
  EXPECT_DOUBLE_EQ(c.delta, 0.1);
  EXPECT_TRUE(c.lax_ok);
}

TEST(Hugoniot, BisectionAgreesWithClosedForm) {
  for (double delta : {0.01, 0.1, 0.3}) {
    const auto a = solve_hugoniot(defaults(), 1.0, delta);
    const auto b = solve_hugoniot_bisection(defaults(), 1.0, delta);
    EXPECT_NEAR(a.s, b.s, 1e-12 * a.s);
  }
}

TEST(Hugoniot, AcousticLimit) {
  const auto c = solve_hugoniot(defaults(), 1.0, 1e-8);
  EXPECT_NEAR(c.s, std::sqrt(2.0), 1e-7);
}

TEST(Hugoniot, SweepResidualsLaxAndVelocityBound) {
  GasParams g14;
  g14.gamma = 1.4;
  for (const GasParams& g : {defaults(), g14}) {
    for (double rho_minus : {0.5, 1.0, 2.0}) {
      double c_max = 0.0;
      for (double delta = 1e-3; delta <= 0.2 * rho_minus; delta *= 1.5) {
        const auto c = solve_hugoniot(g, rho_minus, delta);
        const auto res = rh_residuals(g, c);
        const double scale = std::max(1.0, std::abs(c.s) * rho_minus);
        EXPECT_LE(std::abs(res[0]), 1e-12 * scale);
        EXPECT_LE(std::abs(res[1]), 1e-12 * scale);
        EXPECT_TRUE(check_lax(g, c).ok);
        EXPECT_GT(c.s, 0.0);
        EXPECT_LT(c.right.u1, 0.0);
        c_max = std::max(c_max, std::abs(c.right.u1) / delta);
      }
      // |u+| / delta tends to s / rho+ as delta -> 0, so it stays O(1).
      EXPECT_LT(c_max, 2.0 * std::sqrt(sound_speed_sq(g, rho_minus)) / (0.8 * rho_minus));
    }
  }
}

TEST(Hugoniot, InvalidStrength) {
  expect_error(ErrorCode::kInvalidStrength, [] { solve_hugoniot(GasParams{}, 1.0, 1.0); });
  expect_error(ErrorCode::kInvalidStrength, [] { solve_hugoniot(GasParams{}, 1.0, 0.0); });
  expect_error(ErrorCode::kInvalidStrength, [] { solve_hugoniot(GasParams{}, 1.0, -0.1); });
}

TEST(Lax, ExampleMarginsAndNegatedSpeed) {
  auto c = solve_hugoniot(defaults(), 1.0, 0.1);
  const auto rep = check_lax(defaults(), c);
  EXPECT_TRUE(rep.ok);
  EXPECT_NEAR(rep.lambda2_right, 1.196344, 1e-6);
  EXPECT_NEAR(rep.lambda2_left, 1.414214, 1e-6);
  EXPECT_GT(rep.margin_left, 0.0);
  EXPECT_GT(rep.margin_right, 0.0);
  // With a resting left state s - lambda1(rho-, 0) is s + c- > 0.
  EXPECT_GT(rep.s_minus_lambda1_left, 0.0);
  c.s = -c.s;
  EXPECT_FALSE(check_lax(defaults(), c).ok);
}

TEST(Lax, DegenerateConnection) {
  ShockConnection c;
  c.left = {1.0, 0.0};
  c.right = {1.0, 0.0};
  c.s = 0.7;
  const auto rep = check_lax(defaults(), c);
  EXPECT_TRUE(rep.degenerate);
  EXPECT_FALSE(rep.ok);
}

TEST(GasParams, Validation) {
  GasParams g;
  EXPECT_NO_THROW(g.validate());
  EXPECT_DOUBLE_EQ(g.mu_tilde(), 0.2);
  g.gamma = 0.9;
  expect_error(ErrorCode::kConfig, [&] { g.validate(); });
  g = GasParams{};
  g.lambda = -0.2;
  expect_error(ErrorCode::kConfig, [&] { g.validate(); });
  g = GasParams{};
  g.a = 0.0;
  expect_error(ErrorCode::kConfig, [&] { g.validate(); });
  g = GasParams{};
  g.mu = 0.0;
  expect_error(ErrorCode::kConfig, [&] { g.validate(); });
}
