#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlw/boundary.hpp"
#include "hyperlw/error.hpp"
#include "hyperlw/reconstruction.hpp"
#include "hyperlw/weno.hpp"
#include "support.hpp"

using namespace hyperlw;
using hyperlw::testing::periodic_line;

namespace {

WenoConfig weno(int r) {
  WenoConfig cfg;
  cfg.r = r;
  return cfg;
}

// Upwind derivative of the advected sine against -2 pi a cos(2 pi x), L1.
double sine_derivative_error(int r, int n) {
  const LinearAdvection eq(1.0);
  SolutionField u = periodic_line(n, 0.0, 1.0, r);
  sample_ic(u, [](double x, double) { return std::vector<double>{std::sin(2 * std::numbers::pi * x)}; });
  fill_ghosts(u, BoundarySpec::all_periodic(), eq, 0.0);
  const SolutionField d = flux_derivative(u, eq, weno(r));
  double e = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = u.axis(0).coord(i);
    e += std::abs(d(0, i) + 2 * std::numbers::pi * std::cos(2 * std::numbers::pi * x));
  }
  return e / n;
}

}  // namespace

TEST_CASE("reconstruction reproduces constants and linear data") {
  for (int r = 2; r <= 6; ++r) {
    const std::vector<double> c(2 * r - 1, 3.25);
    CHECK(weno_reconstruct(c, weno(r)) == doctest::Approx(3.25).epsilon(1e-14));
  }
  const std::vector<double> lin{-2.0, -1.0, 0.0, 1.0, 2.0};
  CHECK(weno_reconstruct(lin, weno(3)) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("nonlinear weights are convex") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  for (int r = 2; r <= 6; ++r) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> w(2 * r - 1);
      for (double& v : w) v = d(rng);
      if (trial % 3 == 0) w[r] += 50.0;
      const auto om = weno_weights(w, weno(r));
      REQUIRE(static_cast<int>(om.size()) == r);
      double sum = 0.0;
      for (double x : om) {
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        sum += x;
      }
      CHECK(std::abs(sum - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("a jump selects the smooth substencil") {
  const auto& tab = reconstruction_tables(3);
  for (double h : {0.1, 0.05, 0.025}) {
    // Smooth quadratic on cells -2..0, then a unit jump.
    std::vector<double> w(5);
    for (int s = 0; s < 5; ++s) {
      const double x = (s - 2) * h;
      w[s] = (s <= 2 ? 0.0 : 1.0) + x * x;
    }
    double smooth = 0.0;
    for (int j = 0; j < 3; ++j) smooth += tab.right[0][j] * w[j];
    CHECK(std::abs(weno_reconstruct(w, weno(3)) - smooth) <= std::pow(h, 3));
  }
}

TEST_CASE("step data stays within the range of the smooth values") {
  for (int r = 2; r <= 4; ++r) {
    for (int jump = 1; jump < 2 * r - 1; ++jump) {
      std::vector<double> w(2 * r - 1);
      for (int s = 0; s < 2 * r - 1; ++s) w[s] = s < jump ? 1.0 : 0.0;
      const double v = weno_reconstruct(w, weno(r));
      CHECK(v >= -1e-6);
      CHECK(v <= 1.0 + 1e-6);
    }
  }
}

TEST_CASE("split flux of a constant state is the physical flux") {
  const Euler eq(2);
  const std::vector<double> s{1.2, 0.3, -0.4, 3.0};
  const std::vector<std::vector<double>> window(6, s);
  for (int axis = 0; axis < 2; ++axis) {
    const auto h = upwind_flux(window, eq, axis, 2.5, weno(3));
    const auto f = eq.flux(s, axis);
    for (int c = 0; c < 4; ++c) CHECK(h[c] == doctest::Approx(f[c]).epsilon(1e-14));
  }
}

TEST_CASE("advection with alpha = a is a pure upwind reconstruction") {
  const LinearAdvection eq(2.0);
  std::vector<std::vector<double>> window;
  std::vector<double> left;
  for (int s = 0; s < 6; ++s) {
    const double v = std::sin(0.3 * s) + 0.1 * s * s;
    window.push_back({v});
    if (s < 5) left.push_back(2.0 * v);
  }
  const auto h = upwind_flux(window, eq, 0, 2.0, weno(3));
  CHECK(h[0] == doctest::Approx(weno_reconstruct(left, weno(3))).epsilon(1e-14));
}

TEST_CASE("derivative of a constant field vanishes") {
  const Euler eq(1);
  SolutionField u = periodic_line(12, 0.0, 1.0, 3, 3);
  sample_ic(u, [](double, double) { return std::vector<double>{1.0, 0.5, 2.5}; });
  fill_ghosts(u, BoundarySpec::all_periodic(), eq, 0.0);
  const SolutionField d = flux_derivative(u, eq, weno(3));
  for (int c = 0; c < 3; ++c) {
    for (int i = 0; i < 12; ++i) CHECK(std::abs(d(c, i)) <= 1e-14);
  }
}

TEST_CASE("derivative converges at the design order") {
  // Third-order weights degrade near the extrema of the sine until the
  // smoothness indicators drop well below epsilon, so r = 2 is measured on
  // finer grids.
  const std::array<int, 2> start{320, 40};
  for (int r : {2, 3}) {
    const int n = start[r - 2];
    const double e0 = sine_derivative_error(r, n);
    const double e1 = sine_derivative_error(r, 2 * n);
    const double e2 = sine_derivative_error(r, 4 * n);
    CHECK(std::log2(e1 / e2) >= 2 * r - 1 - 0.3);
    CHECK(e0 > e1);
  }
  CHECK(sine_derivative_error(3, 80) <= 1e-5);
}

TEST_CASE("periodic derivative telescopes") {
  const Burgers eq;
  const int n = 64;
  SolutionField u = periodic_line(n, -1.0, 1.0, 3);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> d(-1.0, 2.0);
  for (int i = 0; i < n; ++i) u(0, i) = d(rng);
  fill_ghosts(u, BoundarySpec::all_periodic(), eq, 0.0);
  const SolutionField du = flux_derivative(u, eq, weno(3));
  double sum = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += du(0, i);
    scale += std::abs(du(0, i));
  }
  CHECK(std::abs(sum) <= 1e-12 * scale);
}

TEST_CASE("2D density rate is minus the mass-flux divergence") {
  const Euler eq(2);
  const int n = 64;
  const std::array<AxisGrid, 2> axes{AxisGrid{n, 0.0, 1.0}, AxisGrid{n, 0.0, 1.0}};
  SolutionField u = new_field(axes, 3, 4);
  sample_ic(u, [](double x, double y) {
    const double r = 1.0 + 0.2 * std::sin(2 * std::numbers::pi * (x + 2 * y));
    return std::vector<double>{r, 0.1 * r, -0.2 * r, 3.0};
  });
  fill_ghosts(u, BoundarySpec::all_periodic(), eq, 0.0);
  const SolutionField d = flux_derivative(u, eq, weno(3));
  // rho_t = -(0.1 rho)_x + (0.2 rho)_y = 0.3 g with g = rho_x = rho_y / 2.
  double err = 0.0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double x = u.axis(0).coord(i), y = u.axis(1).coord(j);
      const double g = 0.2 * 2 * std::numbers::pi * std::cos(2 * std::numbers::pi * (x + 2 * y));
      err = std::max(err, std::abs(d(0, i, j) - 0.3 * g));
    }
  }
  CHECK(err < 1e-3);
}

TEST_CASE("configuration validation") {
  WenoConfig bad;
  bad.r = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad.r = 3;
  bad.epsilon = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  CHECK_THROWS_AS(reconstruction_tables(7), ConfigError);
}
