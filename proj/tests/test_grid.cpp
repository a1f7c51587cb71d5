#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperlw/boundary.hpp"
#include "hyperlw/error.hpp"
#include "hyperlw/field.hpp"
#include "hyperlw/problems.hpp"
#include "hyperlw/stencil.hpp"
#include "support.hpp"

using namespace hyperlw;
using hyperlw::testing::periodic_line;

TEST_CASE("periodic node placement excludes the right endpoint") {
  const SolutionField f = periodic_line(4, -1.0, 1.0, 2);
  CHECK(f.spacing(0) == 0.5);
  CHECK(f.axis(0).coord(0) == -1.0);
  CHECK(f.axis(0).coord(1) == -0.5);
  CHECK(f.axis(0).coord(2) == 0.0);
  CHECK(f.axis(0).coord(3) == 0.5);
}

TEST_CASE("cell-centred placement") {
  const AxisGrid ax{4, 0.0, 4.0, NodePlacement::CellCenter};
  CHECK(ax.coord(0) == 0.5);
  CHECK(ax.coord(-1) == -0.5);
}

TEST_CASE("new_field validates its geometry") {
  const AxisGrid bad{4, 1.0, 1.0};
  CHECK_THROWS_AS(new_field(std::span<const AxisGrid>(&bad, 1), 2, 1), ConfigError);
  const AxisGrid empty{0, 0.0, 1.0};
  CHECK_THROWS_AS(new_field(std::span<const AxisGrid>(&empty, 1), 2, 1), ConfigError);
  const AxisGrid ok{4, 0.0, 1.0};
  CHECK_THROWS_AS(new_field(std::span<const AxisGrid>(&ok, 1), -1, 1), ConfigError);
}

TEST_CASE("constant initial data") {
  SolutionField f = periodic_line(8, 0.0, 1.0, 3, 2);
  sample_ic(f, [](double, double) { return std::vector<double>{2.0, -1.0}; });
  for (int i = 0; i < 8; ++i) {
    CHECK(f(0, i) == 2.0);
    CHECK(f(1, i) == -1.0);
  }
}

TEST_CASE("smooth 2D test initial density at the origin") {
  const Problem p = make_problem("euler2d-smooth", 8);
  const SolutionField u = initial_field(p, 3);
  CHECK(u.axis(0).coord(4) == 0.0);
  CHECK(u.axis(1).coord(4) == 0.0);
  CHECK(u(0, 4, 4) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("periodic fill wraps") {
  const LinearAdvection eq(1.0);
  SolutionField f = periodic_line(5, 0.0, 1.0, 3);
  for (int i = 0; i < 5; ++i) f(0, i) = i + 1.0;
  fill_ghosts(f, BoundarySpec::all_periodic(), eq, 0.0);
  CHECK(f(0, -1) == 5.0);
  CHECK(f(0, -3) == 3.0);
  CHECK(f(0, 5) == 1.0);
  CHECK(f(0, 7) == 3.0);
}

TEST_CASE("periodic fill makes boundary stencils equal to the infinite extension") {
  const LinearAdvection eq(1.0);
  const int n = 16;
  SolutionField f = periodic_line(n, 0.0, 1.0, 4);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<double> base(n);
  for (int i = 0; i < n; ++i) f(0, i) = base[i] = d(rng);
  fill_ghosts(f, BoundarySpec::all_periodic(), eq, 0.0);
  const StencilCoefficients st = centered_coefficients(1, 4);
  for (int i = 0; i < n; ++i) {
    double via_ghost = 0.0, via_wrap = 0.0;
    for (std::size_t q = 0; q < st.offsets.size(); ++q) {
      const int o = st.offsets[q];
      via_ghost += st.weights[q] * f(0, i + o);
      via_wrap += st.weights[q] * base[((i + o) % n + n) % n];
    }
    CHECK(via_ghost == via_wrap);
  }
}

TEST_CASE("unmatched periodic pair is rejected") {
  const LinearAdvection eq(1.0);
  SolutionField f = periodic_line(5, 0.0, 1.0, 2);
  BoundarySpec bc;
  bc.sides[static_cast<int>(Side::XHigh)] = Outflow{};
  CHECK_THROWS_AS(fill_ghosts(f, bc, eq, 0.0), ConfigError);
}

namespace {

SolutionField euler_box(int nx, int ny, int g) {
  const std::array<AxisGrid, 2> axes{AxisGrid{nx, 0.0, 1.0, NodePlacement::CellCenter},
                                     AxisGrid{ny, 0.0, 1.0, NodePlacement::CellCenter}};
  SolutionField f = new_field(axes, g, 4);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      f.set_state(i, j, std::vector<double>{1.0 + i + 10.0 * j, 0.1 * i, 0.2 * j + 0.5, 5.0 + i});
    }
  }
  return f;
}

}  // namespace

TEST_CASE("reflecting fill mirrors and negates the normal momentum") {
  const Euler eq(2);
  SolutionField f = euler_box(6, 5, 3);
  BoundarySpec bc;
  bc.sides = {Outflow{}, Outflow{}, Reflecting{}, Outflow{}};
  fill_ghosts(f, bc, eq, 0.0);
  for (int d = 0; d < 3; ++d) {
    for (int i = 0; i < 6; ++i) {
      CHECK(f(0, i, -1 - d) == f(0, i, d));
      CHECK(f(1, i, -1 - d) == f(1, i, d));
      CHECK(f(2, i, -1 - d) == -f(2, i, d));
      CHECK(f(3, i, -1 - d) == f(3, i, d));
    }
  }
}

TEST_CASE("reflecting fill is an involution on mirrored pairs") {
  const Euler eq(2);
  SolutionField f = euler_box(6, 5, 3);
  BoundarySpec bc;
  bc.sides = {Reflecting{}, Reflecting{}, Reflecting{}, Reflecting{}};
  fill_ghosts(f, bc, eq, 0.0);
  // Mirroring the ghost values back must reproduce the interior.
  for (int j = 0; j < 5; ++j) {
    for (int d = 0; d < 3; ++d) {
      const int normal = eq.normal_momentum(0);
      for (int c = 0; c < 4; ++c) {
        const double back = c == normal ? -f(c, -1 - d, j) : f(c, -1 - d, j);
        CHECK(back == f(c, d, j));
      }
    }
  }
}

TEST_CASE("outflow copies the nearest interior node") {
  const Euler eq(2);
  SolutionField f = euler_box(6, 5, 3);
  BoundarySpec bc;
  bc.sides = {Outflow{}, Outflow{}, Outflow{}, Outflow{}};
  fill_ghosts(f, bc, eq, 0.0);
  for (int c = 0; c < 4; ++c) {
    CHECK(f(c, -3, 2) == f(c, 0, 2));
    CHECK(f(c, 8, 2) == f(c, 5, 2));
    CHECK(f(c, 2, 7) == f(c, 2, 4));
    CHECK(f(c, -2, -2) == f(c, 0, 0));
  }
}

TEST_CASE("time derivative ghosts zero the inflow data") {
  const Euler eq(2);
  SolutionField f = euler_box(6, 5, 2);
  BoundarySpec bc;
  bc.sides = {Inflow{{1.0, 2.0, 3.0, 40.0}}, Outflow{}, Reflecting{}, Outflow{}};
  fill_ghosts(f, bc, eq, 0.0, GhostData::TimeDerivative);
  for (int c = 0; c < 4; ++c) CHECK(f(c, -1, 2) == 0.0);
  CHECK(f(2, 3, -1) == -f(2, 3, 0));
  fill_ghosts(f, bc, eq, 0.0, GhostData::State);
  CHECK(f(3, -2, 1) == 40.0);
}

TEST_CASE("double Mach reflection boundary set") {
  const Problem p = make_problem("dmr", 64, 16);
  const auto& eq = static_cast<const Euler&>(*p.eq);
  SolutionField u = initial_field(p, 3);
  fill_ghosts(u, p.bc, eq, 0.0);
  const auto c1 = dmr_post_shock(eq);
  const auto c2 = dmr_pre_shock(eq);
  CHECK(c2 == std::vector<double>{1.4, 0.0, 0.0, 2.5});

  // Top ghosts: post-shock up to 1/4 + 1/sqrt(3) at t = 0.
  const double xs = 0.25 + 1.0 / std::sqrt(3.0);
  CHECK(dmr_shock_x(1.0, 0.0) == doctest::Approx(xs));
  CHECK(dmr_shock_x(1.0, 0.1) == doctest::Approx(0.25 + 3.0 / std::sqrt(3.0)));
  for (int i = 0; i < 64; ++i) {
    const double x = u.axis(0).coord(i);
    const auto& want = x <= xs ? c1 : c2;
    for (int c = 0; c < 4; ++c) CHECK(u(c, i, 16) == want[c]);
  }

  // Bottom: outflow left of x = 1/4, reflecting to the right.
  for (int i = 0; i < 64; ++i) {
    const double x = u.axis(0).coord(i);
    const double expected = x <= 0.25 ? u(2, i, 0) : -u(2, i, 0);
    CHECK(u(2, i, -1) == expected);
  }

  // Left inflow is the post-shock state.
  for (int c = 0; c < 4; ++c) CHECK(u(c, -2, 5) == c1[c]);

  // The top inflow moves with the shock.
  fill_ghosts(u, p.bc, eq, 0.1);
  const double xs1 = dmr_shock_x(1.0, 0.1);
  for (int i = 0; i < 64; ++i) {
    const double x = u.axis(0).coord(i);
    CHECK(u(0, i, 17) == (x <= xs1 ? c1[0] : c2[0]));
  }
}

TEST_CASE("double Mach reflection initial shock line") {
  const Problem p = make_problem("dmr", 400, 100);
  const SolutionField u = initial_field(p, 0);
  const auto& eq = static_cast<const Euler&>(*p.eq);
  const auto c1 = dmr_post_shock(eq);
  for (int j = 0; j < u.ny(); j += 7) {
    const double y = u.axis(1).coord(j);
    for (int i = 0; i < u.nx(); ++i) {
      const double x = u.axis(0).coord(i);
      const bool post = x <= 0.25 + y / std::sqrt(3.0);
      CHECK((u(0, i, j) == c1[0]) == post);
    }
  }
}
