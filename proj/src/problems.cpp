#include "hyperlw/problems.hpp"

#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <numbers>

#include "hyperlw/error.hpp"

namespace hyperlw {

namespace {

using std::numbers::pi;

Problem advection(int nx) {
  Problem p;
  p.id = "advection";
  p.eq = std::make_shared<LinearAdvection>(1.0);
  p.axes = {AxisGrid{nx, 0.0, 1.0}};
  p.exact = [](double x, double, double t) { return std::vector<double>{std::sin(2.0 * pi * (x - t))}; };
  p.ic = [exact = p.exact](double x, double y) { return exact(x, y, 0.0); };
  p.t_end = 0.5;
  return p;
}

Problem burgers(int nx) {
  Problem p;
  p.id = "burgers";
  p.eq = std::make_shared<Burgers>();
  p.axes = {AxisGrid{nx, -1.0, 1.0}};
  p.ic = [](double x, double) { return std::vector<double>{0.5 + std::sin(pi * x)}; };
  p.exact = [](double x, double, double t) { return std::vector<double>{burgers_exact(x, t)}; };
  p.t_end = 0.2;
  return p;
}

Problem euler1d(int nx) {
  Problem p;
  p.id = "euler1d";
  auto eq = std::make_shared<Euler>(1);
  p.eq = eq;
  p.axes = {AxisGrid{nx, -1.0, 1.0}};
  // Density wave carried by uniform velocity 1 and pressure 1.
  p.exact = [eq](double x, double, double t) {
    const double rho = 1.0 + 0.2 * std::sin(pi * (x - t));
    const double e = 1.0 / (eq->gamma() - 1.0) + 0.5 * rho;
    return std::vector<double>{rho, rho, e};
  };
  p.ic = [exact = p.exact](double x, double y) { return exact(x, y, 0.0); };
  p.t_end = 0.5;
  return p;
}

Problem euler2d_smooth(int nx, int ny) {
  Problem p;
  p.id = "euler2d-smooth";
  auto eq = std::make_shared<Euler>(2);
  p.eq = eq;
  p.axes = {AxisGrid{nx, -1.0, 1.0}, AxisGrid{ny, -1.0, 1.0}};
  p.ic = [eq](double x, double y) {
    const double c = std::cos(pi * (x + y));
    const double s = std::sin(pi * (x + y));
    const std::vector<double> prim{0.75 + 0.5 * c, 0.25 + 0.5 * c, 0.25 + 0.5 * s, 0.75 + 0.5 * s};
    return eq->primitive_to_conservative(prim);
  };
  p.t_end = 0.025;
  p.cfl = 0.5;
  return p;
}

Problem dmr(int nx, int ny) {
  Problem p;
  p.id = "dmr";
  auto eq = std::make_shared<Euler>(2);
  p.eq = eq;
  p.axes = {AxisGrid{nx, 0.0, 4.0, NodePlacement::CellCenter}, AxisGrid{ny, 0.0, 1.0, NodePlacement::CellCenter}};
  const std::vector<double> c1 = dmr_post_shock(*eq);
  const std::vector<double> c2 = dmr_pre_shock(*eq);
  p.ic = [c1, c2](double x, double y) { return x <= dmr_shock_x(y, 0.0) ? c1 : c2; };
  p.bc.sides[static_cast<int>(Side::XLow)] = Inflow{c1};
  p.bc.sides[static_cast<int>(Side::XHigh)] = Outflow{};
  p.bc.sides[static_cast<int>(Side::YLow)] = Piecewise{0.25, Outflow{}, Reflecting{}};
  p.bc.sides[static_cast<int>(Side::YHigh)] = TimeDependentInflow{
      [c1, c2](double x, double, double t) { return x <= dmr_shock_x(1.0, t) ? c1 : c2; }};
  p.t_end = 0.2;
  p.cfl = 0.4;
  return p;
}

}  // namespace

std::vector<std::string> problem_ids() { return {"advection", "burgers", "euler1d", "euler2d-smooth", "dmr"}; }

Problem make_problem(std::string_view id, int nx, int ny) {
  if (nx < 1) throw ConfigError("grid must have at least one node per axis");
  if (id == "advection") return advection(nx);
  if (id == "burgers") return burgers(nx);
  if (id == "euler1d") return euler1d(nx);
  if (id == "euler2d-smooth") return euler2d_smooth(nx, ny > 0 ? ny : nx);
  if (id == "dmr") {
    const int rows = ny > 0 ? ny : nx / 4;
    if (rows < 1) throw ConfigError("dmr needs at least one row");
    return dmr(nx, rows);
  }
  throw ConfigError("unknown problem '" + std::string(id) + "'");
}

SolutionField initial_field(const Problem& p, int ghost) {
  p.bc.validate(static_cast<int>(p.axes.size()));
  SolutionField u = new_field(p.axes, ghost, p.eq->components());
  sample_ic(u, p.ic);
  return u;
}

double burgers_exact(double x, double t) {
  if (t < 0.0 || t >= 1.0 / pi) throw std::domain_error("closed-form Burgers solution needs 0 <= t < 1/pi");
  // Foot xi of the characteristic through (x, t): xi + t u0(xi) = x, monotone in xi.
  auto residual = [x, t](double xi) {
    return std::make_pair(xi + t * (0.5 + std::sin(pi * xi)) - x, 1.0 + t * pi * std::cos(pi * xi));
  };
  std::uintmax_t iterations = 100;
  const double xi = boost::math::tools::newton_raphson_iterate(residual, x - 0.5 * t, x - 1.5 * t - 1e-12,
                                                               x + 0.5 * t + 1e-12, 60, iterations);
  return 0.5 + std::sin(pi * xi);
}

std::vector<double> dmr_post_shock(const Euler& eq) {
  const double v = 8.25;
  return eq.primitive_to_conservative(std::vector<double>{8.0, v * std::cos(pi / 6), -v * std::sin(pi / 6), 563.5});
}

std::vector<double> dmr_pre_shock(const Euler& eq) {
  return eq.primitive_to_conservative(std::vector<double>{1.4, 0.0, 0.0, 2.5});
}

double dmr_shock_x(double y, double t) { return 0.25 + (y + 20.0 * t) / std::sqrt(3.0); }

}  // namespace hyperlw
