#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlw/boundary.hpp"
#include "hyperlw/equations.hpp"
#include "hyperlw/field.hpp"

namespace hyperlw {

/// Conservative state as a function of position and time.
using ExactSolution = std::function<std::vector<double>(double x, double y, double t)>;

/// A registered test problem: law, domain, boundary set, initial data and,
/// when known in closed form, the exact solution.
struct Problem {
  std::string id;
  std::shared_ptr<const EquationSystem> eq;
  std::vector<AxisGrid> axes;
  BoundarySpec bc;
  InitialCondition ic;
  ExactSolution exact;  // empty when no closed form is available
  double t_end = 0.0;
  double cfl = 0.5;
};

/// Identifiers accepted by make_problem.
std::vector<std::string> problem_ids();

/// Builds a problem on an nx (by ny) grid. ny is ignored for 1D problems
/// and defaults to nx for euler2d-smooth and nx/4 for dmr when <= 0.
/// Throws ConfigError for unknown ids.
Problem make_problem(std::string_view id, int nx, int ny = 0);

/// Allocates a field with halo `ghost` and samples the initial condition.
SolutionField initial_field(const Problem& p, int ghost);

/// Burgers solution u(x, t) = u0(x - u t) for u0 = 1/2 + sin(pi x) before
/// the shock time 1/pi, by Newton iteration on the characteristic foot.
double burgers_exact(double x, double t);

/// Double Mach reflection states as conservative vectors: post-shock C1 and
/// pre-shock C2.
std::vector<double> dmr_post_shock(const Euler& eq);
std::vector<double> dmr_pre_shock(const Euler& eq);

/// Horizontal shock position at height y and time t.
double dmr_shock_x(double y, double t);

}  // namespace hyperlw
