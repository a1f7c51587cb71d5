#pragma once

#include <string>
#include <string_view>

#include "hyperlw/boundary.hpp"
#include "hyperlw/equations.hpp"
#include "hyperlw/field.hpp"

namespace hyperlw {

/// One-step time integrator for u_t + div f(u) = 0 on a ghosted field.
class TimeIntegrator {
 public:
  virtual ~TimeIntegrator() = default;

  virtual std::string name() const = 0;

  /// Halo width the integrator needs around the interior.
  virtual int ghost_width() const = 0;

  /// Advances the interior of `u` by `delta`, refilling ghosts from `bc` as
  /// needed, and advances u.time(). Throws PositivityError if any interior
  /// node leaves the admissible set.
  virtual void step(SolutionField& u, const BoundarySpec& bc, double delta) = 0;
};

/// delta = cfl / max_axis(speed_axis / h_axis) over interior nodes. Returns
/// +inf when every wave speed vanishes; throws ConfigError for cfl <= 0.
double cfl_time_step(const EquationSystem& eq, const SolutionField& u, double cfl);

/// Throws PositivityError naming the first inadmissible interior node.
void require_admissible(const EquationSystem& eq, const SolutionField& u, std::string_view stage);

}  // namespace hyperlw
