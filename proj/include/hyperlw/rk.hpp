#pragma once

#include <string>

#include "hyperlw/integrator.hpp"
#include "hyperlw/weno.hpp"

namespace hyperlw {

/// Shu-Osher third-order TVD Runge-Kutta with the upwind WENO operator.
/// Stage ghosts are refilled at t, t + delta and t + delta/2.
class Rk3Integrator final : public TimeIntegrator {
 public:
  Rk3Integrator(const EquationSystem& eq, WenoConfig cfg);

  std::string name() const override;
  int ghost_width() const override { return upwind_.config().r; }
  void step(SolutionField& u, const BoundarySpec& bc, double delta) override;

 private:
  // stage <- a * base + b * (stage + delta L(stage)) on the interior.
  void stage_update(SolutionField& stage, const SolutionField& base, double a, double b, double delta);

  const EquationSystem* eq_;
  UpwindDerivative upwind_;
  SolutionField base_;
  SolutionField rate_;
};

}  // namespace hyperlw
