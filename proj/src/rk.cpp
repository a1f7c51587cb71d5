#include "hyperlw/rk.hpp"

#include <algorithm>

#include "hyperlw/error.hpp"

namespace hyperlw {

Rk3Integrator::Rk3Integrator(const EquationSystem& eq, WenoConfig cfg) : eq_(&eq), upwind_(eq, cfg) { cfg.validate(); }

std::string Rk3Integrator::name() const { return "WENO" + std::to_string(upwind_.config().order()) + "-RK3"; }

void Rk3Integrator::stage_update(SolutionField& stage, const SolutionField& base, double a, double b, double delta) {
  const std::array<double, 2> alpha = upwind_.splitting_speeds(stage);
  upwind_.evaluate(stage, alpha, NodeBox::grown(stage, 0), rate_);
  const auto width = static_cast<std::size_t>(stage.nx());
  for (int c = 0; c < stage.components(); ++c) {
    for (int j = 0; j < stage.ny(); ++j) {
      const std::size_t o = stage.index(0, j);
      double* s = stage.data(c) + o;
      const double* l = rate_.data(c) + o;
      const double* u0 = base.data(c) + o;
      if (a == 0.0) {
        for (std::size_t x = 0; x < width; ++x) s[x] = s[x] + delta * l[x];
      } else {
        for (std::size_t x = 0; x < width; ++x) s[x] = a * u0[x] + b * (s[x] + delta * l[x]);
      }
    }
  }
}

void Rk3Integrator::step(SolutionField& u, const BoundarySpec& bc, double delta) {
  if (u.ghost() < ghost_width()) throw ConfigError("field halo is narrower than the WENO stencil");
  if (!(delta > 0.0)) throw ConfigError("time step must be positive");
  if (base_.plane() != u.plane() || base_.components() != u.components()) {
    base_ = zeros_like(u);
    rate_ = zeros_like(u);
  }
  const double t = u.time();
  std::copy(u.values().begin(), u.values().end(), base_.values().begin());

  fill_ghosts(u, bc, *eq_, t);
  stage_update(u, base_, 0.0, 1.0, delta);
  require_admissible(*eq_, u, "RK3 stage 1");

  fill_ghosts(u, bc, *eq_, t + delta);
  stage_update(u, base_, 0.75, 0.25, delta);
  require_admissible(*eq_, u, "RK3 stage 2");

  fill_ghosts(u, bc, *eq_, t + 0.5 * delta);
  stage_update(u, base_, 1.0 / 3.0, 2.0 / 3.0, delta);
  u.set_time(t + delta);
  require_admissible(*eq_, u, "RK3 step");
}

}  // namespace hyperlw
