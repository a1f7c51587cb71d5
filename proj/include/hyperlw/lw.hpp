#pragma once

#include <array>
#include <string>
#include <vector>

#include "hyperlw/integrator.hpp"
#include "hyperlw/stencil.hpp"
#include "hyperlw/weno.hpp"

namespace hyperlw {

/// Lax-Wendroff variant.
///
/// The first time derivative always comes from the upwind WENO flux
/// difference. Higher derivatives follow the Cauchy-Kowalewski recursion
/// u^{(k+1)} = -div f^{(k)}, with f^{(k)} either from the chain rule
/// (`exact`, scalar 1D and R <= 3 only) or from centered differences in
/// time of f evaluated on the node's Taylor polynomial. With
/// `fluctuation_control` the recursion is seeded with a central-WENO u_t
/// while the final Taylor sum keeps the upwind one.
struct LwConfig {
  int time_order = 5;
  WenoConfig weno{};
  bool fluctuation_control = false;
  bool exact = false;
  /// Abort when a temporal sample T_k(j delta) is inadmissible. Off by
  /// default: samples only feed a finite difference in time, so they need a
  /// finite flux, while every stored state is still checked after the step.
  bool strict_samples = false;

  /// Throws ConfigError on an unsupported combination for `eq`.
  void validate(const EquationSystem& eq) const;
};

/// Half-accuracy ceil((R-k)/2) of the level-k operators.
inline int lw_half_accuracy(int time_order, int k) { return (time_order - k + 1) / 2; }

/// Halo reserved for a scheme of spatial width r and temporal order R:
/// r + sum_{k=1}^{R-1} ceil((R-k)/2). This is enough to extend the whole
/// recursion into the halo; the integrator itself needs only r and the
/// widest temporal stencil half-width.
int lw_ghost_width(int r, int time_order);

/// Degree-k polynomial sum_l d_l rho^l / l! in the time offset rho, with
/// m-vector coefficients d_l.
class TaylorPolynomial {
 public:
  explicit TaylorPolynomial(std::vector<std::vector<double>> derivatives);

  int degree() const { return static_cast<int>(derivatives_.size()) - 1; }
  int components() const { return static_cast<int>(derivatives_.front().size()); }
  const std::vector<double>& derivative(int l) const { return derivatives_[l]; }

  /// Horner evaluation.
  std::vector<double> operator()(double rho) const;

 private:
  std::vector<std::vector<double>> derivatives_;
};

/// Approximate f^{(k)} at one node: centered difference Delta^{k, ceil((R-k)/2)}
/// with spacing delta of f^axis(T(j delta)).
/// Throws PositivityError if a sampled state is inadmissible.
std::vector<double> flux_time_derivative(const TaylorPolynomial& taylor, const EquationSystem& eq, int axis, int k,
                                         int time_order, double delta);

/// Per-node time derivatives u^{(0..R)} and flux time derivatives
/// f^{(0..R-1)} per axis, as produced by one recursion.
class DerivativeTower {
 public:
  int order() const { return time_order_; }
  double step() const { return delta_; }
  int dimension() const { return levels_.empty() ? 0 : levels_.front().dimension(); }

  /// u^{(l)}; level 1 is the upwind derivative.
  const SolutionField& derivative(int l) const { return levels_.at(l); }

  /// The first derivative that seeded the recursion: the fluctuation
  /// controlled one if enabled, otherwise derivative(1).
  const SolutionField& recursion_first() const { return has_smoothed_ ? smoothed_ : levels_.at(1); }
  bool fluctuation_controlled() const { return has_smoothed_; }

  /// f^{(k)} along `axis`; k = 0 is f(u).
  const SolutionField& flux_derivative(int k, int axis) const { return fluxes_.at(k)[axis]; }

  /// Nodes where level l is valid (the whole padded plane).
  NodeBox valid_box(int l) const { return boxes_.at(l); }

  /// T_k at node (i, j), built from u^{(0)}, the recursion's first
  /// derivative and u^{(2..k)}.
  TaylorPolynomial taylor(int k, int i, int j = 0) const;

 private:
  friend class LaxWendroffIntegrator;

  int time_order_ = 0;
  double delta_ = 0.0;
  std::vector<SolutionField> levels_;
  std::vector<std::array<SolutionField, 2>> fluxes_;
  std::vector<NodeBox> boxes_;
  SolutionField smoothed_;
  bool has_smoothed_ = false;
};

/// Evaluates T_k of the tower at one node.
std::vector<double> taylor_eval(const DerivativeTower& tower, int k, double rho, int i, int j = 0);

/// One-step arbitrary-order Lax-Wendroff scheme with WENO fluxes.
class LaxWendroffIntegrator final : public TimeIntegrator {
 public:
  LaxWendroffIntegrator(const EquationSystem& eq, LwConfig cfg);

  const LwConfig& config() const { return cfg_; }

  std::string name() const override;
  int ghost_width() const override;
  void step(SolutionField& u, const BoundarySpec& bc, double delta) override;

  /// Fills the tower for `u`, whose ghosts must already be populated. Each
  /// level is computed on the interior and its ghosts are then filled from
  /// `bc` as time-derivative data.
  const DerivativeTower& compute_tower(const SolutionField& u, const BoundarySpec& bc, double delta);

  /// Tower of the most recent step or compute_tower call.
  const DerivativeTower& tower() const { return tower_; }

 private:
  void prepare(const SolutionField& u);
  void approximate_flux_level(int k, const NodeBox& box);
  void exact_flux_level(int k, const NodeBox& box);
  void divergence_level(int k, const NodeBox& box);
  void require_finite_level(int k, const NodeBox& box) const;
  void fill_level_ghosts(SolutionField& level, const BoundarySpec& bc, double t) const;

  const EquationSystem* eq_;
  LwConfig cfg_;
  UpwindDerivative upwind_;
  std::vector<StencilCoefficients> temporal_;  // index k
  std::vector<StencilCoefficients> spatial_;   // index k
  DerivativeTower tower_;
  std::vector<double> state_;
};

}  // namespace hyperlw
