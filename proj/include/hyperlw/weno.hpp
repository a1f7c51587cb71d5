#pragma once

#include <array>
#include <span>
#include <vector>

#include "hyperlw/equations.hpp"
#include "hyperlw/field.hpp"

namespace hyperlw {

/// Upwind WENO reconstruction of order 2r-1 with global Lax-Friedrichs
/// flux splitting, applied componentwise.
struct WenoConfig {
  int r = 3;
  double epsilon = 1e-6;
  int power = 2;

  int order() const { return 2 * r - 1; }
  /// Throws ConfigError unless 2 <= r <= 6, epsilon > 0 and power >= 1.
  void validate() const;
};

/// Nonlinear weights of a 2r-1 window (slots = cells i-r+1..i+r-1).
std::vector<double> weno_weights(std::span<const double> window, const WenoConfig& cfg);

/// Reconstructed value at the right edge of the window's centre cell.
double weno_reconstruct(std::span<const double> window, const WenoConfig& cfg);

/// Numerical flux at the interface between slots r-1 and r of a window of
/// 2r states u_{i-r+1..i+r}: WENO of (f + alpha u)/2 on the first 2r-1
/// states plus WENO of (f - alpha u)/2 on the last 2r-1, mirrored.
std::vector<double> upwind_flux(std::span<const std::vector<double>> window, const EquationSystem& eq,
                                int axis, double alpha, const WenoConfig& cfg);

/// Evaluates the flux-form derivative -sum_axis (h_{+1/2} - h_{-1/2}) / dx
/// over a box of nodes, reusing its scratch planes between calls.
class UpwindDerivative {
 public:
  UpwindDerivative(const EquationSystem& eq, WenoConfig cfg);

  const WenoConfig& config() const { return cfg_; }

  /// Global splitting speed per axis: max wave speed over the padded plane.
  std::array<double, 2> splitting_speeds(const SolutionField& u) const;

  /// Writes the derivative on `box` into `out` (same geometry as `u`).
  /// Needs valid u on `box` grown by r along each axis. After the call,
  /// nodal_flux(axis) holds f^axis(u) on the whole padded plane.
  void evaluate(const SolutionField& u, std::span<const double> alpha, const NodeBox& box, SolutionField& out);

  const SolutionField& nodal_flux(int axis) const { return flux_[axis]; }

 private:
  void prepare(const SolutionField& u);

  const EquationSystem* eq_;
  WenoConfig cfg_;
  std::array<SolutionField, 2> flux_;
  SolutionField plus_;
  SolutionField minus_;
  std::vector<double> hat_lo_;
  std::vector<double> hat_hi_;
};

/// Upwind derivative on the interior of a field whose ghosts are filled.
SolutionField flux_derivative(const SolutionField& u, const EquationSystem& eq, const WenoConfig& cfg);

}  // namespace hyperlw
