#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlw {

inline constexpr int kMaxComponents = 4;

/// Parallel component arrays of a batch of states, one pointer per component.
using ConstRows = std::array<const double*, kMaxComponents>;
using Rows = std::array<double*, kMaxComponents>;

/// Density and pressure floor used by wave-speed evaluation.
inline constexpr double kPositivityFloor = 1e-12;

/// Analytic f' and f'' for scalar one-dimensional laws.
class ScalarFluxDerivatives {
 public:
  virtual ~ScalarFluxDerivatives() = default;
  virtual double first(double u) const = 0;
  virtual double second(double u) const = 0;
};

/// A system u_t + sum_axis f^axis(u)_{x_axis} = 0 of m components in d
/// space dimensions.
///
/// The batched entry points work on parallel component arrays so the hot
/// loops in the integrators can call them once per grid row.
class EquationSystem {
 public:
  virtual ~EquationSystem() = default;

  virtual std::string_view name() const = 0;
  virtual int components() const = 0;
  virtual int dimension() const = 0;
  virtual std::vector<std::string> component_names() const = 0;

  /// f^axis at n nodes. No admissibility checks.
  virtual void flux(int axis, const ConstRows& u, const Rows& f, std::size_t n) const = 0;

  /// out[axis] += scale * f^axis(u) for every axis at n nodes.
  virtual void add_fluxes(const ConstRows& u, double scale, const std::array<Rows, 2>& out, std::size_t n) const;

  /// Upper bound of the spectral radius of df^axis/du over n nodes.
  /// Throws PositivityError on vacuum.
  virtual double max_wave_speed(int axis, const ConstRows& u, std::size_t n) const = 0;

  /// Index of the first node whose state is non-finite or outside the
  /// admissible set, or n if all are fine.
  virtual std::size_t first_inadmissible(const ConstRows& u, std::size_t n) const;

  /// Component holding the momentum normal to `axis`, or -1.
  virtual int normal_momentum(int /*axis*/) const { return -1; }

  /// Non-null only for scalar 1D laws with closed-form derivatives.
  virtual const ScalarFluxDerivatives* exact_derivatives() const { return nullptr; }

  /// Single-state flux. Throws InvalidStateError on non-finite input.
  std::vector<double> flux(std::span<const double> state, int axis) const;

  /// Single-state wave speed.
  double max_wave_speed(std::span<const double> state, int axis) const;
};

/// u_t + a u_x = 0.
class LinearAdvection final : public EquationSystem, public ScalarFluxDerivatives {
 public:
  using EquationSystem::flux;
  using EquationSystem::max_wave_speed;

  explicit LinearAdvection(double speed) : speed_(speed) {}

  double speed() const { return speed_; }

  std::string_view name() const override { return "advection"; }
  int components() const override { return 1; }
  int dimension() const override { return 1; }
  std::vector<std::string> component_names() const override { return {"u"}; }
  void flux(int axis, const ConstRows& u, const Rows& f, std::size_t n) const override;
  double max_wave_speed(int axis, const ConstRows& u, std::size_t n) const override;
  const ScalarFluxDerivatives* exact_derivatives() const override { return this; }

  double first(double) const override { return speed_; }
  double second(double) const override { return 0.0; }

 private:
  double speed_;
};

/// u_t + (u^2/2)_x = 0.
class Burgers final : public EquationSystem, public ScalarFluxDerivatives {
 public:
  using EquationSystem::flux;
  using EquationSystem::max_wave_speed;

  std::string_view name() const override { return "burgers"; }
  int components() const override { return 1; }
  int dimension() const override { return 1; }
  std::vector<std::string> component_names() const override { return {"u"}; }
  void flux(int axis, const ConstRows& u, const Rows& f, std::size_t n) const override;
  double max_wave_speed(int axis, const ConstRows& u, std::size_t n) const override;
  const ScalarFluxDerivatives* exact_derivatives() const override { return this; }

  double first(double u) const override { return u; }
  double second(double) const override { return 1.0; }
};

/// Compressible Euler equations for an ideal gas in one or two dimensions.
/// Conservative variables are (rho, rho*v_x[, rho*v_y], E).
class Euler final : public EquationSystem {
 public:
  using EquationSystem::flux;
  using EquationSystem::max_wave_speed;

  explicit Euler(int dimension, double gamma = 1.4);

  double gamma() const { return gamma_; }

  std::string_view name() const override { return dim_ == 1 ? "euler1d" : "euler2d"; }
  int components() const override { return dim_ + 2; }
  int dimension() const override { return dim_; }
  std::vector<std::string> component_names() const override;
  void flux(int axis, const ConstRows& u, const Rows& f, std::size_t n) const override;
  void add_fluxes(const ConstRows& u, double scale, const std::array<Rows, 2>& out, std::size_t n) const override;
  double max_wave_speed(int axis, const ConstRows& u, std::size_t n) const override;
  std::size_t first_inadmissible(const ConstRows& u, std::size_t n) const override;
  int normal_momentum(int axis) const override { return 1 + axis; }

  double pressure(std::span<const double> state) const;

  /// (rho, v..., E) -> (rho, rho v..., E). E passes through unchanged.
  std::vector<double> primitive_to_conservative(std::span<const double> prim) const;
  std::vector<double> conservative_to_primitive(std::span<const double> cons) const;

 private:
  int dim_;
  double gamma_;
};

}  // namespace hyperlw
