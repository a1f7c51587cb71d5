#pragma once

#include <array>
#include <functional>
#include <variant>
#include <vector>

#include "hyperlw/equations.hpp"
#include "hyperlw/field.hpp"

namespace hyperlw {

enum class Side { XLow = 0, XHigh = 1, YLow = 2, YHigh = 3 };

struct Periodic {};

/// Ghost nodes copy the nearest interior node.
struct Outflow {};

/// Ghost node at distance d mirrors interior node d with the normal
/// momentum negated.
struct Reflecting {};

/// Constant conservative state.
struct Inflow {
  std::vector<double> state;
};

/// Conservative state as a function of ghost-node position and time.
struct TimeDependentInflow {
  std::function<std::vector<double>(double x, double y, double t)> state;
};

using SimpleCondition = std::variant<Outflow, Reflecting, Inflow, TimeDependentInflow>;

/// Splits a side by the tangential coordinate of each ghost node:
/// `lower` applies where coord <= split, `upper` elsewhere.
struct Piecewise {
  double split = 0.0;
  SimpleCondition lower;
  SimpleCondition upper;
};

using BoundaryCondition =
    std::variant<Periodic, Outflow, Reflecting, Inflow, TimeDependentInflow, Piecewise>;

struct BoundarySpec {
  std::array<BoundaryCondition, 4> sides{Periodic{}, Periodic{}, Periodic{}, Periodic{}};

  static BoundarySpec all_periodic() { return {}; }

  const BoundaryCondition& at(Side s) const { return sides[static_cast<int>(s)]; }
  bool periodic(int axis) const;

  /// Throws ConfigError if a periodic side is not matched by its opposite.
  void validate(int dimension) const;
};

/// What a field holds. Ghosts of time derivatives follow the same copy and
/// mirror rules as states, but inflow data is frozen over a step, so inflow
/// ghosts of a derivative are zero.
enum class GhostData { State, TimeDerivative };

/// Populates every ghost node of `field` from its interior and the boundary
/// set at time t. Sides along x are filled first over interior rows, then
/// the y sides over full padded rows so corner ghosts are defined.
void fill_ghosts(SolutionField& field, const BoundarySpec& bc, const EquationSystem& eq, double t,
                 GhostData kind = GhostData::State);

}  // namespace hyperlw
