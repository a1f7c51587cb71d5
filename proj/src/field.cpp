#include "hyperlw/field.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperlw/error.hpp"

namespace hyperlw {

SolutionField::SolutionField(int components, std::span<const AxisGrid> axes, int ghost)
    : m_(components), dim_(static_cast<int>(axes.size())), ghost_(ghost) {
  if (dim_ < 1 || dim_ > 2) throw ConfigError("fields are 1D or 2D");
  if (components < 1 || components > kMaxComponents) {
    throw ConfigError("component count must be in [1, " + std::to_string(kMaxComponents) + "]");
  }
  if (ghost < 0) throw ConfigError("ghost width must be non-negative");
  for (int a = 0; a < dim_; ++a) {
    const AxisGrid& g = axes[a];
    if (g.n < 1) throw ConfigError("grid extents must be at least 1");
    if (!(g.spacing() > 0.0) || !std::isfinite(g.spacing())) {
      throw ConfigError("grid spacing must be positive");
    }
    axes_[a] = g;
  }
  if (dim_ == 1) axes_[1] = AxisGrid{1, 0.0, 1.0, NodePlacement::Vertex};
  pitch_ = static_cast<std::size_t>(axes_[0].n + 2 * ghost_);
  rows_ = static_cast<std::size_t>(ny() + 2 * ghost_y());
  values_.assign(static_cast<std::size_t>(m_) * plane(), 0.0);
}

ConstRows SolutionField::rows_at(std::size_t offset) const {
  ConstRows r{};
  for (int c = 0; c < m_; ++c) r[c] = data(c) + offset;
  return r;
}

Rows SolutionField::rows_at(std::size_t offset) {
  Rows r{};
  for (int c = 0; c < m_; ++c) r[c] = data(c) + offset;
  return r;
}

std::vector<double> SolutionField::state(int i, int j) const {
  std::vector<double> s(m_);
  const std::size_t k = index(i, j);
  for (int c = 0; c < m_; ++c) s[c] = data(c)[k];
  return s;
}

void SolutionField::set_state(int i, int j, std::span<const double> s) {
  const std::size_t k = index(i, j);
  for (int c = 0; c < m_; ++c) data(c)[k] = s[c];
}

SolutionField new_field(std::span<const AxisGrid> axes, int ghost, int components) {
  return SolutionField(components, axes, ghost);
}

NodeBox NodeBox::grown(const SolutionField& f, int ext) {
  if (f.dimension() == 2) return {-ext, f.nx() + ext, -ext, f.ny() + ext};
  return {-ext, f.nx() + ext, 0, 1};
}

SolutionField zeros_like(const SolutionField& like, int components) {
  std::array<AxisGrid, 2> axes{like.axis(0), like.axis(1)};
  SolutionField out(components < 0 ? like.components() : components,
                    std::span<const AxisGrid>(axes.data(), static_cast<std::size_t>(like.dimension())),
                    like.ghost());
  out.set_time(like.time());
  return out;
}

void sample_ic(SolutionField& field, const InitialCondition& ic) {
  const int m = field.components();
  for (int j = 0; j < field.ny(); ++j) {
    const double y = field.dimension() == 2 ? field.axis(1).coord(j) : 0.0;
    for (int i = 0; i < field.nx(); ++i) {
      const std::vector<double> s = ic(field.axis(0).coord(i), y);
      if (static_cast<int>(s.size()) != m) throw ConfigError("initial condition has wrong size");
      field.set_state(i, j, s);
    }
  }
}

double max_wave_speed(const EquationSystem& eq, const SolutionField& field, int axis) {
  double s = 0.0;
  for (int j = 0; j < field.ny(); ++j) {
    s = std::max(s, eq.max_wave_speed(axis, field.rows_at(field.index(0, j)),
                                      static_cast<std::size_t>(field.nx())));
  }
  return s;
}

double max_wave_speed_padded(const EquationSystem& eq, const SolutionField& field, int axis) {
  return eq.max_wave_speed(axis, field.rows_at(0), field.plane());
}

std::array<int, 2> find_inadmissible(const EquationSystem& eq, const SolutionField& field) {
  const auto n = static_cast<std::size_t>(field.nx());
  for (int j = 0; j < field.ny(); ++j) {
    const std::size_t bad = eq.first_inadmissible(field.rows_at(field.index(0, j)), n);
    if (bad < n) return {static_cast<int>(bad), j};
  }
  return {-1, -1};
}

}  // namespace hyperlw
