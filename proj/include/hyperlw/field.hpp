#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hyperlw/equations.hpp"

namespace hyperlw {

/// Where node i sits inside its axis interval [lo, hi] split into n pieces.
enum class NodePlacement {
  Vertex,      ///< x_i = lo + i h; the right endpoint is the periodic image of node 0
  CellCenter,  ///< x_i = lo + (i + 1/2) h
};

struct AxisGrid {
  int n = 1;
  double lo = 0.0;
  double hi = 1.0;
  NodePlacement placement = NodePlacement::Vertex;

  double spacing() const { return (hi - lo) / n; }
  double coord(int i) const {
    const double shift = placement == NodePlacement::CellCenter ? 0.5 : 0.0;
    return lo + (i + shift) * spacing();
  }
};

/// Nodal conservative variables on a structured 1D/2D grid with a ghost halo.
///
/// Storage is component-major: each component is a contiguous padded plane
/// laid out row by row, so that sweeps along either axis see unit-stride
/// runs across x. Node indices are interior-relative: (0,0) is the first
/// interior node, negative indices and indices >= n address ghosts. A 1D
/// field has a single row and no ghost layers in y.
class SolutionField {
 public:
  SolutionField() = default;
  SolutionField(int components, std::span<const AxisGrid> axes, int ghost);

  int components() const { return m_; }
  int dimension() const { return dim_; }
  int ghost() const { return ghost_; }
  int ghost_y() const { return dim_ == 2 ? ghost_ : 0; }
  int nx() const { return axes_[0].n; }
  int ny() const { return dim_ == 2 ? axes_[1].n : 1; }
  const AxisGrid& axis(int a) const { return axes_[a]; }
  double spacing(int a) const { return axes_[a].spacing(); }

  /// Padded row length, padded row count and padded plane size.
  std::size_t pitch() const { return pitch_; }
  std::size_t padded_rows() const { return rows_; }
  std::size_t plane() const { return pitch_ * rows_; }
  /// Distance in storage between neighbours along `axis`.
  std::ptrdiff_t stride(int axis) const { return axis == 0 ? 1 : static_cast<std::ptrdiff_t>(pitch_); }

  std::size_t index(int i, int j = 0) const {
    return static_cast<std::size_t>(j + ghost_y()) * pitch_ + static_cast<std::size_t>(i + ghost_);
  }

  double* data(int c) { return values_.data() + static_cast<std::size_t>(c) * plane(); }
  const double* data(int c) const { return values_.data() + static_cast<std::size_t>(c) * plane(); }

  double& operator()(int c, int i, int j = 0) { return data(c)[index(i, j)]; }
  double operator()(int c, int i, int j = 0) const { return data(c)[index(i, j)]; }

  /// Component pointers offset to a padded storage position.
  ConstRows rows_at(std::size_t offset) const;
  Rows rows_at(std::size_t offset);

  std::vector<double> state(int i, int j = 0) const;
  void set_state(int i, int j, std::span<const double> s);

  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  /// Raw padded storage, all components back to back.
  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

 private:
  int m_ = 0;
  int dim_ = 0;
  int ghost_ = 0;
  std::array<AxisGrid, 2> axes_{};
  std::size_t pitch_ = 0;
  std::size_t rows_ = 0;
  std::vector<double> values_;
  double time_ = 0.0;
};

/// Half-open box of nodes in interior-relative indices.
struct NodeBox {
  int i0 = 0, i1 = 0, j0 = 0, j1 = 1;

  int width() const { return i1 - i0; }

  /// Interior grown by `ext` layers along every axis of the field.
  static NodeBox grown(const SolutionField& f, int ext);
};

/// Zero field with the geometry and halo of `like`; `components` < 0 keeps
/// the component count.
SolutionField zeros_like(const SolutionField& like, int components = -1);

/// Allocates a zero field. Throws ConfigError on empty extents, negative
/// ghost width or non-positive spacing.
SolutionField new_field(std::span<const AxisGrid> axes, int ghost, int components);

using InitialCondition = std::function<std::vector<double>(double x, double y)>;

/// Samples `ic` pointwise at every interior node.
void sample_ic(SolutionField& field, const InitialCondition& ic);

/// max over interior nodes of the wave speed along `axis`.
double max_wave_speed(const EquationSystem& eq, const SolutionField& field, int axis);

/// Same, over the whole padded plane (ghosts included).
double max_wave_speed_padded(const EquationSystem& eq, const SolutionField& field, int axis);

/// Index of the first inadmissible interior node as (i, j), or nullopt-like
/// {-1, -1} when every node is admissible.
std::array<int, 2> find_inadmissible(const EquationSystem& eq, const SolutionField& field);

}  // namespace hyperlw
