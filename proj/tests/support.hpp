#pragma once

#include <cmath>
#include <vector>

#include "hyperlw/field.hpp"

namespace hyperlw::testing {

inline double log2_ratio(double coarse, double fine) { return std::log2(coarse / fine); }

/// 1D periodic field of n vertex nodes on [lo, hi) with halo g.
inline SolutionField periodic_line(int n, double lo, double hi, int g, int m = 1) {
  const AxisGrid ax{n, lo, hi, NodePlacement::Vertex};
  return new_field(std::span<const AxisGrid>(&ax, 1), g, m);
}

inline double sum_component(const SolutionField& u, int c) {
  double s = 0.0;
  for (int j = 0; j < u.ny(); ++j) {
    for (int i = 0; i < u.nx(); ++i) s += u(c, i, j);
  }
  return s;
}

inline double max_abs_diff(const SolutionField& a, const SolutionField& b) {
  double e = 0.0;
  for (int c = 0; c < a.components(); ++c) {
    for (int j = 0; j < a.ny(); ++j) {
      for (int i = 0; i < a.nx(); ++i) e = std::max(e, std::abs(a(c, i, j) - b(c, i, j)));
    }
  }
  return e;
}

}  // namespace hyperlw::testing
