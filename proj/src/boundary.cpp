#include "hyperlw/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "hyperlw/error.hpp"

namespace hyperlw {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int wrap(int i, int n) { return ((i % n) + n) % n; }

// One ghost node with the interior nodes it may copy from. `axis` is the
// boundary normal.
struct GhostSite {
  int axis;
  int i, j;          // ghost node
  int mi, mj;        // mirror node
  int ni, nj;        // nearest interior node
  double x, y;       // ghost coordinates
};

void apply_simple(const SimpleCondition& cond, SolutionField& f, const EquationSystem& eq,
                  const GhostSite& g, double t, GhostData kind) {
  const int m = f.components();
  const bool derivative = kind == GhostData::TimeDerivative;
  std::visit(
      Overloaded{
          [&](const Outflow&) {
            for (int c = 0; c < m; ++c) f(c, g.i, g.j) = f(c, g.ni, g.nj);
          },
          [&](const Reflecting&) {
            const int normal = eq.normal_momentum(g.axis);
            for (int c = 0; c < m; ++c) {
              const double v = f(c, g.mi, g.mj);
              f(c, g.i, g.j) = c == normal ? -v : v;
            }
          },
          [&](const Inflow& in) {
            if (static_cast<int>(in.state.size()) != m) throw ConfigError("inflow state has wrong size");
            for (int c = 0; c < m; ++c) f(c, g.i, g.j) = derivative ? 0.0 : in.state[c];
          },
          [&](const TimeDependentInflow& in) {
            if (derivative) {
              for (int c = 0; c < m; ++c) f(c, g.i, g.j) = 0.0;
              return;
            }
            const std::vector<double> s = in.state(g.x, g.y, t);
            if (static_cast<int>(s.size()) != m) throw ConfigError("inflow state has wrong size");
            for (int c = 0; c < m; ++c) {
              if (!std::isfinite(s[c])) throw InvalidStateError("non-finite inflow state");
              f(c, g.i, g.j) = s[c];
            }
          },
      },
      cond);
}

void apply(const BoundaryCondition& cond, SolutionField& f, const EquationSystem& eq,
           const GhostSite& g, double t, GhostData kind) {
  std::visit(Overloaded{
                 [&](const Periodic&) {},
                 [&](const Piecewise& pw) {
                   const double tangential = g.axis == 0 ? g.y : g.x;
                   apply_simple(tangential <= pw.split ? pw.lower : pw.upper, f, eq, g, t, kind);
                 },
                 [&](const auto& simple) { apply_simple(SimpleCondition{simple}, f, eq, g, t, kind); },
             },
             cond);
}

void fill_periodic_x(SolutionField& f, int j) {
  const int n = f.nx();
  const int g = f.ghost();
  for (int c = 0; c < f.components(); ++c) {
    double* row = f.data(c) + f.index(0, j);
    for (int d = 1; d <= g; ++d) {
      row[-d] = row[wrap(-d, n)];
      row[n - 1 + d] = row[wrap(n - 1 + d, n)];
    }
  }
}

void fill_periodic_y(SolutionField& f) {
  const int n = f.ny();
  const int g = f.ghost_y();
  const std::size_t pitch = f.pitch();
  for (int c = 0; c < f.components(); ++c) {
    for (int d = 1; d <= g; ++d) {
      std::copy_n(f.data(c) + f.index(-f.ghost(), wrap(-d, n)), pitch, f.data(c) + f.index(-f.ghost(), -d));
      std::copy_n(f.data(c) + f.index(-f.ghost(), wrap(n - 1 + d, n)), pitch,
                  f.data(c) + f.index(-f.ghost(), n - 1 + d));
    }
  }
}

}  // namespace

bool BoundarySpec::periodic(int axis) const {
  return std::holds_alternative<Periodic>(sides[2 * axis]) &&
         std::holds_alternative<Periodic>(sides[2 * axis + 1]);
}

void BoundarySpec::validate(int dimension) const {
  for (int a = 0; a < dimension; ++a) {
    const bool lo = std::holds_alternative<Periodic>(sides[2 * a]);
    const bool hi = std::holds_alternative<Periodic>(sides[2 * a + 1]);
    if (lo != hi) throw ConfigError("unmatched periodic boundary pair on axis " + std::to_string(a));
  }
}

void fill_ghosts(SolutionField& f, const BoundarySpec& bc, const EquationSystem& eq, double t, GhostData kind) {
  bc.validate(f.dimension());
  const int g = f.ghost();
  const int nx = f.nx();
  const AxisGrid& ax = f.axis(0);
  for (int a = 0; a < f.dimension(); ++a) {
    const int n = a == 0 ? f.nx() : f.ny();
    if (!bc.periodic(a) && n < g) throw ConfigError("interior narrower than the ghost halo");
  }

  for (int j = 0; j < f.ny(); ++j) {
    if (bc.periodic(0)) {
      fill_periodic_x(f, j);
      continue;
    }
    const double y = f.dimension() == 2 ? f.axis(1).coord(j) : 0.0;
    for (int d = 0; d < g; ++d) {
      const int lo = -1 - d;
      const int hi = nx + d;
      apply(bc.at(Side::XLow), f, eq, GhostSite{0, lo, j, d, j, 0, j, ax.coord(lo), y}, t, kind);
      apply(bc.at(Side::XHigh), f, eq, GhostSite{0, hi, j, nx - 1 - d, j, nx - 1, j, ax.coord(hi), y}, t, kind);
    }
  }
  if (f.dimension() < 2) return;

  if (bc.periodic(1)) {
    fill_periodic_y(f);
    return;
  }
  const int ny = f.ny();
  const AxisGrid& ay = f.axis(1);
  for (int d = 0; d < g; ++d) {
    const int lo = -1 - d;
    const int hi = ny + d;
    for (int i = -g; i < nx + g; ++i) {
      const double x = ax.coord(i);
      apply(bc.at(Side::YLow), f, eq, GhostSite{1, i, lo, i, d, i, 0, x, ay.coord(lo)}, t, kind);
      apply(bc.at(Side::YHigh), f, eq, GhostSite{1, i, hi, i, ny - 1 - d, i, ny - 1, x, ay.coord(hi)}, t, kind);
    }
  }
}

}  // namespace hyperlw
