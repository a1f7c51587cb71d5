#include "hyperlw/lw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperlw/cweno.hpp"
#include "hyperlw/error.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool same_layout(const SolutionField& a, const SolutionField& b) {
  return a.components() == b.components() && a.dimension() == b.dimension() && a.pitch() == b.pitch() &&
         a.padded_rows() == b.padded_rows() && a.ghost() == b.ghost();
}

void zero_box(SolutionField& f, const NodeBox& box) {
  for (int c = 0; c < f.components(); ++c) {
    for (int j = box.j0; j < box.j1; ++j) std::fill_n(f.data(c) + f.index(box.i0, j), box.width(), 0.0);
  }
}

[[noreturn]] void throw_sample_failure(int i, int j, int k, int offset, const std::vector<double>& state) {
  std::ostringstream msg;
  msg << "inadmissible Taylor sample at node (" << i << ", " << j << "), recursion level " << k
      << ", time offset " << offset << " delta: (";
  for (std::size_t c = 0; c < state.size(); ++c) msg << (c ? ", " : "") << state[c];
  msg << ")";
  throw PositivityError(msg.str());
}

}  // namespace

void LwConfig::validate(const EquationSystem& eq) const {
  weno.validate();
  if (time_order < 1) throw ConfigError("temporal order must be at least 1");
  if (time_order > 12) throw ConfigError("temporal order above 12 is not supported");
  if (exact) {
    if (eq.exact_derivatives() == nullptr || eq.dimension() != 1 || eq.components() != 1) {
      throw ConfigError("exact Lax-Wendroff fluxes are only available for scalar 1D laws");
    }
    if (time_order > 3) throw ConfigError("exact Lax-Wendroff fluxes are limited to R <= 3");
  }
}

int lw_ghost_width(int r, int time_order) {
  int g = r;
  for (int k = 1; k < time_order; ++k) g += lw_half_accuracy(time_order, k);
  return g;
}

// --- Taylor polynomial --------------------------------------------------------

TaylorPolynomial::TaylorPolynomial(std::vector<std::vector<double>> derivatives)
    : derivatives_(std::move(derivatives)) {
  if (derivatives_.empty()) throw std::invalid_argument("Taylor polynomial needs at least u^(0)");
}

std::vector<double> TaylorPolynomial::operator()(double rho) const {
  const int k = degree();
  std::vector<double> acc(derivatives_[k]);
  for (int l = k - 1; l >= 0; --l) {
    // acc <- d_l + rho / (l+1) * acc
    const double factor = rho / (l + 1);
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = derivatives_[l][c] + factor * acc[c];
  }
  return acc;
}

std::vector<double> flux_time_derivative(const TaylorPolynomial& taylor, const EquationSystem& eq, int axis, int k,
                                         int time_order, double delta) {
  if (k < 1 || k >= time_order) throw std::invalid_argument("flux time derivative needs 1 <= k <= R-1");
  if (taylor.degree() < k) throw std::invalid_argument("Taylor polynomial degree below k");
  const StencilCoefficients st = centered_coefficients(k, lw_half_accuracy(time_order, k));
  std::vector<std::vector<double>> samples;
  for (int offset : st.offsets) {
    std::vector<double> s = taylor(offset * delta);
    ConstRows rows{};
    for (std::size_t c = 0; c < s.size(); ++c) rows[c] = &s[c];
    if (eq.first_inadmissible(rows, 1) == 0) throw_sample_failure(0, 0, k, offset, s);
    samples.push_back(eq.flux(s, axis));
  }
  return apply(st, samples, delta);
}

// --- tower ----------------------------------------------------------------------

TaylorPolynomial DerivativeTower::taylor(int k, int i, int j) const {
  std::vector<std::vector<double>> d;
  d.push_back(levels_.at(0).state(i, j));
  if (k >= 1) d.push_back(recursion_first().state(i, j));
  for (int l = 2; l <= k; ++l) d.push_back(levels_.at(l).state(i, j));
  return TaylorPolynomial(std::move(d));
}

std::vector<double> taylor_eval(const DerivativeTower& tower, int k, double rho, int i, int j) {
  return tower.taylor(k, i, j)(rho);
}

// --- integrator -----------------------------------------------------------------

LaxWendroffIntegrator::LaxWendroffIntegrator(const EquationSystem& eq, LwConfig cfg)
    : eq_(&eq), cfg_(cfg), upwind_(eq, cfg.weno) {
  cfg_.validate(eq);
  const int R = cfg_.time_order;
  temporal_.resize(R);
  spatial_.resize(R);
  for (int k = 1; k < R; ++k) {
    const int q = lw_half_accuracy(R, k);
    temporal_[k] = centered_coefficients(k, q);
    spatial_[k] = centered_coefficients(1, q);
  }
}

std::string LaxWendroffIntegrator::name() const {
  std::string s = "WENO" + std::to_string(cfg_.weno.order()) + "-LW";
  if (!cfg_.exact) s += "A";
  if (cfg_.fluctuation_control) s += "F";
  return s + std::to_string(cfg_.time_order);
}

int LaxWendroffIntegrator::ghost_width() const { return lw_ghost_width(cfg_.weno.r, cfg_.time_order); }

void LaxWendroffIntegrator::prepare(const SolutionField& u) {
  const int R = cfg_.time_order;
  DerivativeTower& t = tower_;
  const bool reuse = !t.levels_.empty() && same_layout(t.levels_.front(), u);
  if (!reuse) {
    t.levels_.clear();
    t.fluxes_.clear();
    for (int l = 0; l <= R; ++l) t.levels_.push_back(zeros_like(u));
    for (int k = 0; k < R; ++k) {
      std::array<SolutionField, 2> per_axis;
      for (int a = 0; a < u.dimension(); ++a) per_axis[a] = zeros_like(u);
      t.fluxes_.push_back(std::move(per_axis));
    }
    t.smoothed_ = cfg_.fluctuation_control ? zeros_like(u) : SolutionField{};
  }
  t.boxes_.assign(R + 1, NodeBox::grown(u, u.ghost()));
  t.time_order_ = R;
  t.has_smoothed_ = cfg_.fluctuation_control;
  const std::size_t width = u.pitch();
  state_.resize(static_cast<std::size_t>(u.components()) * width);
}

void LaxWendroffIntegrator::fill_level_ghosts(SolutionField& level, const BoundarySpec& bc, double t) const {
  fill_ghosts(level, bc, *eq_, t, GhostData::TimeDerivative);
}

const DerivativeTower& LaxWendroffIntegrator::compute_tower(const SolutionField& u, const BoundarySpec& bc,
                                                            double delta) {
  if (u.ghost() < ghost_width()) {
    throw ConfigError("field halo " + std::to_string(u.ghost()) + " is narrower than the required " +
                      std::to_string(ghost_width()));
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) throw ConfigError("time step must be positive and finite");
  prepare(u);
  DerivativeTower& t = tower_;
  t.delta_ = delta;
  const int R = cfg_.time_order;
  const int dim = u.dimension();
  const NodeBox interior = NodeBox::grown(u, 0);

  std::copy(u.values().begin(), u.values().end(), t.levels_[0].values().begin());
  t.levels_[0].set_time(u.time());

  const std::array<double, 2> alpha = upwind_.splitting_speeds(u);
  upwind_.evaluate(u, alpha, interior, t.levels_[1]);
  fill_level_ghosts(t.levels_[1], bc, u.time());
  for (int a = 0; a < dim; ++a) {
    const std::span<const double> src = upwind_.nodal_flux(a).values();
    std::copy(src.begin(), src.end(), t.fluxes_[0][a].values().begin());
  }
  if (cfg_.fluctuation_control) {
    fluctuation_controlled_field(std::span<const SolutionField>(t.fluxes_[0].data(), static_cast<std::size_t>(dim)),
                                 cfg_.weno.r, interior, t.smoothed_);
    fill_level_ghosts(t.smoothed_, bc, u.time());
  }

  for (int k = 1; k < R; ++k) {
    const NodeBox flux_box = NodeBox::grown(u, lw_half_accuracy(R, k));
    if (cfg_.exact) {
      exact_flux_level(k, flux_box);
    } else {
      approximate_flux_level(k, flux_box);
    }
    divergence_level(k, interior);
    fill_level_ghosts(t.levels_[k + 1], bc, u.time());
  }
  return t;
}

void LaxWendroffIntegrator::approximate_flux_level(int k, const NodeBox& box) {
  DerivativeTower& t = tower_;
  const StencilCoefficients& st = temporal_[k];
  const SolutionField& u0 = t.levels_[0];
  const SolutionField& first = t.recursion_first();
  const int m = u0.components();
  const int dim = u0.dimension();
  const auto width = static_cast<std::size_t>(box.width());
  const double inv_scale = 1.0 / std::pow(t.delta_, k);

  for (int a = 0; a < dim; ++a) zero_box(t.fluxes_[k][a], box);

  Rows state{};
  ConstRows state_in{};
  for (int c = 0; c < m; ++c) {
    state[c] = state_.data() + static_cast<std::size_t>(c) * width;
    state_in[c] = state[c];
  }
  std::vector<double> coef(static_cast<std::size_t>(k) + 1);

  for (std::size_t q = 0; q < st.offsets.size(); ++q) {
    const double w = st.weights[q];
    if (w == 0.0) continue;
    const int offset = st.offsets[q];
    const double scale = w * inv_scale;
    const double rho = offset * t.delta_;
    for (int l = 0; l <= k; ++l) coef[l] = std::pow(rho, l) / factorial(l);

    for (int j = box.j0; j < box.j1; ++j) {
      const std::size_t base = u0.index(box.i0, j);
      if (offset == 0) {
        for (int a = 0; a < dim; ++a) {
          for (int c = 0; c < m; ++c) {
            const double* f0 = t.fluxes_[0][a].data(c) + base;
            double* out = t.fluxes_[k][a].data(c) + base;
            for (std::size_t x = 0; x < width; ++x) out[x] += scale * f0[x];
          }
        }
        continue;
      }
      for (int c = 0; c < m; ++c) {
        std::array<const double*, 16> terms{};
        terms[0] = u0.data(c) + base;
        terms[1] = first.data(c) + base;
        for (int l = 2; l <= k; ++l) terms[l] = t.levels_[l].data(c) + base;
        simd::linear_combination(terms.data(), coef.data(), k + 1, state[c], width);
      }
      const std::size_t bad = cfg_.strict_samples ? eq_->first_inadmissible(state_in, width) : width;
      if (bad < width) {
        std::vector<double> s(m);
        for (int c = 0; c < m; ++c) s[c] = state[c][bad];
        throw_sample_failure(box.i0 + static_cast<int>(bad), j, k, offset, s);
      }
      std::array<Rows, 2> out{};
      for (int a = 0; a < dim; ++a) {
        for (int c = 0; c < m; ++c) out[a][c] = t.fluxes_[k][a].data(c) + base;
      }
      eq_->add_fluxes(state_in, scale, out, width);
    }
  }
  require_finite_level(k, box);
}

void LaxWendroffIntegrator::require_finite_level(int k, const NodeBox& box) const {
  const DerivativeTower& t = tower_;
  for (int a = 0; a < t.dimension(); ++a) {
    const SolutionField& f = t.fluxes_[k][a];
    for (int c = 0; c < f.components(); ++c) {
      for (int j = box.j0; j < box.j1; ++j) {
        const double* row = f.data(c) + f.index(box.i0, j);
        for (int x = 0; x < box.width(); ++x) {
          if (std::isfinite(row[x])) continue;
          throw PositivityError("non-finite flux time derivative at node (" + std::to_string(box.i0 + x) + ", " +
                                std::to_string(j) + "), recursion level " + std::to_string(k));
        }
      }
    }
  }
}

void LaxWendroffIntegrator::exact_flux_level(int k, const NodeBox& box) {
  DerivativeTower& t = tower_;
  const ScalarFluxDerivatives& d = *eq_->exact_derivatives();
  const double* u0 = t.levels_[0].data(0);
  const double* u1 = t.recursion_first().data(0);
  const double* u2 = t.levels_[2].data(0);
  double* out = t.fluxes_[k][0].data(0);
  for (int i = box.i0; i < box.i1; ++i) {
    const std::size_t n = t.levels_[0].index(i);
    if (k == 1) {
      out[n] = d.first(u0[n]) * u1[n];
    } else {
      out[n] = d.second(u0[n]) * u1[n] * u1[n] + d.first(u0[n]) * u2[n];
    }
  }
}

void LaxWendroffIntegrator::divergence_level(int k, const NodeBox& box) {
  DerivativeTower& t = tower_;
  SolutionField& out = t.levels_[k + 1];
  const StencilCoefficients& sw = spatial_[k];
  zero_box(out, box);
  const auto width = static_cast<std::size_t>(box.width());
  for (int a = 0; a < out.dimension(); ++a) {
    const SolutionField& f = t.fluxes_[k][a];
    const std::ptrdiff_t stride = f.stride(a);
    const double inv_h = 1.0 / f.spacing(a);
    std::vector<int> offsets;
    std::vector<double> weights;
    for (std::size_t q = 0; q < sw.offsets.size(); ++q) {
      if (sw.weights[q] == 0.0) continue;
      offsets.push_back(sw.offsets[q]);
      weights.push_back(-sw.weights[q] * inv_h);
    }
    for (int c = 0; c < out.components(); ++c) {
      for (int j = box.j0; j < box.j1; ++j) {
        const std::size_t base = f.index(box.i0, j);
        const double* fc = f.data(c) + base;
        double* o = out.data(c) + base;
        simd::stencil_accumulate(fc, stride, offsets.data(), weights.data(), static_cast<int>(offsets.size()), o,
                                 width);
      }
    }
  }
}

void LaxWendroffIntegrator::step(SolutionField& u, const BoundarySpec& bc, double delta) {
  fill_ghosts(u, bc, *eq_, u.time());
  compute_tower(u, bc, delta);
  const int R = cfg_.time_order;
  std::vector<double> coef(R + 1, 1.0);
  for (int l = 1; l <= R; ++l) coef[l] = std::pow(delta, l) / factorial(l);
  const auto width = static_cast<std::size_t>(u.nx());
  std::vector<const double*> terms(R + 1);
  for (int c = 0; c < u.components(); ++c) {
    for (int j = 0; j < u.ny(); ++j) {
      const std::size_t base = u.index(0, j);
      double* target = u.data(c) + base;
      terms[0] = target;
      for (int l = 1; l <= R; ++l) terms[l] = tower_.levels_[l].data(c) + base;
      simd::linear_combination(terms.data(), coef.data(), R + 1, target, width);
    }
  }
  u.set_time(u.time() + delta);
  require_admissible(*eq_, u, name() + " step");
}

}  // namespace hyperlw
