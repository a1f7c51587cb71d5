#include "hyperlw/weno.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperlw/error.hpp"
#include "hyperlw/reconstruction.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw {

void WenoConfig::validate() const {
  if (r < kMinWenoR || r > kMaxWenoR) {
    throw ConfigError("WENO r must lie in [" + std::to_string(kMinWenoR) + ", " + std::to_string(kMaxWenoR) +
                      "], got " + std::to_string(r));
  }
  if (!(epsilon > 0.0)) throw ConfigError("WENO epsilon must be positive");
  if (power < 1) throw ConfigError("WENO weight exponent must be at least 1");
}

std::vector<double> weno_weights(std::span<const double> window, const WenoConfig& cfg) {
  cfg.validate();
  if (static_cast<int>(window.size()) != 2 * cfg.r - 1) throw std::invalid_argument("WENO window must hold 2r-1 values");
  const ReconstructionTables& t = reconstruction_tables(cfg.r);
  std::vector<double> w(cfg.r);
  double sum = 0.0;
  for (int k = 0; k < cfg.r; ++k) {
    const double beta = t.indicator(k, window.subspan(k, cfg.r));
    w[k] = t.linear_weights[k] / std::pow(cfg.epsilon + beta, cfg.power);
    sum += w[k];
  }
  for (double& v : w) v /= sum;
  return w;
}

double weno_reconstruct(std::span<const double> window, const WenoConfig& cfg) {
  const std::vector<double> w = weno_weights(window, cfg);
  const ReconstructionTables& t = reconstruction_tables(cfg.r);
  double acc = 0.0;
  for (int k = 0; k < cfg.r; ++k) {
    double p = 0.0;
    for (int j = 0; j < cfg.r; ++j) p += t.right[k][j] * window[k + j];
    acc += w[k] * p;
  }
  return acc;
}

std::vector<double> upwind_flux(std::span<const std::vector<double>> window, const EquationSystem& eq, int axis,
                                double alpha, const WenoConfig& cfg) {
  cfg.validate();
  const int r = cfg.r;
  if (static_cast<int>(window.size()) != 2 * r) throw std::invalid_argument("upwind flux needs 2r states");
  const int m = eq.components();
  std::vector<std::vector<double>> plus(m, std::vector<double>(2 * r));
  std::vector<std::vector<double>> minus(m, std::vector<double>(2 * r));
  for (int q = 0; q < 2 * r; ++q) {
    const std::vector<double> f = eq.flux(window[q], axis);
    for (int c = 0; c < m; ++c) {
      plus[c][q] = 0.5 * (f[c] + alpha * window[q][c]);
      minus[c][q] = 0.5 * (f[c] - alpha * window[q][c]);
    }
  }
  std::vector<double> out(m);
  for (int c = 0; c < m; ++c) {
    std::vector<double> mirrored(minus[c].rbegin(), minus[c].rend() - 1);
    out[c] = weno_reconstruct(std::span(plus[c]).first(2 * r - 1), cfg) + weno_reconstruct(mirrored, cfg);
  }
  return out;
}

UpwindDerivative::UpwindDerivative(const EquationSystem& eq, WenoConfig cfg) : eq_(&eq), cfg_(cfg) {
  cfg_.validate();
}

std::array<double, 2> UpwindDerivative::splitting_speeds(const SolutionField& u) const {
  std::array<double, 2> s{0.0, 0.0};
  for (int a = 0; a < u.dimension(); ++a) s[a] = max_wave_speed_padded(*eq_, u, a);
  return s;
}

void UpwindDerivative::prepare(const SolutionField& u) {
  const bool same = plus_.plane() == u.plane() && plus_.components() == u.components() &&
                    plus_.pitch() == u.pitch();
  if (same) return;
  for (int a = 0; a < u.dimension(); ++a) flux_[a] = zeros_like(u);
  plus_ = zeros_like(u);
  minus_ = zeros_like(u);
}

void UpwindDerivative::evaluate(const SolutionField& u, std::span<const double> alpha, const NodeBox& box,
                                SolutionField& out) {
  if (u.ghost() < cfg_.r) throw ConfigError("ghost halo narrower than the WENO stencil");
  prepare(u);
  const int m = u.components();
  const std::size_t plane = u.plane();
  const int width = box.width();
  const int r = cfg_.r;

  for (int c = 0; c < m; ++c) {
    for (int j = box.j0; j < box.j1; ++j) std::fill_n(out.data(c) + out.index(box.i0, j), width, 0.0);
  }

  for (int axis = 0; axis < u.dimension(); ++axis) {
    eq_->flux(axis, u.rows_at(0), flux_[axis].rows_at(0), plane);
    const double a = alpha[axis];
    for (int c = 0; c < m; ++c) {
      const double* uc = u.data(c);
      const double* fc = flux_[axis].data(c);
      double* p = plus_.data(c);
      double* q = minus_.data(c);
      for (std::size_t k = 0; k < plane; ++k) {
        p[k] = 0.5 * (fc[k] + a * uc[k]);
        q[k] = 0.5 * (fc[k] - a * uc[k]);
      }
    }
    const double inv_h = 1.0 / u.spacing(axis);

    if (axis == 0) {
      const auto n = static_cast<std::size_t>(width + 1);
      hat_lo_.resize(n);
      for (int c = 0; c < m; ++c) {
        for (int j = box.j0; j < box.j1; ++j) {
          const std::size_t start = u.index(box.i0 - 1, j);
          simd::weno_split_flux(r, cfg_.epsilon, cfg_.power, plus_.data(c) + start, minus_.data(c) + start, 1,
                                hat_lo_.data(), n);
          double* o = out.data(c) + out.index(box.i0, j);
          for (int t = 0; t < width; ++t) o[t] -= (hat_lo_[t + 1] - hat_lo_[t]) * inv_h;
        }
      }
      continue;
    }

    const auto n = static_cast<std::size_t>(width);
    const std::ptrdiff_t stride = u.stride(1);
    hat_lo_.resize(n);
    hat_hi_.resize(n);
    for (int c = 0; c < m; ++c) {
      std::size_t start = u.index(box.i0, box.j0 - 1);
      simd::weno_split_flux(r, cfg_.epsilon, cfg_.power, plus_.data(c) + start, minus_.data(c) + start, stride,
                            hat_lo_.data(), n);
      for (int j = box.j0; j < box.j1; ++j) {
        start = u.index(box.i0, j);
        simd::weno_split_flux(r, cfg_.epsilon, cfg_.power, plus_.data(c) + start, minus_.data(c) + start, stride,
                              hat_hi_.data(), n);
        double* o = out.data(c) + start;
        for (int t = 0; t < width; ++t) o[t] -= (hat_hi_[t] - hat_lo_[t]) * inv_h;
        std::swap(hat_lo_, hat_hi_);
      }
    }
  }
}

SolutionField flux_derivative(const SolutionField& u, const EquationSystem& eq, const WenoConfig& cfg) {
  UpwindDerivative op(eq, cfg);
  SolutionField out = zeros_like(u);
  const std::array<double, 2> alpha = op.splitting_speeds(u);
  op.evaluate(u, alpha, NodeBox::grown(u, 0), out);
  return out;
}

}  // namespace hyperlw
