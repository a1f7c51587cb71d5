#include "hyperlw/cweno.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hyperlw/error.hpp"
#include "hyperlw/reconstruction.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw {

namespace {

constexpr double kLambdaFloor = 1e-12;

int window_r(std::span<const double> window) {
  if (window.size() % 2 == 0) throw std::invalid_argument("CWENO window must hold 2r-1 values");
  return static_cast<int>((window.size() + 1) / 2);
}

}  // namespace

std::vector<double> ideal_derivative_weights(int r) { return reconstruction_tables(r).derivative_weights; }

double cweno_smoothness(std::span<const double> values, int k) {
  const int r = static_cast<int>(values.size());
  const ReconstructionTables& t = reconstruction_tables(r);
  if (k < 0 || k >= r) throw std::invalid_argument("substencil index out of range");
  return t.indicator(k, values);
}

std::vector<double> cweno_weights(std::span<const double> window, double h, double lambda) {
  const int r = window_r(window);
  const ReconstructionTables& t = reconstruction_tables(r);
  const double eps = lambda * h * h;
  const int m = cweno_exponent(r);
  std::vector<double> w(r);
  double sum = 0.0;
  for (int k = 0; k < r; ++k) {
    const double indicator = t.indicator(k, window.subspan(k, r));
    w[k] = t.derivative_weights[k] / std::pow(indicator + eps, m);
    sum += w[k];
  }
  for (double& v : w) v /= sum;
  return w;
}

double fluctuation_controlled_derivative(std::span<const double> window, double h, double lambda) {
  const int r = window_r(window);
  const ReconstructionTables& t = reconstruction_tables(r);
  const std::vector<double> w = cweno_weights(window, h, lambda);
  double acc = 0.0;
  for (int k = 0; k < r; ++k) {
    double d = 0.0;
    for (int j = 0; j < r; ++j) d += (t.right[k][j] - t.left[k][j]) * window[k + j];
    acc += w[k] * d;
  }
  return -acc / h;
}

double cweno_lambda(const SolutionField& flux, int component, int axis) {
  const double h = flux.spacing(axis);
  const std::ptrdiff_t s = flux.stride(axis);
  double lambda = 0.0;
  for (int j = 0; j < flux.ny(); ++j) {
    const double* f = flux.data(component) + flux.index(0, j);
    for (int i = 0; i < flux.nx(); ++i) {
      lambda = std::max(lambda, std::abs(f[i + s] - f[i - s]));
    }
  }
  return std::max(kLambdaFloor, lambda / (2.0 * h));
}

void fluctuation_controlled_field(std::span<const SolutionField> flux, int r, const NodeBox& box,
                                  SolutionField& out) {
  const int m = out.components();
  const int width = box.width();
  for (int c = 0; c < m; ++c) {
    for (int j = box.j0; j < box.j1; ++j) std::fill_n(out.data(c) + out.index(box.i0, j), width, 0.0);
  }
  const int power = cweno_exponent(r);
  for (int axis = 0; axis < out.dimension(); ++axis) {
    const SolutionField& f = flux[axis];
    const double h = f.spacing(axis);
    const std::ptrdiff_t stride = f.stride(axis);
    for (int c = 0; c < m; ++c) {
      const double eps = cweno_lambda(f, c, axis) * h * h;
      for (int j = box.j0; j < box.j1; ++j) {
        const std::size_t start = f.index(box.i0, j);
        simd::cweno_derivative(r, eps, power, -1.0 / h, f.data(c) + start, stride, out.data(c) + start,
                               static_cast<std::size_t>(width));
      }
    }
  }
}

}  // namespace hyperlw
