#include <array>

#include "hyperlw/reconstruction.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw::simd::scalar {

namespace {

constexpr int kMaxWindow = 2 * kMaxWenoR - 1;

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

double reconstruct(const ReconstructionTables& t, const double* v, double eps, int power) {
  const int r = t.r;
  std::array<double, kMaxWenoR> alpha{};
  std::array<double, kMaxWenoR> value{};
  double sum = 0.0;
  for (int k = 0; k < r; ++k) {
    const double beta = t.indicator(k, {v + k, static_cast<std::size_t>(r)});
    alpha[k] = t.linear_weights[k] / ipow(eps + beta, power);
    sum += alpha[k];
    double p = 0.0;
    for (int j = 0; j < r; ++j) p += t.right[k][j] * v[k + j];
    value[k] = p;
  }
  double acc = 0.0;
  for (int k = 0; k < r; ++k) acc += alpha[k] * value[k];
  return acc / sum;
}

}  // namespace

void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n) {
  const ReconstructionTables& t = reconstruction_tables(r);
  std::array<double, kMaxWindow> plus{};
  std::array<double, kMaxWindow> minus{};
  const int w = 2 * r - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto base = static_cast<std::ptrdiff_t>(i);
    for (int q = 0; q < w; ++q) {
      plus[q] = fp[base + (q - r + 1) * stride];
      minus[q] = fm[base + (r - q) * stride];
    }
    hat[i] = reconstruct(t, plus.data(), eps, power) + reconstruct(t, minus.data(), eps, power);
  }
}

void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n) {
  const ReconstructionTables& t = reconstruction_tables(r);
  std::array<double, kMaxWindow> v{};
  const int w = 2 * r - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto base = static_cast<std::ptrdiff_t>(i);
    for (int q = 0; q < w; ++q) v[q] = f[base + (q - r + 1) * stride];
    double sum = 0.0;
    double acc = 0.0;
    for (int k = 0; k < r; ++k) {
      const double indicator = t.indicator(k, {v.data() + k, static_cast<std::size_t>(r)});
      const double alpha = t.derivative_weights[k] / ipow(indicator + eps, power);
      double d = 0.0;
      for (int j = 0; j < r; ++j) d += (t.right[k][j] - t.left[k][j]) * v[k + j];
      sum += alpha;
      acc += alpha * d;
    }
    out[i] += scale * (acc / sum);
  }
}

void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n) {
  const double gm1 = gamma - 1.0;
  if (dim == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double v = u[1][i] / u[0][i];
      const double p = gm1 * (u[2][i] - 0.5 * u[1][i] * v);
      f[0][i] = u[1][i];
      f[1][i] = u[1][i] * v + p;
      f[2][i] = (u[2][i] + p) * v;
    }
    return;
  }
  const double* mn = u[1 + axis];
  const double px = axis == 0 ? 1.0 : 0.0;
  const double py = 1.0 - px;
  for (std::size_t i = 0; i < n; ++i) {
    const double inv = 1.0 / u[0][i];
    const double vn = mn[i] * inv;
    const double p = gm1 * (u[3][i] - 0.5 * (u[1][i] * u[1][i] + u[2][i] * u[2][i]) * inv);
    f[0][i] = mn[i];
    f[1][i] = u[1][i] * vn + px * p;
    f[2][i] = u[2][i] * vn + py * p;
    f[3][i] = (u[3][i] + p) * vn;
  }
}

void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n) {
  const double gm1 = gamma - 1.0;
  if (dim == 1) {
    for (std::size_t i = 0; i < n; ++i) {
      const double v = u[1][i] / u[0][i];
      const double p = gm1 * (u[2][i] - 0.5 * u[1][i] * v);
      fx[0][i] += scale * u[1][i];
      fx[1][i] += scale * (u[1][i] * v + p);
      fx[2][i] += scale * ((u[2][i] + p) * v);
    }
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double inv = 1.0 / u[0][i];
    const double vx = u[1][i] * inv;
    const double vy = u[2][i] * inv;
    const double p = gm1 * (u[3][i] - 0.5 * (u[1][i] * vx + u[2][i] * vy));
    const double h = u[3][i] + p;
    fx[0][i] += scale * u[1][i];
    fx[1][i] += scale * (u[1][i] * vx + p);
    fx[2][i] += scale * (u[2][i] * vx);
    fx[3][i] += scale * (h * vx);
    fy[0][i] += scale * u[2][i];
    fy[1][i] += scale * (u[1][i] * vy);
    fy[2][i] += scale * (u[2][i] * vy + p);
    fy[3][i] += scale * (h * vy);
  }
}

void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int l = 0; l < count; ++l) acc += coef[l] * terms[l][i];
    out[i] = acc;
  }
}

void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const auto t = static_cast<std::ptrdiff_t>(i);
    double acc = 0.0;
    for (int q = 0; q < count; ++q) acc += weights[q] * f[t + offsets[q] * stride];
    out[i] += acc;
  }
}

}  // namespace hyperlw::simd::scalar
