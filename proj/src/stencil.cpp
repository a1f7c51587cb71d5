#include "hyperlw/stencil.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyperlw/error.hpp"

namespace hyperlw {

std::vector<long double> fornberg_weights(int p, long double at, std::span<const long double> nodes) {
  const int n = static_cast<int>(nodes.size());
  if (p < 0 || p >= n) throw std::invalid_argument("derivative order needs more nodes");
  // c[k][j]: weight of node j for the k-th derivative using the nodes seen so far.
  std::vector<std::vector<long double>> c(p + 1, std::vector<long double>(n, 0.0L));
  c[0][0] = 1.0L;
  long double c1 = 1.0L;
  long double c4 = nodes[0] - at;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, p);
    long double c2 = 1.0L;
    const long double c5 = c4;
    c4 = nodes[i] - at;
    for (int j = 0; j < i; ++j) {
      const long double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[k][i] = c1 * (k * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
        }
        c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[k][j] = (c4 * c[k][j] - k * c[k - 1][j]) / c3;
      }
      c[0][j] = c4 * c[0][j] / c3;
    }
    c1 = c2;
  }
  return c[p];
}

StencilCoefficients centered_coefficients(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("centered_coefficients needs p >= 1 and q >= 1");
  if (p + 2 * q > 20) {
    throw ConfigError("unsupported stencil order p + 2q = " + std::to_string(p + 2 * q));
  }
  const int s = (p + 1) / 2 + q - 1;
  std::vector<long double> nodes;
  StencilCoefficients out;
  out.derivative = p;
  out.half_accuracy = q;
  for (int j = -s; j <= s; ++j) {
    nodes.push_back(static_cast<long double>(j));
    out.offsets.push_back(j);
  }
  const std::vector<long double> w = fornberg_weights(p, 0.0L, nodes);
  // Symmetrize: the recursion is exact up to rounding, parity is exact.
  const long double sign = (p % 2 == 0) ? 1.0L : -1.0L;
  out.weights.resize(w.size());
  for (int j = 0; j <= 2 * s; ++j) {
    const long double a = w[j];
    const long double b = sign * w[2 * s - j];
    out.weights[j] = static_cast<double>(0.5L * (a + b));
  }
  if (p % 2 == 1) out.weights[s] = 0.0;
  return out;
}

double apply(const StencilCoefficients& coeffs, std::span<const double> samples, double h) {
  if (samples.size() != coeffs.weights.size()) {
    throw std::invalid_argument("stencil samples do not cover every offset");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < samples.size(); ++j) acc += coeffs.weights[j] * samples[j];
  return acc / std::pow(h, coeffs.derivative);
}

std::vector<double> apply(const StencilCoefficients& coeffs, std::span<const std::vector<double>> samples,
                          double h) {
  if (samples.size() != coeffs.weights.size()) {
    throw std::invalid_argument("stencil samples do not cover every offset");
  }
  if (samples.empty()) return {};
  const std::size_t m = samples.front().size();
  std::vector<double> acc(m, 0.0);
  for (std::size_t j = 0; j < samples.size(); ++j) {
    if (samples[j].size() != m) throw std::invalid_argument("ragged stencil samples");
    for (std::size_t c = 0; c < m; ++c) acc[c] += coeffs.weights[j] * samples[j][c];
  }
  const double scale = std::pow(h, coeffs.derivative);
  for (double& v : acc) v /= scale;
  return acc;
}

}  // namespace hyperlw
