#pragma once

#include <span>
#include <vector>

namespace hyperlw {

/// Centered finite-difference operator for the p-th derivative, accurate to
/// order 2q. Applied to samples u(a + j h) for j in `offsets` and divided by
/// h^p it approximates u^{(p)}(a).
struct StencilCoefficients {
  int derivative = 1;
  int half_accuracy = 1;
  std::vector<int> offsets;
  std::vector<double> weights;

  int half_width() const { return offsets.empty() ? 0 : offsets.back(); }
};

/// Minimal symmetric stencil, half-width ceil(p/2) + q - 1, exact on
/// polynomials of degree < p + 2q. Weights come from Fornberg's recursion
/// evaluated in extended precision.
///
/// Throws std::invalid_argument for p < 1 or q < 1 and ConfigError when
/// p + 2q > 20.
StencilCoefficients centered_coefficients(int p, int q);

/// Weights for the p-th derivative at `at` from samples at `nodes` (unit
/// spacing), exact on polynomials of degree < nodes.size().
std::vector<long double> fornberg_weights(int p, long double at, std::span<const long double> nodes);

/// sum_j w_j samples_j / h^p. `samples` are ordered like `coeffs.offsets`.
/// Throws std::invalid_argument if the sample count does not match.
double apply(const StencilCoefficients& coeffs, std::span<const double> samples, double h);

/// Componentwise version for m-vector samples.
std::vector<double> apply(const StencilCoefficients& coeffs, std::span<const std::vector<double>> samples,
                          double h);

}  // namespace hyperlw
