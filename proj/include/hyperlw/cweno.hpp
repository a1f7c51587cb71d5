#pragma once

#include <array>
#include <span>
#include <vector>

#include "hyperlw/equations.hpp"
#include "hyperlw/field.hpp"

namespace hyperlw {

/// Convex weights c_k combining the r substencil derivatives into the
/// (2r-1)-point centered derivative at the node. Positive and summing to 1.
std::vector<double> ideal_derivative_weights(int r);

/// Smoothness indicator I_k of substencil k from its r flux values.
/// The h^{2l-1} factors make it independent of the grid spacing.
double cweno_smoothness(std::span<const double> values, int k);

/// Exponent m = ceil(r/2) of the fluctuation-control weights.
inline int cweno_exponent(int r) { return (r + 1) / 2; }

/// Weights w_k = a_k / sum a, a_k = c_k / (I_k + lambda h^2)^m for a
/// window of 2r-1 flux values f_{i-r+1..i+r-1}.
std::vector<double> cweno_weights(std::span<const double> window, double h, double lambda);

/// -sum_k w_k (p_k(x_{i+1/2}) - p_k(x_{i-1/2})) / h.
double fluctuation_controlled_derivative(std::span<const double> window, double h, double lambda);

/// Scale of the regularization: max(1e-12, max_i |f_{i+1} - f_{i-1}| / (2h))
/// over interior nodes of one component of a nodal flux plane.
double cweno_lambda(const SolutionField& flux, int component, int axis);

/// Fluctuation-controlled approximation of u_t on `box`, written to `out`.
/// `flux[axis]` holds f^axis(u) on the padded plane; needs values on `box`
/// grown by r-1 along each axis.
void fluctuation_controlled_field(std::span<const SolutionField> flux, int r, const NodeBox& box,
                                  SolutionField& out);

}  // namespace hyperlw
