#include "hyperlw/reconstruction.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hyperlw/error.hpp"
#include "hyperlw/stencil.hpp"

namespace hyperlw {

namespace {

using Matrix = std::vector<std::vector<long double>>;

// Inverse of a small dense matrix by Gauss-Jordan with partial pivoting.
Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<long double>(n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0L;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    }
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const long double d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const long double f = a[r][col];
      if (f == 0.0L) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

long double ipow(long double x, int e) {
  long double r = 1.0L;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

// Monomial coefficients of the polynomial whose averages over cells
// first..first+n-1 (unit cells centered on the integers) equal the data:
// coeffs[d][j] is the weight of datum j in the x^d coefficient.
Matrix cell_average_inverse(int first, int n) {
  Matrix a(n, std::vector<long double>(n));
  for (int j = 0; j < n; ++j) {
    const long double hi = first + j + 0.5L;
    const long double lo = first + j - 0.5L;
    for (int d = 0; d < n; ++d) a[j][d] = (ipow(hi, d + 1) - ipow(lo, d + 1)) / (d + 1);
  }
  return invert(a);
}

std::vector<long double> point_values(const Matrix& coeffs, long double x) {
  const std::size_t n = coeffs.size();
  std::vector<long double> row(n, 0.0L);
  for (std::size_t d = 0; d < n; ++d) {
    const long double xd = ipow(x, static_cast<int>(d));
    for (std::size_t j = 0; j < n; ++j) row[j] += coeffs[d][j] * xd;
  }
  return row;
}

long double falling(int d, int l) {
  long double r = 1.0L;
  for (int i = 0; i < l; ++i) r *= (d - i);
  return r;
}

// Solves sum_k w_k row_k = target, where row_k is supported on window slots
// k..k+r-1, using the first r (lower-triangular) equations.
std::vector<double> match_combination(const std::vector<std::vector<long double>>& rows,
                                      const std::vector<long double>& target) {
  const int r = static_cast<int>(rows.size());
  std::vector<long double> w(r, 0.0L);
  for (int j = 0; j < r; ++j) {
    long double acc = target[j];
    for (int k = 0; k < j; ++k) acc -= w[k] * rows[k][j - k];
    w[j] = acc / rows[j][0];
  }
  return {w.begin(), w.end()};
}

ReconstructionTables build(int r) {
  ReconstructionTables t;
  t.r = r;
  const int n = r;

  // sum_l int_{-1/2}^{1/2} D^l x^d D^l x^e dx in the monomial basis.
  Matrix gram(n, std::vector<long double>(n, 0.0L));
  for (int l = 1; l < r; ++l) {
    for (int d = l; d < n; ++d) {
      for (int e = l; e < n; ++e) {
        const int a = d - l + e - l;
        if (a % 2 != 0) continue;
        const long double integral = 2.0L * ipow(0.5L, a + 1) / (a + 1);
        gram[d][e] += falling(d, l) * falling(e, l) * integral;
      }
    }
  }

  std::vector<std::vector<long double>> right_ld;
  std::vector<std::vector<long double>> diff_ld;
  for (int k = 0; k < r; ++k) {
    const Matrix coeffs = cell_average_inverse(k - r + 1, n);
    const std::vector<long double> right = point_values(coeffs, 0.5L);
    const std::vector<long double> left = point_values(coeffs, -0.5L);
    t.right.emplace_back(right.begin(), right.end());
    t.left.emplace_back(left.begin(), left.end());
    right_ld.push_back(right);
    std::vector<long double> diff(n);
    for (int j = 0; j < n; ++j) diff[j] = right[j] - left[j];
    diff_ld.push_back(diff);

    std::vector<double> q(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        long double acc = 0.0L;
        for (int d = 0; d < n; ++d) {
          for (int e = 0; e < n; ++e) acc += coeffs[d][i] * gram[d][e] * coeffs[e][j];
        }
        q[static_cast<std::size_t>(i) * n + j] = static_cast<double>(acc);
      }
    }
    t.smoothness.push_back(std::move(q));
  }

  const Matrix big = cell_average_inverse(-r + 1, 2 * r - 1);
  t.linear_weights = match_combination(right_ld, point_values(big, 0.5L));

  const StencilCoefficients centered = centered_coefficients(1, r - 1);
  std::vector<long double> target(centered.weights.begin(), centered.weights.end());
  t.derivative_weights = match_combination(diff_ld, target);
  return t;
}

}  // namespace

double ReconstructionTables::indicator(int k, std::span<const double> v) const {
  const std::vector<double>& q = smoothness[k];
  double acc = 0.0;
  for (int i = 0; i < r; ++i) {
    double row = 0.0;
    for (int j = 0; j < r; ++j) row += q[static_cast<std::size_t>(i) * r + j] * v[j];
    acc += v[i] * row;
  }
  return acc;
}

const ReconstructionTables& reconstruction_tables(int r) {
  if (r < kMinWenoR || r > kMaxWenoR) {
    throw ConfigError("WENO substencil width r = " + std::to_string(r) + " is not supported");
  }
  static const std::array<ReconstructionTables, kMaxWenoR - kMinWenoR + 1> tables = [] {
    std::array<ReconstructionTables, kMaxWenoR - kMinWenoR + 1> all;
    for (int r = kMinWenoR; r <= kMaxWenoR; ++r) all[r - kMinWenoR] = build(r);
    return all;
  }();
  return tables[r - kMinWenoR];
}

}  // namespace hyperlw
