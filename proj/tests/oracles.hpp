#pragma once

// Exact rational oracles shared by the unit tests and the acceptance run.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <vector>

namespace hyperlw::testing {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

// Solves the square system a x = b exactly. a is n x (n + 1), augmented.
inline std::vector<Rational> solve(Matrix a) {
  const int n = static_cast<int>(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
  return x;
}

inline Rational power(Rational x, int e) {
  Rational v = 1;
  for (int i = 0; i < e; ++i) v *= x;
  return v;
}

// Row of window weights for p_k(1/2) - p_k(-1/2), where p_k has the window
// values of cells k-r+1..k as unit-cell averages.
inline std::vector<Rational> substencil_difference(int r, int k) {
  // p(x) = sum_e a_e x^e; average over [j - 1/2, j + 1/2] of x^e is
  // ((j + 1/2)^{e+1} - (j - 1/2)^{e+1}) / (e + 1).
  const Rational half(1, 2);
  std::vector<Rational> row(2 * r - 1);
  for (int s = 0; s < r; ++s) {
    Matrix a(r, std::vector<Rational>(r + 1));
    for (int j = 0; j < r; ++j) {
      const Rational cell = k - r + 1 + j;
      for (int e = 0; e < r; ++e) a[j][e] = (power(cell + half, e + 1) - power(cell - half, e + 1)) / (e + 1);
      a[j][r] = j == s ? 1 : 0;
    }
    const auto coef = solve(a);
    Rational d = 0;
    for (int e = 0; e < r; ++e) d += coef[e] * (power(half, e) - power(-half, e));
    row[k + s] = d;
  }
  return row;
}

// Ideal weights from matching the centered (2r-1)-point derivative row.
inline std::vector<double> ideal_weights_oracle(int r) {
  std::vector<std::vector<Rational>> rows;
  for (int k = 0; k < r; ++k) rows.push_back(substencil_difference(r, k));
  // Centered derivative weights on offsets -(r-1)..(r-1).
  const int n = 2 * r - 1;
  Matrix v(n, std::vector<Rational>(n + 1));
  for (int e = 0; e < n; ++e) {
    for (int j = 0; j < n; ++j) v[e][j] = power(Rational(j - (r - 1)), e);
    v[e][n] = e == 1 ? 1 : 0;
  }
  const auto central = solve(v);
  // The outer r equations determine c; the remaining ones must follow.
  Matrix a(r, std::vector<Rational>(r + 1));
  for (int eqn = 0; eqn < r; ++eqn) {
    for (int k = 0; k < r; ++k) a[eqn][k] = rows[k][eqn];
    a[eqn][r] = central[eqn];
  }
  const auto c = solve(a);
  for (int s = 0; s < n; ++s) {
    Rational acc = 0;
    for (int k = 0; k < r; ++k) acc += c[k] * rows[k][s];
    if (acc != central[s]) throw std::logic_error("ideal weights do not reproduce the centered row");
  }
  std::vector<double> out;
  for (const auto& x : c) out.push_back(static_cast<double>(x));
  return out;
}

// Exact solve of the moment system sum_j w_j j^k = p! [k == p], k = 0..2s,
// on offsets -s..s by Gauss-Jordan elimination over the rationals.
inline std::vector<double> vandermonde_weights(int p, int s) {
  const int n = 2 * s + 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < n; ++j) {
      Rational v = 1;
      for (int e = 0; e < k; ++e) v *= (j - s);
      a[k][j] = v;
    }
    Rational rhs = 0;
    if (k == p) {
      rhs = 1;
      for (int e = 2; e <= p; ++e) rhs *= e;
    }
    a[k][n] = rhs;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = static_cast<double>(Rational(a[j][n] / a[j][j]));
  return w;
}

}  // namespace hyperlw::testing
