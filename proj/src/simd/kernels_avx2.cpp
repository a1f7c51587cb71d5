// Compiled with -mavx2 -mfma. Keep includes to the minimum so no inline
// library code is instantiated with AVX2 encodings here.
#include "hyperlw/simd/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>
#define HYPERLW_HAVE_AVX2 1
#endif

namespace hyperlw::simd::avx2 {

bool covers(int r, int power) {
#ifdef HYPERLW_HAVE_AVX2
  return (r == 2 || r == 3) && power >= 1 && power <= 4;
#else
  (void)r;
  (void)power;
  return false;
#endif
}

#ifdef HYPERLW_HAVE_AVX2

namespace {

struct Loader {
  const double* p;
  std::ptrdiff_t s;
  __m256d operator()(std::ptrdiff_t t, int offset) const { return _mm256_loadu_pd(p + t + offset * s); }
};

inline __m256d sq(__m256d x) { return _mm256_mul_pd(x, x); }

inline __m256d powi(__m256d x, int e) {
  __m256d r = x;
  for (int i = 1; i < e; ++i) r = _mm256_mul_pd(r, x);
  return r;
}

// Jiang-Shu indicators for the three 3-cell substencils of a 5-value window.
inline void indicators3(__m256d v0, __m256d v1, __m256d v2, __m256d v3, __m256d v4, __m256d& b0,
                        __m256d& b1, __m256d& b2) {
  const __m256d c13 = _mm256_set1_pd(13.0 / 12.0);
  const __m256d c14 = _mm256_set1_pd(0.25);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d four = _mm256_set1_pd(4.0);

  __m256d a = _mm256_add_pd(_mm256_fnmadd_pd(two, v1, v0), v2);
  __m256d b = _mm256_fmadd_pd(three, v2, _mm256_fnmadd_pd(four, v1, v0));
  b0 = _mm256_fmadd_pd(c13, sq(a), _mm256_mul_pd(c14, sq(b)));

  a = _mm256_add_pd(_mm256_fnmadd_pd(two, v2, v1), v3);
  b = _mm256_sub_pd(v1, v3);
  b1 = _mm256_fmadd_pd(c13, sq(a), _mm256_mul_pd(c14, sq(b)));

  a = _mm256_add_pd(_mm256_fnmadd_pd(two, v3, v2), v4);
  b = _mm256_add_pd(_mm256_fnmadd_pd(four, v3, _mm256_mul_pd(three, v2)), v4);
  b2 = _mm256_fmadd_pd(c13, sq(a), _mm256_mul_pd(c14, sq(b)));
}

inline __m256d weno5(__m256d v0, __m256d v1, __m256d v2, __m256d v3, __m256d v4, __m256d eps, int power) {
  __m256d b0, b1, b2;
  indicators3(v0, v1, v2, v3, v4, b0, b1, b2);
  const __m256d a0 = _mm256_div_pd(_mm256_set1_pd(0.1), powi(_mm256_add_pd(eps, b0), power));
  const __m256d a1 = _mm256_div_pd(_mm256_set1_pd(0.6), powi(_mm256_add_pd(eps, b1), power));
  const __m256d a2 = _mm256_div_pd(_mm256_set1_pd(0.3), powi(_mm256_add_pd(eps, b2), power));

  const __m256d sixth = _mm256_set1_pd(1.0 / 6.0);
  // p0 = (2v0 - 7v1 + 11v2)/6, p1 = (-v1 + 5v2 + 2v3)/6, p2 = (2v2 + 5v3 - v4)/6
  const __m256d p0 = _mm256_mul_pd(
      sixth, _mm256_fmadd_pd(_mm256_set1_pd(11.0), v2,
                             _mm256_fmadd_pd(_mm256_set1_pd(-7.0), v1, _mm256_mul_pd(_mm256_set1_pd(2.0), v0))));
  const __m256d p1 = _mm256_mul_pd(
      sixth, _mm256_fmadd_pd(_mm256_set1_pd(2.0), v3, _mm256_fmsub_pd(_mm256_set1_pd(5.0), v2, v1)));
  const __m256d p2 = _mm256_mul_pd(
      sixth, _mm256_fmadd_pd(_mm256_set1_pd(5.0), v3, _mm256_fmsub_pd(_mm256_set1_pd(2.0), v2, v4)));

  const __m256d num = _mm256_fmadd_pd(a2, p2, _mm256_fmadd_pd(a1, p1, _mm256_mul_pd(a0, p0)));
  return _mm256_div_pd(num, _mm256_add_pd(_mm256_add_pd(a0, a1), a2));
}

inline __m256d weno3(__m256d v0, __m256d v1, __m256d v2, __m256d eps, int power) {
  const __m256d b0 = sq(_mm256_sub_pd(v1, v0));
  const __m256d b1 = sq(_mm256_sub_pd(v2, v1));
  const __m256d a0 = _mm256_div_pd(_mm256_set1_pd(1.0 / 3.0), powi(_mm256_add_pd(eps, b0), power));
  const __m256d a1 = _mm256_div_pd(_mm256_set1_pd(2.0 / 3.0), powi(_mm256_add_pd(eps, b1), power));
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d p0 = _mm256_mul_pd(half, _mm256_fmsub_pd(_mm256_set1_pd(3.0), v1, v0));
  const __m256d p1 = _mm256_mul_pd(half, _mm256_add_pd(v1, v2));
  const __m256d num = _mm256_fmadd_pd(a1, p1, _mm256_mul_pd(a0, p0));
  return _mm256_div_pd(num, _mm256_add_pd(a0, a1));
}

}  // namespace

void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n) {
  if (!covers(r, power)) {
    scalar::weno_split_flux(r, eps, power, fp, fm, stride, hat, n);
    return;
  }
  const Loader lp{fp, stride};
  const Loader lm{fm, stride};
  const __m256d e = _mm256_set1_pd(eps);
  const std::size_t vec_end = n & ~std::size_t{3};
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const auto t = static_cast<std::ptrdiff_t>(i);
    __m256d h;
    if (r == 3) {
      h = _mm256_add_pd(weno5(lp(t, -2), lp(t, -1), lp(t, 0), lp(t, 1), lp(t, 2), e, power),
                        weno5(lm(t, 3), lm(t, 2), lm(t, 1), lm(t, 0), lm(t, -1), e, power));
    } else {
      h = _mm256_add_pd(weno3(lp(t, -1), lp(t, 0), lp(t, 1), e, power),
                        weno3(lm(t, 2), lm(t, 1), lm(t, 0), e, power));
    }
    _mm256_storeu_pd(hat + i, h);
  }
  if (vec_end < n) {
    scalar::weno_split_flux(r, eps, power, fp + vec_end, fm + vec_end, stride, hat + vec_end, n - vec_end);
  }
}

void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n) {
  if (!covers(r, power)) {
    scalar::cweno_derivative(r, eps, power, scale, f, stride, out, n);
    return;
  }
  const Loader lf{f, stride};
  const __m256d e = _mm256_set1_pd(eps);
  const __m256d sc = _mm256_set1_pd(scale);
  const std::size_t vec_end = n & ~std::size_t{3};
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const auto t = static_cast<std::ptrdiff_t>(i);
    __m256d num, den;
    if (r == 3) {
      const __m256d v0 = lf(t, -2), v1 = lf(t, -1), v2 = lf(t, 0), v3 = lf(t, 1), v4 = lf(t, 2);
      __m256d b0, b1, b2;
      indicators3(v0, v1, v2, v3, v4, b0, b1, b2);
      const __m256d a0 = _mm256_div_pd(_mm256_set1_pd(1.0 / 6.0), powi(_mm256_add_pd(b0, e), power));
      const __m256d a1 = _mm256_div_pd(_mm256_set1_pd(2.0 / 3.0), powi(_mm256_add_pd(b1, e), power));
      const __m256d a2 = _mm256_div_pd(_mm256_set1_pd(1.0 / 6.0), powi(_mm256_add_pd(b2, e), power));
      const __m256d half = _mm256_set1_pd(0.5);
      // D0 = (v0 - 4v1 + 3v2)/2, D1 = (v3 - v1)/2, D2 = (-3v2 + 4v3 - v4)/2
      const __m256d d0 = _mm256_mul_pd(
          half, _mm256_fmadd_pd(_mm256_set1_pd(3.0), v2, _mm256_fnmadd_pd(_mm256_set1_pd(4.0), v1, v0)));
      const __m256d d1 = _mm256_mul_pd(half, _mm256_sub_pd(v3, v1));
      const __m256d d2 = _mm256_mul_pd(
          half, _mm256_sub_pd(_mm256_fmsub_pd(_mm256_set1_pd(4.0), v3, v4), _mm256_mul_pd(_mm256_set1_pd(3.0), v2)));
      num = _mm256_fmadd_pd(a2, d2, _mm256_fmadd_pd(a1, d1, _mm256_mul_pd(a0, d0)));
      den = _mm256_add_pd(_mm256_add_pd(a0, a1), a2);
    } else {
      const __m256d v0 = lf(t, -1), v1 = lf(t, 0), v2 = lf(t, 1);
      const __m256d d0 = _mm256_sub_pd(v1, v0);
      const __m256d d1 = _mm256_sub_pd(v2, v1);
      const __m256d a0 = _mm256_div_pd(_mm256_set1_pd(0.5), powi(_mm256_add_pd(sq(d0), e), power));
      const __m256d a1 = _mm256_div_pd(_mm256_set1_pd(0.5), powi(_mm256_add_pd(sq(d1), e), power));
      num = _mm256_fmadd_pd(a1, d1, _mm256_mul_pd(a0, d0));
      den = _mm256_add_pd(a0, a1);
    }
    const __m256d prev = _mm256_loadu_pd(out + i);
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(sc, _mm256_div_pd(num, den), prev));
  }
  if (vec_end < n) {
    scalar::cweno_derivative(r, eps, power, scale, f + vec_end, stride, out + vec_end, n - vec_end);
  }
}

void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n) {
  const std::size_t vec_end = n & ~std::size_t{3};
  const __m256d gm1 = _mm256_set1_pd(gamma - 1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  if (dim == 1) {
    for (std::size_t i = 0; i < vec_end; i += 4) {
      const __m256d rho = _mm256_loadu_pd(u[0] + i), m = _mm256_loadu_pd(u[1] + i), e = _mm256_loadu_pd(u[2] + i);
      const __m256d v = _mm256_div_pd(m, rho);
      const __m256d p = _mm256_mul_pd(gm1, _mm256_sub_pd(e, _mm256_mul_pd(half, _mm256_mul_pd(m, v))));
      _mm256_storeu_pd(f[0] + i, m);
      _mm256_storeu_pd(f[1] + i, _mm256_fmadd_pd(m, v, p));
      _mm256_storeu_pd(f[2] + i, _mm256_mul_pd(_mm256_add_pd(e, p), v));
    }
  } else {
    const __m256d px = _mm256_set1_pd(axis == 0 ? 1.0 : 0.0);
    const __m256d py = _mm256_set1_pd(axis == 0 ? 0.0 : 1.0);
    const double* mn = u[1 + axis];
    for (std::size_t i = 0; i < vec_end; i += 4) {
      const __m256d rho = _mm256_loadu_pd(u[0] + i), mx = _mm256_loadu_pd(u[1] + i);
      const __m256d my = _mm256_loadu_pd(u[2] + i), e = _mm256_loadu_pd(u[3] + i);
      const __m256d m = _mm256_loadu_pd(mn + i);
      const __m256d inv = _mm256_div_pd(one, rho);
      const __m256d vn = _mm256_mul_pd(m, inv);
      const __m256d kin = _mm256_mul_pd(_mm256_fmadd_pd(mx, mx, _mm256_mul_pd(my, my)), inv);
      const __m256d p = _mm256_mul_pd(gm1, _mm256_fnmadd_pd(half, kin, e));
      _mm256_storeu_pd(f[0] + i, m);
      _mm256_storeu_pd(f[1] + i, _mm256_fmadd_pd(mx, vn, _mm256_mul_pd(px, p)));
      _mm256_storeu_pd(f[2] + i, _mm256_fmadd_pd(my, vn, _mm256_mul_pd(py, p)));
      _mm256_storeu_pd(f[3] + i, _mm256_mul_pd(_mm256_add_pd(e, p), vn));
    }
  }
  if (vec_end < n) {
    const int m = dim + 2;
    const double* ut[4];
    double* ft[4];
    for (int c = 0; c < m; ++c) {
      ut[c] = u[c] + vec_end;
      ft[c] = f[c] + vec_end;
    }
    scalar::euler_flux(dim, gamma, axis, ut, ft, n - vec_end);
  }
}

void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n) {
  const std::size_t vec_end = dim == 2 ? n & ~std::size_t{3} : 0;
  const __m256d gm1 = _mm256_set1_pd(gamma - 1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d s = _mm256_set1_pd(scale);
  auto acc = [&](double* dst, __m256d v) {
    _mm256_storeu_pd(dst, _mm256_fmadd_pd(s, v, _mm256_loadu_pd(dst)));
  };
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const __m256d rho = _mm256_loadu_pd(u[0] + i), mx = _mm256_loadu_pd(u[1] + i);
    const __m256d my = _mm256_loadu_pd(u[2] + i), e = _mm256_loadu_pd(u[3] + i);
    const __m256d inv = _mm256_div_pd(one, rho);
    const __m256d vx = _mm256_mul_pd(mx, inv);
    const __m256d vy = _mm256_mul_pd(my, inv);
    const __m256d p = _mm256_mul_pd(gm1, _mm256_fnmadd_pd(half, _mm256_fmadd_pd(mx, vx, _mm256_mul_pd(my, vy)), e));
    const __m256d h = _mm256_add_pd(e, p);
    acc(fx[0] + i, mx);
    acc(fx[1] + i, _mm256_fmadd_pd(mx, vx, p));
    acc(fx[2] + i, _mm256_mul_pd(my, vx));
    acc(fx[3] + i, _mm256_mul_pd(h, vx));
    acc(fy[0] + i, my);
    acc(fy[1] + i, _mm256_mul_pd(mx, vy));
    acc(fy[2] + i, _mm256_fmadd_pd(my, vy, p));
    acc(fy[3] + i, _mm256_mul_pd(h, vy));
  }
  if (vec_end < n) {
    const int m = dim + 2;
    const double* ut[4];
    double* xt[4];
    double* yt[4];
    for (int c = 0; c < m; ++c) {
      ut[c] = u[c] + vec_end;
      xt[c] = fx[c] + vec_end;
      yt[c] = dim == 2 ? fy[c] + vec_end : nullptr;
    }
    scalar::euler_add_fluxes(dim, gamma, ut, scale, xt, yt, n - vec_end);
  }
}

void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n) {
  const std::size_t vec_end = n & ~std::size_t{3};
  for (std::size_t i = 0; i < vec_end; i += 4) {
    __m256d acc = _mm256_mul_pd(_mm256_set1_pd(coef[0]), _mm256_loadu_pd(terms[0] + i));
    for (int l = 1; l < count; ++l) acc = _mm256_fmadd_pd(_mm256_set1_pd(coef[l]), _mm256_loadu_pd(terms[l] + i), acc);
    _mm256_storeu_pd(out + i, acc);
  }
  for (std::size_t i = vec_end; i < n; ++i) {
    double acc = coef[0] * terms[0][i];
    for (int l = 1; l < count; ++l) acc += coef[l] * terms[l][i];
    out[i] = acc;
  }
}

void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n) {
  const std::size_t vec_end = n & ~std::size_t{3};
  for (std::size_t i = 0; i < vec_end; i += 4) {
    const auto t = static_cast<std::ptrdiff_t>(i);
    __m256d acc = _mm256_setzero_pd();
    for (int q = 0; q < count; ++q) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(weights[q]), _mm256_loadu_pd(f + t + offsets[q] * stride), acc);
    }
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_loadu_pd(out + i), acc));
  }
  if (vec_end < n) scalar::stencil_accumulate(f + vec_end, stride, offsets, weights, count, out + vec_end, n - vec_end);
}

#else

void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n) {
  scalar::weno_split_flux(r, eps, power, fp, fm, stride, hat, n);
}

void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n) {
  scalar::cweno_derivative(r, eps, power, scale, f, stride, out, n);
}

void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n) {
  scalar::euler_flux(dim, gamma, axis, u, f, n);
}

void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n) {
  scalar::euler_add_fluxes(dim, gamma, u, scale, fx, fy, n);
}

void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n) {
  scalar::linear_combination(terms, coef, count, out, n);
}

void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n) {
  scalar::stencil_accumulate(f, stride, offsets, weights, count, out, n);
}

#endif

}  // namespace hyperlw::simd::avx2
