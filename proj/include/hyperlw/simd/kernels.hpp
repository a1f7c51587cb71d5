#pragma once

#include <cstddef>
#include <string_view>

// Row kernels for the reconstruction and Lax-Wendroff inner loops.
//
// Every kernel walks n consecutive output positions t = 0..n-1 whose stencil
// neighbours sit at multiples of `stride` away (1 for x sweeps, the padded
// row pitch for y sweeps). Vector lanes therefore always run across
// contiguous memory, whichever axis the stencil follows.
//
// The scalar namespace holds the reference implementations, driven by the
// generic reconstruction tables for any supported r. The avx2 namespace holds
// hand-written variants: WENO and CWENO for r = 2 and r = 3, plus the Euler
// flux and Lax-Wendroff row kernels. The dispatching entry points fall back
// to the reference for anything else.

namespace hyperlw::simd {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);

/// True if the CPU (and the build) can run `b`.
bool backend_available(Backend b);

/// Backend used by the dispatching kernels. Chosen at first use from CPU
/// features; HYPERLW_SIMD=scalar in the environment forces the reference.
Backend active_backend();

/// Overrides the active backend. Throws ConfigError if unavailable.
void set_backend(Backend b);

/// Lax-Friedrichs split WENO interface flux.
///
/// hat[t] = W(fp[t + (q-r+1)s], q = 0..2r-2) + W(fm[t + (r-q)s], q = 0..2r-2)
/// where W is the Jiang-Shu reconstruction at the right edge of the window's
/// centre cell, with regularization `eps` and weight exponent `power`.
void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n);

/// Central WENO first derivative, accumulated:
/// out[t] += scale * sum_k w_k (p_k(1/2) - p_k(-1/2)) over the 2r-1 values
/// f[t + (q-r+1)s], with w_k = c_k / (I_k + eps)^power normalized.
void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n);

/// Euler flux along `axis` for `dim` = 1 or 2. u and f hold dim + 2 rows.
void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n);

/// fx += scale * f^x(u) and, for dim = 2, fy += scale * f^y(u).
void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n);

/// out[t] = sum_l coef[l] * terms[l][t].
void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n);

/// out[t] += sum_q weights[q] * f[t + offsets[q] * stride].
void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n);

namespace scalar {
void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n);
void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n);
void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n);
void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n);
void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n);
void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
/// True when the hand-written variant covers (r, power).
bool covers(int r, int power);
void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n);
void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n);
void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n);
void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n);
void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n);
void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n);
}  // namespace avx2

}  // namespace hyperlw::simd
