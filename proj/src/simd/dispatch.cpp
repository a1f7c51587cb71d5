#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "hyperlw/error.hpp"
#include "hyperlw/simd/kernels.hpp"

namespace hyperlw::simd {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend detect() {
  const char* forced = std::getenv("HYPERLW_SIMD");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return Backend::Scalar;
  return backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& active() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) {
  if (b == Backend::Scalar) return true;
  static const bool avx2 = cpu_has_avx2() && avx2::covers(3, 2);
  return avx2;
}

Backend active_backend() { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) throw ConfigError("SIMD backend " + std::string(backend_name(b)) + " unavailable");
  active().store(b, std::memory_order_relaxed);
}

void weno_split_flux(int r, double eps, int power, const double* fp, const double* fm,
                     std::ptrdiff_t stride, double* hat, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::weno_split_flux(r, eps, power, fp, fm, stride, hat, n);
  } else {
    scalar::weno_split_flux(r, eps, power, fp, fm, stride, hat, n);
  }
}

void cweno_derivative(int r, double eps, int power, double scale, const double* f,
                      std::ptrdiff_t stride, double* out, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::cweno_derivative(r, eps, power, scale, f, stride, out, n);
  } else {
    scalar::cweno_derivative(r, eps, power, scale, f, stride, out, n);
  }
}

void euler_flux(int dim, double gamma, int axis, const double* const* u, double* const* f, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::euler_flux(dim, gamma, axis, u, f, n);
  } else {
    scalar::euler_flux(dim, gamma, axis, u, f, n);
  }
}

void euler_add_fluxes(int dim, double gamma, const double* const* u, double scale, double* const* fx,
                      double* const* fy, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::euler_add_fluxes(dim, gamma, u, scale, fx, fy, n);
  } else {
    scalar::euler_add_fluxes(dim, gamma, u, scale, fx, fy, n);
  }
}

void linear_combination(const double* const* terms, const double* coef, int count, double* out, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::linear_combination(terms, coef, count, out, n);
  } else {
    scalar::linear_combination(terms, coef, count, out, n);
  }
}

void stencil_accumulate(const double* f, std::ptrdiff_t stride, const int* offsets, const double* weights, int count,
                        double* out, std::size_t n) {
  if (active_backend() == Backend::Avx2) {
    avx2::stencil_accumulate(f, stride, offsets, weights, count, out, n);
  } else {
    scalar::stencil_accumulate(f, stride, offsets, weights, count, out, n);
  }
}

}  // namespace hyperlw::simd
