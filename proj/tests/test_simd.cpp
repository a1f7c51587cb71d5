#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "hyperlw/harness.hpp"
#include "hyperlw/simd/kernels.hpp"
#include "support.hpp"

using namespace hyperlw;
namespace simd = hyperlw::simd;

namespace {

// Tails matter: lengths around multiples of the 4-lane width.
constexpr std::array<std::size_t, 6> kLengths{1, 3, 4, 7, 16, 37};

std::vector<double> random_row(std::size_t n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (double& x : v) x = d(rng);
  return v;
}

// Mixed absolute/relative comparison; FMA contraction reorders rounding.
void check_close(const std::vector<double>& a, const std::vector<double>& b, double tol = 1e-13) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK_MESSAGE(std::abs(a[i] - b[i]) <= tol * std::max(1.0, std::abs(a[i])), "index " << i);
  }
}

struct AvxGuard {
  bool ok = simd::backend_available(simd::Backend::Avx2);
  ~AvxGuard() { simd::set_backend(ok ? simd::Backend::Avx2 : simd::Backend::Scalar); }
};

}  // namespace

TEST_CASE("backend selection") {
  CHECK(simd::backend_available(simd::Backend::Scalar));
  CHECK(simd::backend_name(simd::Backend::Scalar) == "scalar");
  AvxGuard guard;
  simd::set_backend(simd::Backend::Scalar);
  CHECK(simd::active_backend() == simd::Backend::Scalar);
  CHECK_FALSE(simd::avx2::covers(4, 2));
}

TEST_CASE("WENO split flux: AVX2 matches the reference") {
  if (!simd::backend_available(simd::Backend::Avx2)) return;
  std::mt19937_64 rng(1);
  for (int r : {2, 3}) {
    REQUIRE(simd::avx2::covers(r, 2));
    for (std::ptrdiff_t stride : {1, 5}) {
      for (std::size_t n : kLengths) {
        const std::size_t span = (n + 2 * r) * stride;
        auto fp = random_row(span, rng);
        auto fm = random_row(span, rng);
        fp[span / 2] += 10.0;  // a jump somewhere in the row
        const std::ptrdiff_t base = r * stride;
        std::vector<double> a(n), b(n);
        simd::scalar::weno_split_flux(r, 1e-6, 2, fp.data() + base, fm.data() + base, stride, a.data(), n);
        simd::avx2::weno_split_flux(r, 1e-6, 2, fp.data() + base, fm.data() + base, stride, b.data(), n);
        check_close(a, b);
      }
    }
  }
}

TEST_CASE("CWENO derivative: AVX2 matches the reference") {
  if (!simd::backend_available(simd::Backend::Avx2)) return;
  std::mt19937_64 rng(2);
  for (int r : {2, 3}) {
    for (std::ptrdiff_t stride : {1, 3}) {
      for (std::size_t n : kLengths) {
        const std::size_t span = (n + 2 * r) * stride;
        auto f = random_row(span, rng);
        f[span / 3] -= 4.0;
        const std::ptrdiff_t base = r * stride;
        std::vector<double> a = random_row(n, rng), b = a;
        simd::scalar::cweno_derivative(r, 1e-4, 2, -7.5, f.data() + base, stride, a.data(), n);
        simd::avx2::cweno_derivative(r, 1e-4, 2, -7.5, f.data() + base, stride, b.data(), n);
        check_close(a, b, 1e-12);
      }
    }
  }
}

TEST_CASE("Euler fluxes: AVX2 matches the reference") {
  if (!simd::backend_available(simd::Backend::Avx2)) return;
  std::mt19937_64 rng(3);
  for (int dim : {1, 2}) {
    const int m = dim + 2;
    for (std::size_t n : kLengths) {
      std::vector<std::vector<double>> u(m);
      u[0] = random_row(n, rng, 0.5, 2.0);
      for (int c = 1; c <= dim; ++c) u[c] = random_row(n, rng, -1.0, 1.0);
      u[m - 1] = random_row(n, rng, 3.0, 6.0);
      std::vector<const double*> up;
      for (auto& row : u) up.push_back(row.data());

      for (int axis = 0; axis < dim; ++axis) {
        std::vector<std::vector<double>> fa(m, std::vector<double>(n)), fb = fa;
        std::vector<double*> pa, pb;
        for (int c = 0; c < m; ++c) {
          pa.push_back(fa[c].data());
          pb.push_back(fb[c].data());
        }
        simd::scalar::euler_flux(dim, 1.4, axis, up.data(), pa.data(), n);
        simd::avx2::euler_flux(dim, 1.4, axis, up.data(), pb.data(), n);
        for (int c = 0; c < m; ++c) check_close(fa[c], fb[c]);
      }

      std::vector<std::vector<double>> xa(m), ya(m);
      for (int c = 0; c < m; ++c) {
        xa[c] = random_row(n, rng);
        ya[c] = random_row(n, rng);
      }
      auto xb = xa, yb = ya;
      std::vector<double*> pxa, pya, pxb, pyb;
      for (int c = 0; c < m; ++c) {
        pxa.push_back(xa[c].data());
        pya.push_back(ya[c].data());
        pxb.push_back(xb[c].data());
        pyb.push_back(yb[c].data());
      }
      simd::scalar::euler_add_fluxes(dim, 1.4, up.data(), 0.3, pxa.data(), dim == 2 ? pya.data() : nullptr, n);
      simd::avx2::euler_add_fluxes(dim, 1.4, up.data(), 0.3, pxb.data(), dim == 2 ? pyb.data() : nullptr, n);
      for (int c = 0; c < m; ++c) {
        check_close(xa[c], xb[c]);
        check_close(ya[c], yb[c]);
      }
    }
  }
}

TEST_CASE("row kernels: AVX2 matches the reference") {
  if (!simd::backend_available(simd::Backend::Avx2)) return;
  std::mt19937_64 rng(4);
  for (std::size_t n : kLengths) {
    for (int count : {1, 2, 5, 7, 20}) {
      std::vector<std::vector<double>> rows;
      std::vector<const double*> ptr;
      for (int l = 0; l < count; ++l) rows.push_back(random_row(n, rng));
      for (auto& row : rows) ptr.push_back(row.data());
      const auto coef = random_row(static_cast<std::size_t>(count), rng);
      std::vector<double> a(n), b(n);
      simd::scalar::linear_combination(ptr.data(), coef.data(), count, a.data(), n);
      simd::avx2::linear_combination(ptr.data(), coef.data(), count, b.data(), n);
      check_close(a, b);
    }
    for (std::ptrdiff_t stride : {1, 6}) {
      const std::array<int, 6> offsets{-3, -2, -1, 1, 2, 3};
      const auto weights = random_row(offsets.size(), rng);
      const auto f = random_row((n + 6) * stride, rng);
      std::vector<double> a = random_row(n, rng), b = a;
      const double* centre = f.data() + 3 * stride;
      simd::scalar::stencil_accumulate(centre, stride, offsets.data(), weights.data(), 6, a.data(), n);
      simd::avx2::stencil_accumulate(centre, stride, offsets.data(), weights.data(), 6, b.data(), n);
      check_close(a, b);
    }
  }
}

TEST_CASE("whole runs agree across backends") {
  AvxGuard guard;
  if (!guard.ok) return;
  for (Scheme s : {Scheme::LWA, Scheme::LWAF, Scheme::RK3}) {
    RunConfig cfg;
    cfg.problem = "euler2d-smooth";
    cfg.scheme = s;
    cfg.nx = cfg.ny = 24;
    cfg.t_end = 0.01;
    simd::set_backend(simd::Backend::Scalar);
    const RunResult a = run(cfg);
    simd::set_backend(simd::Backend::Avx2);
    const RunResult b = run(cfg);
    CHECK(a.steps == b.steps);
    CHECK(hyperlw::testing::max_abs_diff(a.u, b.u) <= 1e-12);
  }
}
