#include <doctest.h>

#include <boost/math/special_functions/factorials.hpp>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hyperlw/error.hpp"
#include "hyperlw/stencil.hpp"
#include "oracles.hpp"

using namespace hyperlw;
using hyperlw::testing::vandermonde_weights;

namespace {

double derivative_of_sin(int p, double x) {
  switch (p % 4) {
    case 0: return std::sin(x);
    case 1: return std::cos(x);
    case 2: return -std::sin(x);
    default: return -std::cos(x);
  }
}

double apply_to(const StencilCoefficients& st, double (*u)(double), double a, double h) {
  std::vector<double> samples;
  for (int o : st.offsets) samples.push_back(u(a + o * h));
  return apply(st, samples, h);
}

}  // namespace

TEST_CASE("classic stencils") {
  const auto d1 = centered_coefficients(1, 1);
  CHECK(d1.offsets == std::vector<int>{-1, 0, 1});
  CHECK(d1.weights[0] == doctest::Approx(-0.5));
  CHECK(d1.weights[1] == 0.0);
  CHECK(d1.weights[2] == doctest::Approx(0.5));

  const auto d2 = centered_coefficients(2, 1);
  CHECK(d2.offsets == std::vector<int>{-1, 0, 1});
  CHECK(d2.weights[0] == doctest::Approx(1.0));
  CHECK(d2.weights[1] == doctest::Approx(-2.0));
  CHECK(d2.weights[2] == doctest::Approx(1.0));

  const auto d14 = centered_coefficients(1, 2);
  const std::vector<double> want{1.0 / 12, -2.0 / 3, 0.0, 2.0 / 3, -1.0 / 12};
  REQUIRE(d14.weights.size() == 5);
  for (int j = 0; j < 5; ++j) CHECK(d14.weights[j] == doctest::Approx(want[j]).epsilon(1e-15));
}

TEST_CASE("coefficients match an exact Vandermonde solve") {
  for (int p = 1; p <= 6; ++p) {
    for (int q = 1; q <= 4; ++q) {
      const auto st = centered_coefficients(p, q);
      const int s = (p + 1) / 2 + q - 1;
      CHECK(st.half_width() == s);
      const auto oracle = vandermonde_weights(p, s);
      REQUIRE(st.weights.size() == oracle.size());
      for (std::size_t j = 0; j < oracle.size(); ++j) {
        CHECK(std::abs(st.weights[j] - oracle[j]) <= 1e-12 * std::max(1.0, std::abs(oracle[j])));
      }
    }
  }
}

TEST_CASE("weights satisfy the moment conditions and parity") {
  for (int p = 1; p <= 8; ++p) {
    for (int q = 1; q <= 4; ++q) {
      const auto st = centered_coefficients(p, q);
      const int n = static_cast<int>(st.offsets.size());
      for (int k = 0; k < p + 2 * q; ++k) {
        long double m = 0, size = 0;
        for (int j = 0; j < n; ++j) {
          const long double term = st.weights[j] * std::pow(static_cast<long double>(st.offsets[j]), k);
          m += term;
          size += std::abs(term);
        }
        // Relative to the size of the terms: the weights are rounded doubles.
        const double want = k == p ? boost::math::factorial<double>(p) : 0.0;
        CHECK(std::abs(static_cast<double>(m) - want) <= 1e-14 * static_cast<double>(size));
      }
      const double sign = p % 2 == 0 ? 1.0 : -1.0;
      for (int j = 0; j < n; ++j) CHECK(st.weights[j] == sign * st.weights[n - 1 - j]);
    }
  }
}

TEST_CASE("exact on monomials of degree below p + 2q") {
  for (int p = 1; p <= 10; ++p) {
    for (int q = 1; 2 * q + p <= 12; ++q) {
      const auto st = centered_coefficients(p, q);
      for (double h : {1.0, 0.1}) {
        for (int j = 0; j < p + 2 * q; ++j) {
          // Derivative of x^j at a = 0.3.
          const double a = 0.3;
          std::vector<double> samples;
          for (int o : st.offsets) samples.push_back(std::pow(a + o * h, j));
          double exact = 0.0;
          if (j >= p) {
            double c = 1.0;
            for (int e = 0; e < p; ++e) c *= j - e;
            exact = c * std::pow(a, j - p);
          }
          const double got = apply(st, samples, h);
          // Rounding of the samples is amplified by sum |w| / h^p.
          double amplification = 0.0;
          for (std::size_t q2 = 0; q2 < samples.size(); ++q2) amplification += std::abs(st.weights[q2] * samples[q2]);
          amplification /= std::pow(h, p);
          const double tol = 1e-10 * std::max(1.0, std::abs(exact)) + 64 * 2.2e-16 * amplification;
          CHECK(std::abs(got - exact) <= tol);
        }
      }
    }
  }
}

TEST_CASE("measured order on sin x") {
  for (int p = 1; p <= 4; ++p) {
    for (int q = 1; q <= 3; ++q) {
      const auto st = centered_coefficients(p, q);
      const double a = 0.7;
      const double h0 = 0.2;
      const double e0 = std::abs(apply_to(st, [](double x) { return std::sin(x); }, a, h0) - derivative_of_sin(p, a));
      const double e1 =
          std::abs(apply_to(st, [](double x) { return std::sin(x); }, a, h0 / 2) - derivative_of_sin(p, a));
      CHECK(std::log2(e0 / e1) >= 2 * q - 0.2);
    }
  }
}

TEST_CASE("apply examples") {
  const auto d1 = centered_coefficients(1, 1);
  CHECK(apply(d1, std::vector<double>{-0.1, 0.0, 0.1}, 0.1) == doctest::Approx(1.0).epsilon(1e-15));
  const auto d2 = centered_coefficients(2, 1);
  CHECK(apply(d2, std::vector<double>{3.0, 3.0, 3.0}, 0.5) == 0.0);
  const auto d14 = centered_coefficients(1, 2);
  std::vector<double> quartic;
  for (int o : d14.offsets) quartic.push_back(std::pow(o * 0.5, 4));
  CHECK(apply(d14, quartic, 0.5) == doctest::Approx(0.0));

  const std::vector<std::vector<double>> vec{{-1.0, 2.0}, {0.0, 0.0}, {1.0, 4.0}};
  const auto out = apply(d1, vec, 1.0);
  CHECK(out[0] == doctest::Approx(1.0));
  CHECK(out[1] == doctest::Approx(1.0));
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(centered_coefficients(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(centered_coefficients(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(centered_coefficients(15, 3), ConfigError);
  CHECK_THROWS_AS(apply(centered_coefficients(1, 1), std::vector<double>{1.0, 2.0}, 1.0), std::invalid_argument);
}
