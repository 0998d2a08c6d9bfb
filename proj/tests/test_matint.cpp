#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "royroot/exactcdf.hpp"
#include "royroot/matint.hpp"

using namespace royroot;

TEST_CASE("params validation") {
  CHECK_NOTHROW(MatIntParams(0, 0, 0, 1, 1.0, 0.5));
  CHECK_THROWS_AS(MatIntParams(-1, 0, 0, 1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, -1, 0, 1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, 0, -1, 1, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, 0, 0, 0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, 0, 0, 1, 0.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, 0, 0, 1, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(MatIntParams(0, 0, 0, 1, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("normalization constant") {
  // m = 1: single factorial ratio, no pi factor
  for (int n : {1, 3, 6})
    for (int p : {1, 2, 7}) {
      const double ref = oracle::factorial(p + n - 1) /
                         (oracle::factorial(p - 1) * oracle::factorial(n - 1));
      CHECK(log_kd(1, n, p) == doctest::Approx(std::log(ref)).epsilon(1e-13));
    }
  CHECK(log_kd(2, 2, 2) == doctest::Approx(std::log(12.0 / M_PI)).epsilon(1e-13));
  // symmetric in (n, p)
  CHECK(log_kd(3, 5, 8) == doctest::Approx(log_kd(3, 8, 5)).epsilon(1e-14));
  CHECK_THROWS_AS(log_kd(0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(log_kd(3, 2, 5), std::invalid_argument);
}

TEST_CASE("zeta: nu = 0 collapse and vanishing pattern") {
  // nu = 0 leaves only the l = 0 term: zeta_1 = (alpha+beta+2m-1)!/(beta+2m-1)!,
  // zeta_i = 0 for i >= 2
  const MatIntParams p0(3, 2, 0, 2, 1.0, 0.5);
  const double expect = oracle::factorial(3 + 2 + 4 - 1) / oracle::factorial(2 + 4 - 1);
  CHECK(zeta(1, p0) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(zeta(2, p0) == 0.0);
  CHECK(zeta(3, p0) == 0.0);
  CHECK(zeta(4, p0) == 0.0);

  // rows beyond min(alpha, nu) + 1 vanish
  const MatIntParams p1(3, 0, 1, 2, 1.0, 0.5);
  CHECK(zeta(2, p1) != 0.0);
  CHECK(zeta(3, p1) == 0.0);
  CHECK(zeta(4, p1) == 0.0);

  CHECK_THROWS_AS(zeta(0, p0), std::invalid_argument);
  CHECK_THROWS_AS(zeta(5, p0), std::invalid_argument);
}

TEST_CASE("m = 1 reduces to scalar quadrature") {
  // I = a^nu int_0^1 y^{beta+nu} (1 - z y)^alpha dy
  for (int alpha : {0, 1, 2, 4})
    for (int beta : {0, 1, 3})
      for (int nu : {0, 1, 2, 4})
        for (double z : {0.1, 0.3, 0.5, 0.7, 0.9}) {
          const double a = 1.6;
          const MatIntParams prm(alpha, beta, nu, 1, a, z);
          const double ref =
              std::pow(a, nu) * oracle::integrate(
                                    [&](double y) {
                                      return std::pow(y, beta + nu) *
                                             std::pow(1.0 - z * y, alpha);
                                    },
                                    0.0, 1.0);
          CHECK(matrix_integral(prm) == doctest::Approx(ref).epsilon(1e-10));
        }
}

TEST_CASE("hand-checked m = 1 instance") {
  // alpha = 1, beta = 0, nu = 0, z = 1/2: int_0^1 (1 - y/2) dy = 3/4
  const MatIntParams prm(1, 0, 0, 1, 1.0, 0.5);
  CHECK(matrix_integral(prm) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("integral decreases in z and stays finite near z = 0") {
  double prev = 1e300;
  for (double z : {0.05, 0.2, 0.4, 0.6, 0.8, 0.95}) {
    const MatIntParams prm(2, 1, 1, 2, 2.0, z);
    const double v = matrix_integral(prm);
    REQUIRE(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
  // z -> 0: det^alpha[I - zY] -> 1, so the value approaches a constant even
  // though the closed form splits it as z^{m alpha} times a growing determinant
  const double near0 = matrix_integral(MatIntParams(2, 1, 1, 2, 2.0, 1e-5));
  const double nearer0 = matrix_integral(MatIntParams(2, 1, 1, 2, 2.0, 1e-7));
  CHECK(std::isfinite(near0));
  CHECK(near0 == doctest::Approx(nearer0).epsilon(1e-3));
}

TEST_CASE("series identity ties the integral to the exact cdf") {
  // omega_a = 0: only the nu = 0 term exists, so truncation is irrelevant
  const ModelDims d0(2, 4, 3);
  const double r1 = series_consistency_residual(d0, 0.0, 0.5, 1);
  const double r50 = series_consistency_residual(d0, 0.0, 0.5, 50);
  CHECK(r1 == r50);
  CHECK(r1 < 1e-10);

  // converged residuals are tiny across dims                  (full sweep in
  // the acceptance suite; this is the smoke version)
  for (const auto& d : {ModelDims(1, 2, 2), ModelDims(2, 4, 3), ModelDims(3, 4, 5)})
    for (double z : {0.25, 0.6}) {
      const double r = series_consistency_residual(d, 2.5, z, 150);
      CHECK(r < 1e-9);
    }

  // partial sums increase toward the exact value: residual is monotone
  // non-increasing in the truncation order
  const ModelDims d(2, 4, 3);
  const double r5 = series_consistency_residual(d, 3.0, 0.5, 5);
  const double r15 = series_consistency_residual(d, 3.0, 0.5, 15);
  const double r40 = series_consistency_residual(d, 3.0, 0.5, 40);
  CHECK(r15 <= r5 * (1.0 + 1e-12) + 1e-15);
  CHECK(r40 <= r15 * (1.0 + 1e-12) + 1e-15);
  CHECK(r5 > r40);  // genuinely converging, not flat

  CHECK_THROWS_AS(series_consistency_residual(d, 1.0, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(series_consistency_residual(d, -1.0, 0.5, 10), std::invalid_argument);
  CHECK_THROWS_AS(series_consistency_residual(d, 1.0, 1.0, 10), std::invalid_argument);
}
