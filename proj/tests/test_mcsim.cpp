#include <stdexcept>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "royroot/exactcdf.hpp"
#include "royroot/mcsim.hpp"

using namespace royroot;

TEST_CASE("rng streams: determinism, separation, uniformity") {
  RngStream a = RngStream::for_trial(42, 7);
  RngStream b = RngStream::for_trial(42, 7);
  RngStream c = RngStream::for_trial(42, 8);
  RngStream d = RngStream::for_trial(43, 7);
  for (int i = 0; i < 16; ++i) {
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());  // different stream
    CHECK(va != d.next_u64());  // different seed
  }

  RngStream u = RngStream::for_trial(1, 0);
  double mn = 1.0, mx = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double x = u.uniform();
    mn = std::min(mn, x);
    mx = std::max(mx, x);
    sum += x;
  }
  CHECK(mn > 0.0);
  CHECK(mx < 1.0);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(5e-3));
}

TEST_CASE("complex gaussian has unit complex variance") {
  RngStream rng = RngStream::for_trial(7, 3);
  std::complex<double> mean = 0.0;
  double pow2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const std::complex<double> z = rng.complex_gaussian();
    mean += z;
    pow2 += std::norm(z);
  }
  mean /= double(n);
  CHECK(std::abs(mean) < 0.02);
  CHECK(pow2 / n == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("model validation and omega") {
  CHECK_THROWS_AS(SignalModel::isotropic(3, 2, 4, 1.0), std::invalid_argument);  // n < m
  CHECK_THROWS_AS(SignalModel::isotropic(3, 6, 4, -1.0), std::invalid_argument);
  const SignalModel iso = SignalModel::isotropic(3, 6, 8, 2.5);
  CHECK(iso.omega() == doctest::Approx(2.5).epsilon(1e-12));

  // omega = ||s||^2 a^H Sigma^{-1} a for an explicit model
  using C = std::complex<double>;
  const std::vector<C> sig = {C(2, 0), C(0, 0), C(0, 0), C(0.5, 0)};  // diag(2, 1/2)
  const std::vector<C> a = {C(1, 0), C(1, 0)};
  const std::vector<C> s = {C(1, 0), C(0, 2)};  // ||s||^2 = 5
  const SignalModel ex(2, 4, 2, sig, a, s);
  CHECK(ex.omega() == doctest::Approx(5.0 * 2.5).epsilon(1e-12));

  // non-hermitian and non-pd rejections
  std::vector<C> bad = {C(1, 0), C(0.5, 0), C(0.2, 0), C(1, 0)};
  CHECK_THROWS_AS(SignalModel(2, 4, 2, bad, a, s), std::invalid_argument);
  std::vector<C> npd = {C(1, 0), C(2, 0), C(2, 0), C(1, 0)};
  CHECK_THROWS_AS(SignalModel(2, 4, 2, npd, a, s), std::invalid_argument);

  // growing Sigma in the Loewner order can only lose snr
  const std::vector<C> s1 = {C(1, 0), C(0, 0), C(0, 0), C(1, 0)};
  const std::vector<C> s2 = {C(1.5, 0), C(0.5, 0), C(0.5, 0), C(1.5, 0)};
  const std::vector<C> e1 = {C(1, 0), C(0, 0)};
  const std::vector<C> sv = {C(2, 0), C(1, 0)};
  const SignalModel m1(2, 4, 2, s1, e1, sv);
  const SignalModel m2(2, 4, 2, s2, e1, sv);
  CHECK(m2.omega() < m1.omega());
  CHECK(m2.omega() == doctest::Approx(0.75 * m1.omega()).epsilon(1e-12));
}

TEST_CASE("scalar case follows the f-distribution") {
  const SignalModel one = SignalModel::isotropic(1, 1, 1, 0.0);
  const int trials = 20000;
  const EmpiricalCdf emp = empirical_cdf(one, Hypothesis::H0, trials, 12345);
  // DKW 99% band
  const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * trials));
  for (double q = 0.02; q < 0.99; q += 0.04) {
    const double t = q / (1.0 - q);  // quantile of F(t) = t/(1+t)
    CHECK(std::abs(emp.eval(t) - q) < band);
  }
}

TEST_CASE("same seed bit-identical, worker count irrelevant") {
  const SignalModel model = SignalModel::isotropic(2, 5, 4, 1.5);
  const EmpiricalCdf a = empirical_cdf(model, Hypothesis::H1, 300, 99);
  const EmpiricalCdf b = empirical_cdf(model, Hypothesis::H1, 300, 99);
  REQUIRE(a.sorted_samples.size() == b.sorted_samples.size());
  for (std::size_t i = 0; i < a.sorted_samples.size(); ++i)
    REQUIRE(a.sorted_samples[i] == b.sorted_samples[i]);
  CHECK(a.seed == 99);
  CHECK(a.trials == 300);

  setenv("ROYROOT_THREADS", "3", 1);
  const EmpiricalCdf c = empirical_cdf(model, Hypothesis::H1, 300, 99);
  setenv("ROYROOT_THREADS", "1", 1);
  const EmpiricalCdf d = empirical_cdf(model, Hypothesis::H1, 300, 99);
  unsetenv("ROYROOT_THREADS");
  for (std::size_t i = 0; i < a.sorted_samples.size(); ++i) {
    REQUIRE(c.sorted_samples[i] == a.sorted_samples[i]);
    REQUIRE(d.sorted_samples[i] == a.sorted_samples[i]);
  }

  setenv("ROYROOT_THREADS", "zero", 1);
  CHECK_THROWS_AS(empirical_cdf(model, Hypothesis::H0, 300, 99), std::invalid_argument);
  unsetenv("ROYROOT_THREADS");

  // different hypotheses use disjoint streams: H0 and H1 differ
  const EmpiricalCdf h0 = empirical_cdf(model, Hypothesis::H0, 300, 99);
  CHECK(h0.sorted_samples != a.sorted_samples);
}

TEST_CASE("scale invariance of the law (ks)") {
  using C = std::complex<double>;
  const int m = 2, trials = 10000;
  std::vector<C> id = {C(1, 0), C(0, 0), C(0, 0), C(1, 0)};
  std::vector<C> scaled = {C(2.7, 0), C(0, 0), C(0, 0), C(2.7, 0)};
  const std::vector<C> a = {C(1, 0), C(0, 0)};
  const std::vector<C> s(4, C(0, 0));
  const SignalModel base(m, 5, 4, id, a, s);
  const SignalModel big(m, 5, 4, scaled, a, s);
  const EmpiricalCdf e1 = empirical_cdf(base, Hypothesis::H0, trials, 5);
  const EmpiricalCdf e2 = empirical_cdf(big, Hypothesis::H0, trials, 6);
  const double ks = oracle::ks_statistic(e1.sorted_samples, e2.sorted_samples);
  CHECK(ks < oracle::ks_two_sample_critical(trials, trials, 0.01));
}

TEST_CASE("null distribution does not depend on sigma (ks)") {
  using C = std::complex<double>;
  const int trials = 10000;
  // correlated covariance, ar(1) with rho = 0.6
  std::vector<C> ar(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) ar[std::size_t(j) * 3 + i] = C(std::pow(0.6, std::abs(i - j)), 0);
  const std::vector<C> a = {C(1, 0), C(0, 0), C(0, 0)};
  const std::vector<C> s(7, C(0, 0));
  const SignalModel corr(3, 6, 7, ar, a, s);
  const SignalModel iso = SignalModel::isotropic(3, 6, 7, 0.0);
  const EmpiricalCdf e1 = empirical_cdf(corr, Hypothesis::H0, trials, 11);
  const EmpiricalCdf e2 = empirical_cdf(iso, Hypothesis::H0, trials, 12);
  const double ks = oracle::ks_statistic(e1.sorted_samples, e2.sorted_samples);
  CHECK(ks < oracle::ks_two_sample_critical(trials, trials, 0.01));
}

TEST_CASE("h1 law depends on the model only through omega (ks)") {
  using C = std::complex<double>;
  const int trials = 10000;
  const SignalModel iso = SignalModel::isotropic(2, 4, 6, 2.0);
  // different sigma, steering, and signal with the same omega:
  // sigma = diag(4, 1), a = e1, ||s||^2 = 8 -> omega = 8/4 = 2
  std::vector<C> sig = {C(4, 0), C(0, 0), C(0, 0), C(1, 0)};
  std::vector<C> a = {C(1, 0), C(0, 0)};
  std::vector<C> s = {C(2, 0), C(0, 2), C(0, 0), C(0, 0), C(0, 0), C(0, 0)};
  const SignalModel other(2, 4, 6, sig, a, s);
  REQUIRE(other.omega() == doctest::Approx(2.0).epsilon(1e-12));
  const EmpiricalCdf e1 = empirical_cdf(iso, Hypothesis::H1, trials, 21);
  const EmpiricalCdf e2 = empirical_cdf(other, Hypothesis::H1, trials, 22);
  const double ks = oracle::ks_statistic(e1.sorted_samples, e2.sorted_samples);
  CHECK(ks < oracle::ks_two_sample_critical(trials, trials, 0.01));
}

TEST_CASE("singular branch matches the relabeled exact law") {
  const int trials = 5000;
  const ModelDims d(3, 6, 2);  // p < m
  const SignalModel model = SignalModel::isotropic(d.m, d.n, d.p, 1.8);
  const EmpiricalCdf emp = empirical_cdf(model, Hypothesis::H1, trials, 31);
  const double band = std::sqrt(std::log(2.0 / 0.01) / (2.0 * trials));
  const double c = double(d.p) / d.n;  // samples live on the lambda_hat scale
  for (int k = 250; k < trials; k += 250) {
    const double x = emp.sorted_samples[k];
    CHECK(std::abs(emp.eval(x) - cdf_singular(d, 1.8, c * x)) < band);
  }
}

TEST_CASE("empirical cdf evaluation edges") {
  const SignalModel model = SignalModel::isotropic(1, 2, 2, 0.5);
  const EmpiricalCdf emp = empirical_cdf(model, Hypothesis::H1, 200, 77);
  CHECK(emp.eval(-1.0) == 0.0);
  CHECK(emp.eval(std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(emp.eval(emp.sorted_samples.front()) >= 1.0 / 200);
  CHECK_THROWS_AS(empirical_cdf(model, Hypothesis::H0, 99, 1), std::invalid_argument);
}

TEST_CASE("empirical roc: chance line and pairing") {
  const SignalModel null = SignalModel::isotropic(2, 4, 5, 0.0);
  const std::vector<double> grid = {0.1, 0.3, 0.5, 0.7};
  const RocCurve curve = empirical_roc(null, 2000, grid, 8);
  REQUIRE(curve.points.size() == grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double pf = grid[i];
    CHECK(std::abs(curve.points[i].pd - pf) < oracle::binom99_halfwidth(pf, 2000) * 2.0);
    if (i) CHECK(curve.points[i].threshold < curve.points[i - 1].threshold);
  }
  CHECK(curve.omega == 0.0);
  CHECK_THROWS_AS(empirical_roc(null, 2000, {0.5, 0.5}, 8), std::invalid_argument);
  CHECK_THROWS_AS(empirical_roc(null, 2000, {}, 8), std::invalid_argument);
}

TEST_CASE("json model specs") {
  const SignalModel iso =
      SignalModel::from_json(R"({"m":3,"n":6,"p":8,"omega":2.5})");
  CHECK(iso.m == 3);
  CHECK(iso.n == 6);
  CHECK(iso.p == 8);
  CHECK(iso.omega() == doctest::Approx(2.5).epsilon(1e-12));

  const SignalModel ex = SignalModel::from_json(R"({
    "n": 4,
    "sigma": [[2, 0], [0, 0.5]],
    "a": [1, 1],
    "s": [1, [0, 2]]
  })");
  CHECK(ex.m == 2);
  CHECK(ex.p == 2);
  CHECK(ex.omega() == doctest::Approx(12.5).epsilon(1e-12));

  CHECK_THROWS_AS(SignalModel::from_json(R"({"m":2,"n":4,"p":3})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      SignalModel::from_json(R"({"n":4,"omega":1,"sigma":[[1,0],[0,1]],"a":[1,0],"s":[1,0]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      SignalModel::from_json(R"({"n":4,"m":3,"sigma":[[1,0],[0,1]],"a":[1,0],"s":[1,0]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(SignalModel::from_json("not json"), nlohmann::json::parse_error);
}
