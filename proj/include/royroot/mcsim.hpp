#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "royroot/roc.hpp"

namespace royroot {

enum class Hypothesis { H0, H1 };

// Per-trial random stream: state derived by mixing (seed, stream id), so any
// trial can be generated independently of the others and of worker layout.
class RngStream {
 public:
  static RngStream for_trial(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next_u64();
  double uniform();  // (0,1), never exactly 0
  // One standard complex Gaussian: variance 1/2 per real component.
  std::complex<double> complex_gaussian();

 private:
  explicit RngStream(std::uint64_t key) : key_(key) {}
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Signal model: x_i = a s_i [H1] + Sigma^{1/2} g_i (p signal-bearing snapshots),
// z_l = Sigma^{1/2} h_l (n noise-only snapshots). omega = ||s||^2 a^H Sigma^{-1} a.
struct SignalModel {
  int m, n, p;
  std::vector<std::complex<double>> sigma;  // m x m column-major, Hermitian PD
  std::vector<std::complex<double>> a_vec;  // m
  std::vector<std::complex<double>> s_vec;  // p

  SignalModel(int m_, int n_, int p_,
              std::vector<std::complex<double>> sigma_,
              std::vector<std::complex<double>> a_,
              std::vector<std::complex<double>> s_);

  // Sigma = I, a = e_1, s = sqrt(omega) e_1.
  static SignalModel isotropic(int m, int n, int p, double omega);

  // {"m":..,"n":..,"p":.., "omega":..} or explicit {"sigma":[[re,im],..], "a":[..], "s":[..]}.
  static SignalModel from_json(const std::string& text);

  double omega() const { return omega_; }

 private:
  double omega_;
  std::vector<std::complex<double>> chol_;  // cached lower Cholesky factor of sigma
  bool sigma_is_identity_;

  friend double sample_lambda_max(const SignalModel&, Hypothesis, RngStream&);
};

struct EmpiricalCdf {
  std::vector<double> sorted_samples;
  std::uint64_t seed;
  int trials;

  // rank/trials at x: right-continuous empirical CDF.
  double eval(double x) const;
};

// Largest generalized eigenvalue of (R_hat, Sigma_hat) with R_hat = (1/p) X X^H,
// Sigma_hat = (1/n) Z Z^H; Cholesky congruence, never an explicit inverse.
double sample_lambda_max(const SignalModel& model, Hypothesis hyp, RngStream& rng);

// `trials` independent draws on per-trial substreams; parallelized over
// ROYROOT_THREADS workers with worker-count-independent output.
EmpiricalCdf empirical_cdf(const SignalModel& model, Hypothesis hyp, int trials,
                           std::uint64_t seed);

// Paired H0/H1 sample sets; thresholds at H0 empirical quantiles of 1 - pf,
// pd from H1 exceedance counts.
RocCurve empirical_roc(const SignalModel& model, int trials,
                       const std::vector<double>& pf_grid, std::uint64_t seed);

}  // namespace royroot
