#pragma once

#include <stdexcept>

#include "royroot/specfun.hpp"

namespace royroot {

// Raised when a value escapes the representable range despite log-domain
// scaling; callers may retry through the asymptotic module.
class numeric_range_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (m, n, p): system dimension, noise-only samples, signal-bearing samples.
// n >= m always (the singular branch relabels rather than relaxing it);
// beta() < 0 is allowed only on the p < m path consumed by cdf_singular.
struct ModelDims {
  int m, n, p;

  ModelDims(int m_, int n_, int p_);

  int alpha() const { return n - m; }
  int beta() const { return p - m; }
};

// First-column determinant entry, i in 1..alpha+1. At omega == 0 the 0^0 = 1
// convention keeps the single k == alpha term for i == 1 and zeroes the rest.
double phi(int i, const ModelDims& dims, double t, double omega);

// Remaining determinant entries, j in 2..alpha+1:
// (beta+m+i-1)_{j-2} * P^{(j-2, beta+j-2)}_{m+i-j}(2/t + 1).
// Negative Jacobi degree is a structural error here; the CDF determinant
// builder treats those entries as exact zeros internally (they are
// derivatives past the polynomial degree).
double psi(int i, int j, const ModelDims& dims, double t);

// Exact CDF of lambda_max of the non-central F-matrix at rank-one
// non-centrality omega. Requires p >= m; t == 0 returns exact 0.
double cdf_lambda_max(const ModelDims& dims, double omega, double t);

// Closed form for alpha == 0 (m == n): e^{-omega/(1+t)} (t/(1+t))^{m(beta+m)}.
double cdf_alpha0(int m, int beta, double omega, double t);

// Central case (omega == 0) via the alpha x alpha determinant.
double cdf_central(const ModelDims& dims, double t);

// p < m branch: identical law of the non-zero eigenvalues after relabeling
// m -> p, p -> m, n -> n + p - m. Rejects p >= m.
double cdf_singular(const ModelDims& dims, double omega, double t);

// CDF of the normalized statistic lambda_hat = (n/p) lambda: F(c x), c = p/n.
double cdf_test_statistic(const ModelDims& dims, double omega, double x);

// Inverse CDF by bracketing + bisection; |cdf(quantile(q)) - q| < 1e-9.
// `scaled` returns the lambda_hat-scale threshold.
double quantile(const ModelDims& dims, double omega, double q, bool scaled = false);

// m = n scaled limit of lambda_max / m^2 as p grows with m/p -> c1.
// tau regime (omega/p -> tau): exp(-1/(c1 x)), independent of tau's value.
// phi regime (omega/p^2 -> phi): exp(-(phi + c1)/(c1^2 x)).
enum class LimitRegime { tau, phi };
double limiting_scaled_cdf(double c1, double x, LimitRegime regime, double value);

namespace detail {
ModelDims singular_relabel(const ModelDims& dims);
// ln K(alpha, beta, m); empty product (alpha == 0) is 1.
double log_k_const(int alpha, int beta, int m);
// Log-domain Psi entry; negative degree is an exact zero (derivative past
// the polynomial degree). Shared by the CDF and matrix-integral determinants.
SignedLog psi_entry(int i, int j, int beta, int m, double t);
}

}  // namespace royroot
