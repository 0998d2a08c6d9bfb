#include "royroot/exactcdf.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "royroot/logdet.hpp"
#include "royroot/specfun.hpp"

namespace royroot {

ModelDims::ModelDims(int m_, int n_, int p_) : m(m_), n(n_), p(p_) {
  if (m < 1 || n < 1 || p < 1)
    throw std::invalid_argument("ModelDims: dimensions must be positive");
  if (n < m)
    throw std::invalid_argument("ModelDims: n >= m required (noise covariance estimate must be invertible)");
}

namespace detail {

// ln K(alpha, beta, m) = sum_{j<alpha} ln (beta+2m+j-1)!/(beta+2m+2j)!.
double log_k_const(int alpha, int beta, int m) {
  double tot = 0.0;
  for (int j = 0; j < alpha; ++j)
    tot += log_factorial(beta + 2 * m + j - 1) - log_factorial(beta + 2 * m + 2 * j);
  return tot;
}

SignedLog psi_entry(int i, int j, int beta, int m, double t) {
  const int degree = m + i - j;
  if (degree < 0) return SignedLog::zero();
  const SignedLog pref = log_pochhammer(beta + m + i - 1.0, j - 2);
  return pref * jacobi_eval_log(degree, j - 2, beta + j - 2, 2.0 / t + 1.0);
}

}  // namespace detail

namespace {

using detail::log_k_const;
using detail::psi_entry;

// First-column entries: finite sum over k with weight (omega t/(1+t))^{alpha-k},
// all terms non-negative; 0^0 = 1 so omega = 0 keeps only k == alpha (i == 1).
SignedLog phi_log(int i, int alpha, int beta, int m, double t, double omega) {
  const double w = omega * t / (1.0 + t);
  const double logw = w > 0.0 ? std::log(w) : 0.0;
  std::vector<SignedLog> terms;
  terms.reserve(alpha + 2 - i);
  for (int k = 0; k <= alpha + 1 - i; ++k) {
    const int e = alpha - k;
    if (w == 0.0 && e != 0) continue;
    const double lg = log_factorial(alpha + 1 - i) + log_factorial(alpha + beta + 2 * m + i - 2) -
                      log_factorial(k) - log_factorial(alpha + 1 - i - k) -
                      log_factorial(alpha + beta + 2 * m + i - 2 - k) + e * logw;
    terms.push_back(SignedLog::from_log(lg));
  }
  return sum_signed(terms);
}

void check_t(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("cdf: t must be non-negative");
}

void check_omega(double omega) {
  if (!(omega >= 0.0)) throw std::invalid_argument("cdf: omega must be non-negative");
}

double finish_cdf(double log_cdf, int sign) {
  const double v = sign == 0 ? 0.0 : sign * std::exp(log_cdf);
  if (!std::isfinite(v))
    throw numeric_range_error("cdf: determinant escaped double range despite log scaling");
  if (v < -1e-8 || v > 1.0 + 1e-8)
    throw numeric_range_error("cdf: value outside [0,1] beyond roundoff");
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace

double phi(int i, const ModelDims& dims, double t, double omega) {
  const int alpha = dims.alpha(), beta = dims.beta();
  if (beta < 0) throw std::invalid_argument("phi: p >= m required");
  if (i < 1 || i > alpha + 1) throw std::invalid_argument("phi: index out of 1..alpha+1");
  if (!(t > 0.0)) throw std::invalid_argument("phi: t must be positive");
  check_omega(omega);
  return phi_log(i, alpha, beta, dims.m, t, omega).value();
}

double psi(int i, int j, const ModelDims& dims, double t) {
  const int alpha = dims.alpha(), beta = dims.beta();
  if (beta < 0) throw std::invalid_argument("psi: p >= m required");
  if (i < 1 || i > alpha + 1) throw std::invalid_argument("psi: row index out of 1..alpha+1");
  if (j < 2 || j > alpha + 1) throw std::invalid_argument("psi: column index out of 2..alpha+1");
  if (!(t > 0.0)) throw std::invalid_argument("psi: t must be positive");
  if (dims.m + i - j < 0)
    throw std::invalid_argument("psi: negative polynomial degree (inconsistent dims)");
  return psi_entry(i, j, beta, dims.m, t).value();
}

double cdf_lambda_max(const ModelDims& dims, double omega, double t) {
  const int alpha = dims.alpha(), beta = dims.beta(), m = dims.m;
  if (beta < 0)
    throw std::invalid_argument("cdf_lambda_max: p >= m required (use cdf_singular)");
  check_omega(omega);
  check_t(t);
  if (t == 0.0) return 0.0;

  const int size = alpha + 1;
  std::vector<SignedLog> entries(size * size);
  for (int i = 1; i <= size; ++i) {
    entries[(i - 1) * size] = phi_log(i, alpha, beta, m, t, omega);
    for (int j = 2; j <= size; ++j)
      entries[(i - 1) * size + (j - 1)] = psi_entry(i, j, beta, m, t);
  }
  const SignedLog det = signed_log_det(entries, size);
  const double log_pref = log_k_const(alpha, beta, m) - omega / (1.0 + t) +
                          m * double(alpha + beta + m) * std::log(t / (1.0 + t));
  return finish_cdf(log_pref + det.log_abs, det.sign);
}

double cdf_alpha0(int m, int beta, double omega, double t) {
  if (m < 1 || beta < 0) throw std::invalid_argument("cdf_alpha0: invalid dimensions");
  check_omega(omega);
  check_t(t);
  if (t == 0.0) return 0.0;
  return std::exp(-omega / (1.0 + t) + m * double(beta + m) * std::log(t / (1.0 + t)));
}

double cdf_central(const ModelDims& dims, double t) {
  const int alpha = dims.alpha(), beta = dims.beta(), m = dims.m;
  if (beta < 0) throw std::invalid_argument("cdf_central: p >= m required");
  check_t(t);
  if (t == 0.0) return 0.0;
  if (alpha == 0) return cdf_alpha0(m, beta, 0.0, t);

  std::vector<SignedLog> entries(alpha * alpha);
  for (int i = 1; i <= alpha; ++i)
    for (int j = 1; j <= alpha; ++j)
      entries[(i - 1) * alpha + (j - 1)] = psi_entry(i + 1, j + 1, beta, m, t);
  const SignedLog det = signed_log_det(entries, alpha);
  const double log_pref = log_factorial(alpha + beta + 2 * m - 1) -
                          log_factorial(beta + 2 * m - 1) + log_k_const(alpha, beta, m) +
                          m * double(alpha + beta + m) * std::log(t / (1.0 + t));
  return finish_cdf(log_pref + det.log_abs, det.sign);
}

namespace detail {
ModelDims singular_relabel(const ModelDims& dims) {
  return ModelDims(dims.p, dims.n + dims.p - dims.m, dims.m);
}
}  // namespace detail

double cdf_singular(const ModelDims& dims, double omega, double t) {
  if (dims.p >= dims.m)
    throw std::invalid_argument("cdf_singular: requires p < m (use cdf_lambda_max)");
  return cdf_lambda_max(detail::singular_relabel(dims), omega, t);
}

double cdf_test_statistic(const ModelDims& dims, double omega, double x) {
  check_t(x);
  const double c = double(dims.p) / double(dims.n);
  return cdf_lambda_max(dims, omega, c * x);
}

double quantile(const ModelDims& dims, double omega, double q, bool scaled) {
  if (!(q > 0.0) || !(q < 1.0)) throw std::invalid_argument("quantile: q outside (0,1)");
  const auto cdf = [&](double t) { return cdf_lambda_max(dims, omega, t); };

  double t0 = double(dims.m) * dims.p / double(dims.n - dims.m + 1);
  t0 = std::clamp(t0, 1e-6, 1e6);
  double lo = t0, hi = t0;
  while (cdf(lo) > q) {
    lo *= 0.5;
    if (lo < 1e-12) throw numeric_range_error("quantile: failed to bracket below 1e-12");
  }
  while (cdf(hi) < q) {
    hi *= 2.0;
    if (hi > 1e12) throw numeric_range_error("quantile: failed to bracket above 1e12");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = std::sqrt(lo * hi);
    (cdf(mid) < q ? lo : hi) = mid;
  }
  const double t = 0.5 * (lo + hi);
  if (std::abs(cdf(t) - q) > 1e-9)
    throw numeric_range_error("quantile: bisection did not reach 1e-9 target");
  return scaled ? t * double(dims.n) / double(dims.p) : t;
}

double limiting_scaled_cdf(double c1, double x, LimitRegime regime, double value) {
  if (!(c1 > 0.0) || !(c1 <= 1.0))
    throw std::invalid_argument("limiting_scaled_cdf: c1 outside (0,1]");
  if (!(x > 0.0)) throw std::invalid_argument("limiting_scaled_cdf: x must be positive");
  if (!(value >= 0.0)) throw std::invalid_argument("limiting_scaled_cdf: regime value negative");
  if (regime == LimitRegime::tau) return std::exp(-1.0 / (c1 * x));  // independent of tau
  return std::exp(-(value + c1) / (c1 * c1 * x));
}

}  // namespace royroot
