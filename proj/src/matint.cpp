#include "royroot/matint.hpp"

#include <cmath>
#include <vector>

#include "royroot/logdet.hpp"
#include "royroot/specfun.hpp"

namespace royroot {

MatIntParams::MatIntParams(int alpha_, int beta_, int nu_, int m_, double a_, double z_)
    : alpha(alpha_), beta(beta_), nu(nu_), m(m_), a(a_), z(z_) {
  if (alpha < 0 || beta < 0 || nu < 0)
    throw std::invalid_argument("MatIntParams: integer parameters must be non-negative");
  if (m < 1) throw std::invalid_argument("MatIntParams: m must be positive");
  if (!(a > 0.0)) throw std::invalid_argument("MatIntParams: trace a must be positive");
  if (!(z > 0.0) || !(z < 1.0)) throw std::invalid_argument("MatIntParams: z outside (0,1)");
}

double log_kd(int m, int n, int p) {
  if (m < 1) throw std::invalid_argument("log_kd: m must be positive");
  if (n < m || p < m) throw std::invalid_argument("log_kd: n >= m and p >= m required");
  double tot = -0.5 * m * (m - 1.0) * std::log(M_PI);
  for (int k = 1; k <= m; ++k)
    tot += log_factorial(p + n - k) - log_factorial(p - k) - log_factorial(n - k);
  return tot;
}

namespace {

// zeta_i as displayed: the (-1)^i (-l-1)_i factor is carried verbatim through
// log_pochhammer's falling-factorial branch, which also zeroes i > l+1 terms.
SignedLog zeta_log(int i, const MatIntParams& prm) {
  std::vector<SignedLog> terms;
  const int lmax = std::min(prm.alpha, prm.nu);
  terms.reserve(lmax + 1);
  for (int l = 0; l <= lmax; ++l) {
    SignedLog poch = log_pochhammer(-l - 1.0, i);
    if (poch.is_zero()) continue;
    if (i % 2 != 0) poch.sign = -poch.sign;  // the (-1)^i factor
    const double lg =
        log_factorial(prm.nu) + log_factorial(prm.alpha + 1 - i) +
        log_factorial(prm.alpha + prm.beta + 2 * prm.m + i - 2) -
        log_factorial(prm.nu - l) - log_factorial(l + 1) - log_factorial(prm.alpha - l) -
        log_factorial(l + prm.beta + 2 * prm.m + i - 2);
    terms.push_back(SignedLog::from_log(lg + poch.log_abs, poch.sign));
  }
  return sum_signed(terms);
}

// Psi columns reuse the CDF determinant's entry at argument z/(1-z), so a
// single Jacobi code path serves both determinants.
SignedLog matrix_integral_log(const MatIntParams& prm) {
  const int size = prm.alpha + 1;
  const double tau = prm.z / (1.0 - prm.z);
  std::vector<SignedLog> entries(size * size);
  for (int i = 1; i <= size; ++i) {
    entries[(i - 1) * size] = zeta_log(i, prm);
    for (int j = 2; j <= size; ++j)
      entries[(i - 1) * size + (j - 1)] = detail::psi_entry(i, j, prm.beta, prm.m, tau);
  }
  const SignedLog det = signed_log_det(entries, size);
  const double log_pref =
      detail::log_k_const(prm.alpha, prm.beta, prm.m) -
      log_kd(prm.m, prm.m + prm.alpha, prm.m + prm.beta) +
      log_pochhammer(prm.m + double(prm.beta), prm.nu).log_abs -
      log_pochhammer(prm.alpha + prm.beta + 2.0 * prm.m, prm.nu).log_abs +
      prm.nu * std::log(prm.a) + prm.m * double(prm.alpha) * std::log(prm.z);
  return SignedLog::from_log(log_pref, 1) * det;
}

}  // namespace

double zeta(int i, const MatIntParams& params) {
  if (i < 1 || i > params.alpha + 1)
    throw std::invalid_argument("zeta: index out of 1..alpha+1");
  return zeta_log(i, params).value();
}

double matrix_integral(const MatIntParams& params) {
  const SignedLog v = matrix_integral_log(params);
  const double out = v.value();
  if (!(out > 0.0) || !std::isfinite(out))
    throw numeric_range_error("matrix_integral: positivity lost to cancellation or range");
  return out;
}

double series_consistency_residual(const ModelDims& dims, double omega_a, double z,
                                   int truncation) {
  if (truncation < 1) throw std::invalid_argument("series residual: truncation must be >= 1");
  if (!(omega_a >= 0.0)) throw std::invalid_argument("series residual: omega_a negative");
  if (!(z > 0.0) || !(z < 1.0)) throw std::invalid_argument("series residual: z outside (0,1)");
  if (dims.beta() < 0) throw std::invalid_argument("series residual: p >= m required");

  const int m = dims.m, n = dims.n, p = dims.p;
  const int alpha = dims.alpha(), beta = dims.beta();
  const double log_z = std::log(z);

  double series = 0.0;
  for (int nu = 0; nu < truncation; ++nu) {
    const double log_coef = log_pochhammer(double(n + p), nu).log_abs -
                            log_pochhammer(double(p), nu).log_abs - log_factorial(nu) +
                            nu * log_z;
    const MatIntParams prm(alpha, beta, nu, m, 1.0, z);
    const double integral = matrix_integral_log(prm).value();
    const double spike = nu == 0 ? 1.0 : std::pow(omega_a, nu);
    series += std::exp(log_coef) * spike * integral;
    if (omega_a == 0.0) break;  // only the nu = 0 term survives
  }
  series *= std::exp(log_kd(m, n, p) - omega_a + m * double(p) * log_z);

  const double exact = cdf_lambda_max(dims, omega_a, z / (1.0 - z));
  return std::abs(series - exact);
}

}  // namespace royroot
