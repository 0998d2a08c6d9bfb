#include "royroot/roc.hpp"

#include <cmath>
#include <stdexcept>

namespace royroot {

ScalingLaw::ScalingLaw(double k_, double epsilon_) : k(k_), epsilon(epsilon_) {
  if (!(k > 0.0)) throw std::invalid_argument("ScalingLaw: k must be positive");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("ScalingLaw: epsilon must be >= 0");
}

namespace {

void check_pf(double pf) {
  if (!(pf >= 0.0) || !(pf <= 1.0))
    throw std::invalid_argument("roc: pf outside [0,1]");
}

// 1 - (1-pf)^e with the pf == 0 / pf == 1 endpoints exact.
double one_minus_pow(double pf, double e) {
  if (pf == 0.0) return 0.0;
  if (pf == 1.0) return 1.0;
  return 1.0 - std::exp(e * std::log1p(-pf));
}

}  // namespace

std::pair<double, double> pf_pd_at_threshold(const ModelDims& dims, double omega,
                                             double xi_th) {
  const double pf = 1.0 - cdf_test_statistic(dims, 0.0, xi_th);
  const double pd = 1.0 - cdf_test_statistic(dims, omega, xi_th);
  return {pf, pd};
}

RocCurve roc_curve(const ModelDims& dims, double omega,
                   const std::vector<double>& pf_grid) {
  if (pf_grid.empty()) throw std::invalid_argument("roc_curve: empty pf grid");
  RocCurve curve{{}, dims, omega};
  curve.points.reserve(pf_grid.size());
  double prev = 0.0;
  for (double pf : pf_grid) {
    if (!(pf > prev) || !(pf < 1.0))
      throw std::invalid_argument("roc_curve: pf grid must be strictly increasing in (0,1)");
    prev = pf;
    const double thr = quantile(dims, 0.0, 1.0 - pf, /*scaled=*/true);
    const double pd = 1.0 - cdf_test_statistic(dims, omega, thr);
    curve.points.push_back({pf, pd, thr});
  }
  return curve;
}

double roc_alpha0_closed(int m, int beta, double omega, double pf) {
  if (m < 1 || beta < 0) throw std::invalid_argument("roc_alpha0_closed: bad dimensions");
  if (!(omega >= 0.0)) throw std::invalid_argument("roc_alpha0_closed: omega negative");
  check_pf(pf);
  if (pf == 0.0) return 0.0;
  if (pf == 1.0) return 1.0;
  if (omega == 0.0) return pf;  // keeps the chance diagonal exact
  const double q = std::exp(std::log1p(-pf) / (m * double(beta + m)));  // (1-pf)^{1/(m(beta+m))}
  return 1.0 - (1.0 - pf) * std::exp(-omega * (1.0 - q));
}

double limiting_roc_fixed_m(int m, const ScalingLaw& law, double gamma_quad,
                            double pf) {
  if (m < 1) throw std::invalid_argument("limiting_roc_fixed_m: m must be positive");
  if (!(gamma_quad > 0.0))
    throw std::invalid_argument("limiting_roc_fixed_m: gamma_quad must be positive");
  check_pf(pf);
  if (law.epsilon < 1.0) return pf;
  if (law.epsilon > 1.0) return pf == 0.0 ? 0.0 : 1.0;
  return one_minus_pow(pf, 1.0 + gamma_quad / m);
}

double limiting_roc_highdim(double c1, const ScalingLaw& law, double gamma_quad,
                            double pf) {
  if (!(c1 > 0.0) || !(c1 <= 1.0))
    throw std::invalid_argument("limiting_roc_highdim: c1 outside (0,1]");
  if (!(gamma_quad > 0.0))
    throw std::invalid_argument("limiting_roc_highdim: gamma_quad must be positive");
  check_pf(pf);
  if (law.epsilon < 2.0) return pf;
  if (law.epsilon > 2.0) return pf == 0.0 ? 0.0 : 1.0;
  return one_minus_pow(pf, 1.0 + gamma_quad / c1);
}

std::pair<double, double> roc_power_bounds(double pf, double k, double m_or_c1,
                                           double sigma_norm, double sigma_inv_norm) {
  check_pf(pf);
  if (!(k > 0.0) || !(m_or_c1 > 0.0))
    throw std::invalid_argument("roc_power_bounds: k and m_or_c1 must be positive");
  if (!(sigma_norm > 0.0) || !(sigma_inv_norm > 0.0))
    throw std::invalid_argument("roc_power_bounds: operator norms must be positive");
  if (sigma_norm * sigma_inv_norm < 1.0)
    throw std::invalid_argument("roc_power_bounds: ||Sigma|| ||Sigma^{-1}|| >= 1 violated");
  const double lower = one_minus_pow(pf, 1.0 + k / (m_or_c1 * sigma_norm));
  const double upper = one_minus_pow(pf, 1.0 + k * sigma_inv_norm / m_or_c1);
  return {lower, upper};
}

}  // namespace royroot
