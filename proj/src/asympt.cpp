#include "royroot/asympt.hpp"

#include <cmath>
#include <stdexcept>

#include "royroot/exactcdf.hpp"
#include "royroot/specfun.hpp"

namespace royroot {

SpectrumParams::SpectrumParams(double c1_, double c2_, double gamma_)
    : c1(c1_), c2(c2_), gamma(gamma_) {
  if (!(c1 > 0.0) || !(c1 < 1.0))
    throw std::invalid_argument("SpectrumParams: c1 outside (0,1)");
  if (!(c2 > 0.0) || !(c2 < 1.0))
    throw std::invalid_argument("SpectrumParams: c2 outside (0,1)");
  if (!(gamma > 0.0))
    throw std::invalid_argument("SpectrumParams: gamma must be positive");
}

EdgeConstants edge_constants(const SpectrumParams& params) {
  const double c1 = params.c1, c2 = params.c2;
  const double r = std::sqrt(c1 + c2 - c1 * c2);
  const double mu = std::pow((1.0 + r) / (1.0 - c2), 2);
  // sigma0^3 = c1^4 (c1+r)^4 (c1+c2)^4 / (r [(c1+c2)^2 - c2 (c1+r)^2]^4)
  const double num = std::pow(c1 * (c1 + r) * (c1 + c2), 4);
  const double den_core = (c1 + c2) * (c1 + c2) - c2 * (c1 + r) * (c1 + r);
  const double sigma0_cubed = num / (r * std::pow(den_core, 4));
  if (!(sigma0_cubed > 0.0) || !std::isfinite(sigma0_cubed))
    throw numeric_range_error("edge_constants: sigma0^3 not positive finite");
  const double gamma_p = (c2 + r) / (1.0 - c2);
  return {r, mu, std::cbrt(sigma0_cubed), gamma_p};
}

SpikeConstants spike_constants(const SpectrumParams& params) {
  const double c1 = params.c1, c2 = params.c2, g = params.gamma;
  const double gamma_p = edge_constants(params).gamma_p;
  if (!(g > gamma_p))
    throw std::domain_error("spike_constants: gamma at or below the phase transition");
  const double xi = (g + c1) * (1.0 + g) / (g - (1.0 + g) * c2);
  const double tsq = c1 + c2 - c1 * (g * g - c1) / ((1.0 + g) * (1.0 + g));
  const double den = c2 - g + c2 * g;  // = -(g - (1+g)c2)
  const double sigma1_sq = tsq * g * g * (1.0 + g) * (1.0 + g) *
                           (g * g - c2 * (1.0 + g) * (1.0 + g) - c1) /
                           std::pow(den, 4);
  if (!(sigma1_sq > 0.0) || !std::isfinite(sigma1_sq))
    throw numeric_range_error("spike_constants: sigma1^2 not positive finite");
  return {xi, std::sqrt(sigma1_sq), tsq};
}

namespace {

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("asympt: m must be positive");
}

}  // namespace

double null_cdf_approx(const SpectrumParams& params, int m, double x) {
  check_m(m);
  const EdgeConstants edge = edge_constants(params);
  return tw2_cdf((x - edge.mu) * std::pow(double(m), 2.0 / 3.0) / edge.sigma0);
}

double alt_cdf_approx(const SpectrumParams& params, int m, double x) {
  check_m(m);
  const EdgeConstants edge = edge_constants(params);
  if (!(params.gamma > edge.gamma_p)) return null_cdf_approx(params, m, x);
  const SpikeConstants spike = spike_constants(params);
  // 1 - Q((x - xi) sqrt(m) / sigma1) written as Q((xi - x)...) for tail accuracy
  return gaussian_q((spike.xi - x) * std::sqrt(double(m)) / spike.sigma1);
}

double asympt_power(const SpectrumParams& params, int m, double pf) {
  check_m(m);
  if (!(pf > 0.0) || !(pf < 1.0))
    throw std::invalid_argument("asympt_power: pf outside (0,1)");
  const EdgeConstants edge = edge_constants(params);
  if (!(params.gamma > edge.gamma_p)) return pf;  // the spike is invisible
  const SpikeConstants spike = spike_constants(params);
  const double t_th = tw2_quantile(1.0 - pf);
  const double m23 = std::pow(double(m), 2.0 / 3.0);
  const double m16 = std::pow(double(m), 1.0 / 6.0);
  return gaussian_q((edge.sigma0 * t_th - m23 * (spike.xi - edge.mu)) /
                    (m16 * spike.sigma1));
}

double centered_statistic(const SpectrumParams& params, int m, double lambda_hat) {
  check_m(m);
  const EdgeConstants edge = edge_constants(params);
  return std::pow(double(m), 2.0 / 3.0) * (lambda_hat - edge.mu) / edge.sigma0;
}

}  // namespace royroot
