#pragma once

namespace royroot {

// High-dimensional regime: m/p -> c1, m/n -> c2, both inside (0,1);
// gamma is the SNR E_s a^H Sigma^{-1} a.
struct SpectrumParams {
  double c1, c2, gamma;

  SpectrumParams(double c1_, double c2_, double gamma_);
};

struct EdgeConstants {
  double r;        // sqrt(c1 + c2 - c1 c2)
  double mu;       // bulk right edge ((1+r)/(1-c2))^2
  double sigma0;   // Tracy-Widom fluctuation scale
  double gamma_p;  // phase-transition threshold (c2+r)/(1-c2)
};

struct SpikeConstants {
  double xi;      // spike location, > mu when supercritical
  double sigma1;  // Gaussian fluctuation scale
  double tsq;     // auxiliary t^2 (named tsq: t collides with the CDF argument)
};

EdgeConstants edge_constants(const SpectrumParams& params);

// Requires gamma > gamma_p; the critical point itself has no covered law and
// is rejected, as is the subcritical side (use the TW branch there).
SpikeConstants spike_constants(const SpectrumParams& params);

// F2((x - mu) m^{2/3} / sigma0): the null law of lambda_hat_max.
double null_cdf_approx(const SpectrumParams& params, int m, double x);

// Supercritical: Gaussian around xi at scale sigma1/sqrt(m); subcritical: the
// spike is invisible and the null TW law applies unchanged.
double alt_cdf_approx(const SpectrumParams& params, int m, double x);

// P_D at false-alarm rate pf: Q((sigma0 t_th - m^{2/3}(xi - mu))/(m^{1/6} sigma1))
// with t_th the TW quantile at 1 - pf; subcritical gives pf (no power).
double asympt_power(const SpectrumParams& params, int m, double pf);

// t = m^{2/3} (lambda_hat - mu) / sigma0.
double centered_statistic(const SpectrumParams& params, int m, double lambda_hat);

}  // namespace royroot
