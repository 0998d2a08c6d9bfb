#pragma once

#include <utility>
#include <vector>

#include "royroot/exactcdf.hpp"

namespace royroot {

struct RocPoint {
  double pf;
  double pd;
  double threshold;  // on the lambda_hat scale
};

struct RocCurve {
  std::vector<RocPoint> points;  // pf strictly increasing
  ModelDims dims;
  double omega;
};

// ||s||^2 = k * p^epsilon growth law for the limiting ROC regimes.
struct ScalingLaw {
  double k;
  double epsilon;

  ScalingLaw(double k_, double epsilon_);
};

// (P_F, P_D) at a fixed lambda_hat-scale threshold.
std::pair<double, double> pf_pd_at_threshold(const ModelDims& dims,
                                             double omega, double xi_th);

// Exact ROC: thresholds from the null quantile at 1 - pf, detection from the
// non-central CDF. pf_grid must be strictly increasing inside (0,1).
RocCurve roc_curve(const ModelDims& dims, double omega,
                   const std::vector<double>& pf_grid);

// alpha == 0 closed form:
// P_D = 1 - (1-P_F) exp{-omega (1 - (1-P_F)^{1/(m(beta+m))})}.
double roc_alpha0_closed(int m, int beta, double omega, double pf);

// Fixed m, p -> infinity: pf below epsilon = 1; 1-(1-pf)^{1+gamma_quad/m} at
// epsilon = 1; 1 above (0 at pf == 0). gamma_quad = k * a^H Sigma^{-1} a.
double limiting_roc_fixed_m(int m, const ScalingLaw& law, double gamma_quad,
                            double pf);

// m = n, m/p -> c1 regime: the same structure with the critical exponent at
// epsilon = 2 and exponent 1 + gamma_quad/c1.
double limiting_roc_highdim(double c1, const ScalingLaw& law,
                            double gamma_quad, double pf);

// Operator-norm sandwich for the critical-exponent limiting power; m_or_c1 is
// m in the fixed-m regime or c1 in the high-dimensional one.
std::pair<double, double> roc_power_bounds(double pf, double k, double m_or_c1,
                                           double sigma_norm,
                                           double sigma_inv_norm);

}  // namespace royroot
