#pragma once

#include "royroot/exactcdf.hpp"

namespace royroot {

// Parameters of the rank-one-trace matrix integral
//   I = int_{0 < Y < I_m} det^beta[Y] det^alpha[I - zY] tr^nu(AY) dY
// with A rank-one of trace a; the unit vector is irrelevant by unitary
// invariance, so only the trace enters.
struct MatIntParams {
  int alpha, beta, nu, m;
  double a;  // tr(A) > 0
  double z;  // strictly inside (0,1)

  MatIntParams(int alpha_, int beta_, int nu_, int m_, double a_, double z_);
};

// ln K_d(m, n, p) = -m(m-1)/2 ln(pi) + sum_k ln (p+n-k)!/((p-k)!(n-k)!).
// Also serves the (alpha, beta) form via K_d(m, m+alpha, m+beta).
double log_kd(int m, int n, int p);

// First-column entry of the integral's determinant, i in 1..alpha+1.
double zeta(int i, const MatIntParams& params);

// The closed form: prefactor times det[zeta_i | Psi_{i,j}(z/(1-z))].
double matrix_integral(const MatIntParams& params);

// |series expansion of F_{v_max}(z) - cdf_lambda_max(z/(1-z))| with the
// series truncated after `truncation` terms. Ties the integral, the exact
// CDF, and the K/K_d constants into one cross-validating identity.
double series_consistency_residual(const ModelDims& dims, double omega_a,
                                   double z, int truncation);

}  // namespace royroot
