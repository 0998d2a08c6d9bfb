#include "royroot/logdet.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace royroot {

SignedLog signed_log_det(const std::vector<SignedLog>& entries, int size) {
  if (size <= 0) throw std::invalid_argument("signed_log_det: empty matrix");
  if (static_cast<int>(entries.size()) != size * size)
    throw std::invalid_argument("signed_log_det: entry count mismatch");

  Eigen::MatrixXd scaled(size, size);
  double log_scale = 0.0;
  for (int r = 0; r < size; ++r) {
    double row_peak = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < size; ++c) {
      const auto& e = entries[r * size + c];
      if (e.sign != 0) row_peak = std::max(row_peak, e.log_abs);
    }
    if (row_peak == -std::numeric_limits<double>::infinity())
      return SignedLog::zero();  // an all-zero row
    for (int c = 0; c < size; ++c) {
      const auto& e = entries[r * size + c];
      scaled(r, c) = e.sign == 0 ? 0.0 : e.sign * std::exp(e.log_abs - row_peak);
    }
    log_scale += row_peak;
  }

  Eigen::PartialPivLU<Eigen::MatrixXd> lu(scaled);
  const auto& lum = lu.matrixLU();
  int sign = lu.permutationP().determinant() > 0 ? +1 : -1;
  double log_det = 0.0;
  for (int i = 0; i < size; ++i) {
    const double d = lum(i, i);
    if (d == 0.0) return SignedLog::zero();
    if (d < 0.0) sign = -sign;
    log_det += std::log(std::abs(d));
  }
  return {log_det + log_scale, sign};
}

}  // namespace royroot
