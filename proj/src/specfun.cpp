#include "royroot/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace royroot {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

int sign_of(double v) { return v > 0.0 ? +1 : (v < 0.0 ? -1 : 0); }
}  // namespace

SignedLog SignedLog::from_value(double v) {
  if (v == 0.0) return zero();
  return {std::log(std::abs(v)), sign_of(v)};
}

double SignedLog::value() const {
  if (sign == 0) return 0.0;
  return sign * std::exp(log_abs);
}

SignedLog operator/(SignedLog a, SignedLog b) {
  if (b.sign == 0) throw std::domain_error("SignedLog: division by exact zero");
  if (a.sign == 0) return SignedLog::zero();
  return {a.log_abs - b.log_abs, a.sign * b.sign};
}

SignedLog sum_signed(const std::vector<SignedLog>& terms) {
  double peak = -kInf;
  for (const auto& t : terms)
    if (t.sign != 0) peak = std::max(peak, t.log_abs);
  if (peak == -kInf) return SignedLog::zero();
  double acc = 0.0;
  for (const auto& t : terms)
    if (t.sign != 0) acc += t.sign * std::exp(t.log_abs - peak);
  if (acc == 0.0) return SignedLog::zero();
  return {peak + std::log(std::abs(acc)), sign_of(acc)};
}

double log_factorial(int k) {
  if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(k + 1.0);
}

SignedLog log_pochhammer(double a, int k) {
  if (k < 0) throw std::invalid_argument("log_pochhammer: negative k");
  if (k == 0) return SignedLog::one();
  if (a > 0.0) {
    // factors a, a+1, ..., a+k-1 all positive
    return {std::lgamma(a + k) - std::lgamma(a), +1};
  }
  if (a == std::floor(a)) {
    // (-N)_k = (-1)^k N!/(N-k)! for k <= N, exactly 0 past the last factor
    const int N = static_cast<int>(-a);
    if (k > N) return SignedLog::zero();
    return {log_factorial(N) - log_factorial(N - k), (k % 2 == 0) ? +1 : -1};
  }
  // negative non-integer base: direct factor scan (k is small in practice)
  double lg = 0.0;
  int sgn = +1;
  for (int i = 0; i < k; ++i) {
    const double f = a + i;
    lg += std::log(std::abs(f));
    if (f < 0.0) sgn = -sgn;
  }
  return {lg, sgn};
}

JacobiParams::JacobiParams(int n_, int a_, int b_) : n(n_), a(a_), b(b_) {
  if (n < 0) throw std::invalid_argument("JacobiParams: negative degree");
  if (a < 0 || b < 0) throw std::invalid_argument("JacobiParams: negative parameter");
}

double jacobi_eval(const JacobiParams& params, double x) {
  return jacobi_eval(params.n, params.a, params.b, x);
}

double jacobi_derivative(const JacobiParams& params, int k, double x) {
  return jacobi_derivative(params.n, params.a, params.b, k, x);
}

double jacobi_eval(int n, int a, int b, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  if (a < 0 || b < 0) throw std::invalid_argument("jacobi_eval: negative parameter");
  if (n == 0) return 1.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) * (double(a) * a - double(b) * b);
    const double c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
    pm1 = p;
    p = next;
  }
  return p;
}

SignedLog jacobi_eval_log(int n, int a, int b, double x) {
  if (n < 0) throw std::invalid_argument("jacobi_eval_log: negative degree");
  if (n == 0) return SignedLog::one();
  // same recurrence with renormalization once magnitudes pass 1e280
  double offset = 0.0;
  double pm1 = 1.0;
  double p = 0.5 * (a - b + (a + b + 2.0) * x);
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) * (double(a) * a - double(b) * b);
    const double c3 = (2.0 * k + a + b - 2.0) * (2.0 * k + a + b - 1.0) * (2.0 * k + a + b);
    const double c4 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
    pm1 = p;
    p = next;
    const double mag = std::max(std::abs(p), std::abs(pm1));
    if (mag > 1e280) {
      p *= 1e-280;
      pm1 *= 1e-280;
      offset += std::log(1e280);
    } else if (mag > 0.0 && mag < 1e-280) {
      p *= 1e280;
      pm1 *= 1e280;
      offset -= std::log(1e280);
    }
  }
  if (p == 0.0) return SignedLog::zero();
  return {std::log(std::abs(p)) + offset, sign_of(p)};
}

double jacobi_derivative(int n, int a, int b, int k, double x) {
  if (k < 0) throw std::invalid_argument("jacobi_derivative: negative order");
  if (k > n + 1) throw std::invalid_argument("jacobi_derivative: order exceeds degree + 1");
  if (k == 0) return jacobi_eval(n, a, b, x);
  if (k > n) return 0.0;
  const double pref = std::exp(log_pochhammer(n + a + b + 1.0, k).log_abs - k * std::log(2.0));
  return pref * jacobi_eval(n - k, a + k, b + k, x);
}

double gaussian_q(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

// ---------------------------------------------------------------------------
// Tracy-Widom F2 table

namespace {

// Left tail shape: ln F2 ~ -|s|^3/12 - (1/8) ln|s| + const.
double left_tail_shape(double s) {
  const double u = -s;
  return -u * u * u / 12.0 - 0.125 * std::log(u);
}

// Right tail shape: -ln(1 - F2) ~ (4/3) s^{3/2} + (3/2) ln s + const.
double right_tail_shape(double s) {
  return (4.0 / 3.0) * std::pow(s, 1.5) + 1.5 * std::log(s);
}

}  // namespace

Tw2Table::Tw2Table(double grid_lo, double grid_step, const double* cdf, int size)
    : lo_(grid_lo), step_(grid_step), size_(size), f_(cdf, cdf + size), d_(size) {
  if (size < 5) throw std::invalid_argument("Tw2Table: grid too small");
  for (int i = 1; i < size_; ++i)
    if (!(f_[i] > f_[i - 1]))
      throw std::invalid_argument("Tw2Table: cdf values not strictly increasing");
  if (!(f_.front() < 1e-8) || !(f_.back() > 1.0 - 1e-8))
    throw std::invalid_argument("Tw2Table: endpoint mass out of contract");

  const double h = step_;
  d_[0] = (-3.0 * f_[0] + 4.0 * f_[1] - f_[2]) / (2.0 * h);
  d_[1] = (f_[2] - f_[0]) / (2.0 * h);
  for (int i = 2; i + 2 < size_; ++i)
    d_[i] = (f_[i - 2] - 8.0 * f_[i - 1] + 8.0 * f_[i + 1] - f_[i + 2]) / (12.0 * h);
  d_[size_ - 2] = (f_[size_ - 1] - f_[size_ - 3]) / (2.0 * h);
  d_[size_ - 1] = (3.0 * f_[size_ - 1] - 4.0 * f_[size_ - 2] + f_[size_ - 3]) / (2.0 * h);

  // Fritsch-Carlson limiter keeps each cubic cell monotone; on data this
  // smooth it almost never activates, preserving the fourth-order slopes.
  for (int i = 0; i < size_; ++i) d_[i] = std::max(d_[i], 0.0);
  for (int i = 0; i + 1 < size_; ++i) {
    const double delta = (f_[i + 1] - f_[i]) / h;
    if (delta <= 0.0) {
      d_[i] = d_[i + 1] = 0.0;
      continue;
    }
    const double al = d_[i] / delta, be = d_[i + 1] / delta;
    const double rad = al * al + be * be;
    if (rad > 9.0) {
      const double tau = 3.0 / std::sqrt(rad);
      d_[i] = tau * al * delta;
      d_[i + 1] = tau * be * delta;
    }
  }
}

double Tw2Table::cell_eval(int i, double s) const {
  const double h = step_;
  const double th = (s - (lo_ + i * h)) / h;
  const double th2 = th * th, th3 = th2 * th;
  return (2.0 * th3 - 3.0 * th2 + 1.0) * f_[i] + (th3 - 2.0 * th2 + th) * h * d_[i] +
         (-2.0 * th3 + 3.0 * th2) * f_[i + 1] + (th3 - th2) * h * d_[i + 1];
}

double Tw2Table::cdf(double s) const {
  const double hi = grid_hi();
  if (s <= lo_) {
    if (s == lo_) return f_.front();
    return f_.front() * std::exp(left_tail_shape(s) - left_tail_shape(lo_));
  }
  if (s >= hi) {
    if (s == hi) return f_.back();
    const double tail = (1.0 - f_.back()) * std::exp(right_tail_shape(hi) - right_tail_shape(s));
    return 1.0 - tail;
  }
  int i = static_cast<int>(std::floor((s - lo_) / step_));
  i = std::clamp(i, 0, size_ - 2);
  return std::clamp(cell_eval(i, s), 0.0, 1.0);
}

double Tw2Table::quantile(double q) const {
  if (!(q > 0.0) || !(q < 1.0))
    throw std::invalid_argument("tw2_quantile: q outside (0,1)");
  if (q < f_.front()) {
    // invert the left tail: left_tail_shape is strictly decreasing in -s
    const double target = left_tail_shape(lo_) + std::log(q / f_.front());
    double ulo = -lo_, uhi = std::cbrt(-12.0 * target) + 5.0;
    for (int it = 0; it < 200; ++it) {
      const double um = 0.5 * (ulo + uhi);
      (left_tail_shape(-um) > target ? ulo : uhi) = um;
    }
    return -0.5 * (ulo + uhi);
  }
  if (q > f_.back()) {
    const double hi = grid_hi();
    const double target = right_tail_shape(hi) + std::log((1.0 - f_.back()) / (1.0 - q));
    double slo = hi, shi = std::pow(0.75 * target, 2.0 / 3.0) + 5.0;
    for (int it = 0; it < 200; ++it) {
      const double sm = 0.5 * (slo + shi);
      (right_tail_shape(sm) < target ? slo : shi) = sm;
    }
    return 0.5 * (slo + shi);
  }
  const auto it = std::lower_bound(f_.begin(), f_.end(), q);
  int i = static_cast<int>(it - f_.begin());
  if (i > 0) --i;
  i = std::clamp(i, 0, size_ - 2);
  double slo = lo_ + i * step_, shi = slo + step_;
  for (int k = 0; k < 80; ++k) {
    const double sm = 0.5 * (slo + shi);
    (cell_eval(i, sm) < q ? slo : shi) = sm;
  }
  return 0.5 * (slo + shi);
}

const Tw2Table& tw2_table() {
  static const Tw2Table table(kTw2GridLo, kTw2GridStep, kTw2Cdf, kTw2GridSize);
  return table;
}

double tw2_cdf(double s) { return tw2_table().cdf(s); }
double tw2_quantile(double q) { return tw2_table().quantile(q); }

}  // namespace royroot
