#pragma once

#include <vector>

namespace royroot {

// Value carried as (sign, ln|x|). sign == 0 encodes exact zero regardless of
// log_abs. Factorial ratios here reach exponents of several hundred, far past
// double range, so all products stay in this form until the final exp.
struct SignedLog {
  double log_abs;
  int sign;

  static SignedLog zero() { return {0.0, 0}; }
  static SignedLog one() { return {0.0, +1}; }
  static SignedLog from_log(double l, int s = +1) { return {l, s}; }
  static SignedLog from_value(double v);

  double value() const;
  bool is_zero() const { return sign == 0; }

  friend SignedLog operator*(SignedLog a, SignedLog b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
  friend SignedLog operator/(SignedLog a, SignedLog b);
};

// Signed log-sum-exp over the terms; exact zero terms are skipped.
SignedLog sum_signed(const std::vector<SignedLog>& terms);

double log_factorial(int k);

// (a)_k as a SignedLog. Non-positive integer a uses the falling-factorial
// convention: (-N)_k = (-1)^k N!/(N-k)! for k <= N, and exactly 0 past it.
SignedLog log_pochhammer(double a, int k);

// Degree and integer superscripts of P_n^{(a,b)}; non-negative integers are
// all the determinant kernels ever need.
struct JacobiParams {
  int n, a, b;

  JacobiParams(int n_, int a_, int b_);
};

// P_n^{(a,b)}(x) by the three-term recurrence; stable for the x = 2/t + 1 > 1
// arguments the CDF needs, where the hypergeometric series cancels badly.
double jacobi_eval(int n, int a, int b, double x);
double jacobi_eval(const JacobiParams& params, double x);

// Same value in SignedLog form with in-recurrence renormalization, for
// determinant entries whose magnitude exceeds double range.
SignedLog jacobi_eval_log(int n, int a, int b, double x);

// k-th derivative via 2^{-k} (n+a+b+1)_k P_{n-k}^{(a+k,b+k)}; zero for k > n.
double jacobi_derivative(int n, int a, int b, int k, double x);
double jacobi_derivative(const JacobiParams& params, int k, double x);

// Q(x) = 1 - Phi(x); Q(0) == 0.5 exactly.
double gaussian_q(double x);

// F2 (unitary Tracy-Widom) on a fixed grid, monotone cubic interpolation in
// between, analytic tail continuations outside. Immutable after construction.
class Tw2Table {
 public:
  Tw2Table(double grid_lo, double grid_step, const double* cdf, int size);

  double cdf(double s) const;
  double quantile(double q) const;

  double grid_lo() const { return lo_; }
  double grid_hi() const { return lo_ + step_ * (size_ - 1); }
  double grid_step() const { return step_; }
  int size() const { return size_; }
  double grid_cdf(int i) const { return f_[i]; }

 private:
  double cell_eval(int i, double s) const;

  double lo_, step_;
  int size_;
  std::vector<double> f_;
  std::vector<double> d_;  // limited slopes
};

// Shared immutable instance over the compiled-in table.
const Tw2Table& tw2_table();

double tw2_cdf(double s);
double tw2_quantile(double q);

// Compiled table asset (generated; see tools/generate_tw2_table.py).
extern const double kTw2GridLo;
extern const double kTw2GridStep;
extern const int kTw2GridSize;
extern const double kTw2Cdf[];

}  // namespace royroot
