#include "royroot/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "json.hpp"

namespace royroot {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RngStream RngStream::for_trial(std::uint64_t seed, std::uint64_t stream_id) {
  return RngStream(mix64(mix64(seed) + kGolden * (stream_id + 1)));
}

// Keyed hash of the draw counter (not a walk on a shared orbit), so distinct
// streams can never collide into shifted copies of each other.
std::uint64_t RngStream::next_u64() {
  std::uint64_t z = mix64(key_ + kGolden * ++counter_);
  return mix64(z ^ key_);
}

double RngStream::uniform() {
  return double(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

std::complex<double> RngStream::complex_gaussian() {
  const double r = std::sqrt(-std::log(uniform()));
  const double theta = 2.0 * M_PI * uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using MapMat = Eigen::Map<const MatrixXcd>;
using MapVec = Eigen::Map<const VectorXcd>;

int worker_count() {
  if (const char* env = std::getenv("ROYROOT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096) return int(v);
    throw std::invalid_argument("ROYROOT_THREADS must be an integer in 1..4096");
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

}  // namespace

SignalModel::SignalModel(int m_, int n_, int p_,
                         std::vector<std::complex<double>> sigma_,
                         std::vector<std::complex<double>> a_,
                         std::vector<std::complex<double>> s_)
    : m(m_), n(n_), p(p_), sigma(std::move(sigma_)), a_vec(std::move(a_)),
      s_vec(std::move(s_)) {
  if (m < 1 || n < 1 || p < 1)
    throw std::invalid_argument("SignalModel: dimensions must be positive");
  if (n < m) throw std::invalid_argument("SignalModel: n >= m required");
  if (sigma.size() != std::size_t(m) * m)
    throw std::invalid_argument("SignalModel: sigma must be m x m");
  if (a_vec.size() != std::size_t(m))
    throw std::invalid_argument("SignalModel: a must have length m");
  if (s_vec.size() != std::size_t(p))
    throw std::invalid_argument("SignalModel: s must have length p");

  MapMat S(sigma.data(), m, m);
  double scale = 0.0;
  for (const auto& v : sigma) scale = std::max(scale, std::abs(v));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i <= j; ++i)
      if (std::abs(S(i, j) - std::conj(S(j, i))) > 1e-12 * (1.0 + scale))
        throw std::invalid_argument("SignalModel: sigma not Hermitian");

  sigma_is_identity_ = true;
  for (int j = 0; j < m && sigma_is_identity_; ++j)
    for (int i = 0; i < m; ++i)
      if (S(i, j) != std::complex<double>(i == j ? 1.0 : 0.0, 0.0)) {
        sigma_is_identity_ = false;
        break;
      }

  Eigen::LLT<MatrixXcd> llt{MatrixXcd(S)};
  if (llt.info() != Eigen::Success)
    throw std::invalid_argument("SignalModel: sigma not positive definite");
  const MatrixXcd L = llt.matrixL();
  chol_.assign(L.data(), L.data() + std::size_t(m) * m);

  MapVec a(a_vec.data(), m);
  MapVec s(s_vec.data(), p);
  const VectorXcd sol = llt.solve(VectorXcd(a));
  omega_ = s.squaredNorm() * a.dot(sol).real();
}

SignalModel SignalModel::isotropic(int m, int n, int p, double omega) {
  if (!(omega >= 0.0)) throw std::invalid_argument("SignalModel: omega negative");
  std::vector<std::complex<double>> sig(std::size_t(m) * m, 0.0);
  for (int i = 0; i < m; ++i) sig[std::size_t(i) * m + i] = 1.0;
  std::vector<std::complex<double>> a(m, 0.0);
  if (m >= 1) a[0] = 1.0;
  std::vector<std::complex<double>> s(p, 0.0);
  if (p >= 1) s[0] = std::sqrt(omega);
  return SignalModel(m, n, p, std::move(sig), std::move(a), std::move(s));
}

namespace {

std::complex<double> json_complex(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw std::invalid_argument("model json: complex entries are numbers or [re, im]");
}

}  // namespace

SignalModel SignalModel::from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  if (!doc.is_object()) throw std::invalid_argument("model json: expected an object");
  const bool explicit_form = doc.contains("sigma") || doc.contains("a") || doc.contains("s");
  if (explicit_form) {
    if (doc.contains("omega"))
      throw std::invalid_argument("model json: give omega or (sigma, a, s), not both");
    if (!doc.contains("sigma") || !doc.contains("a") || !doc.contains("s") || !doc.contains("n"))
      throw std::invalid_argument("model json: explicit form needs sigma, a, s, n");
    const auto& ja = doc.at("a");
    const auto& js = doc.at("s");
    const auto& jsig = doc.at("sigma");
    if (!ja.is_array() || !js.is_array() || !jsig.is_array())
      throw std::invalid_argument("model json: sigma, a, s must be arrays");
    const int m = int(ja.size());
    const int p = int(js.size());
    const int n = doc.at("n").get<int>();
    if ((doc.contains("m") && doc.at("m").get<int>() != m) ||
        (doc.contains("p") && doc.at("p").get<int>() != p))
      throw std::invalid_argument("model json: m/p disagree with a/s lengths");
    if (int(jsig.size()) != m)
      throw std::invalid_argument("model json: sigma must have m rows");
    std::vector<std::complex<double>> sig(std::size_t(m) * m);
    for (int i = 0; i < m; ++i) {
      const auto& row = jsig[i];
      if (!row.is_array() || int(row.size()) != m)
        throw std::invalid_argument("model json: sigma rows must have m entries");
      for (int j = 0; j < m; ++j) sig[std::size_t(j) * m + i] = json_complex(row[j]);
    }
    std::vector<std::complex<double>> a(m), s(p);
    for (int i = 0; i < m; ++i) a[i] = json_complex(ja[i]);
    for (int i = 0; i < p; ++i) s[i] = json_complex(js[i]);
    return SignalModel(m, n, p, std::move(sig), std::move(a), std::move(s));
  }
  for (const char* key : {"m", "n", "p", "omega"})
    if (!doc.contains(key))
      throw std::invalid_argument("model json: isotropic form needs m, n, p, omega");
  return isotropic(doc.at("m").get<int>(), doc.at("n").get<int>(),
                   doc.at("p").get<int>(), doc.at("omega").get<double>());
}

double sample_lambda_max(const SignalModel& model, Hypothesis hyp, RngStream& rng) {
  const int m = model.m, n = model.n, p = model.p;

  MatrixXcd X(m, p);
  for (int j = 0; j < p; ++j)
    for (int i = 0; i < m; ++i) X(i, j) = rng.complex_gaussian();
  MatrixXcd Z(m, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) Z(i, j) = rng.complex_gaussian();

  if (!model.sigma_is_identity_) {
    MapMat L(model.chol_.data(), m, m);
    X = L.triangularView<Eigen::Lower>() * X;
    Z = L.triangularView<Eigen::Lower>() * Z;
  }
  if (hyp == Hypothesis::H1) {
    MapVec a(model.a_vec.data(), m);
    MapVec s(model.s_vec.data(), p);
    X.noalias() += a * s.transpose();
  }

  MatrixXcd R = MatrixXcd::Zero(m, m);
  R.selfadjointView<Eigen::Lower>().rankUpdate(X, 1.0 / p);
  MatrixXcd S = MatrixXcd::Zero(m, m);
  S.selfadjointView<Eigen::Lower>().rankUpdate(Z, 1.0 / n);
  const MatrixXcd Rf = R.selfadjointView<Eigen::Lower>();
  const MatrixXcd Sf = S.selfadjointView<Eigen::Lower>();

  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXcd> es(
      Rf, Sf, Eigen::EigenvaluesOnly | Eigen::Ax_lBx);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("sample_lambda_max: generalized eigensolver failed");
  return es.eigenvalues().maxCoeff();
}

EmpiricalCdf empirical_cdf(const SignalModel& model, Hypothesis hyp, int trials,
                           std::uint64_t seed) {
  if (trials < 100)
    throw std::invalid_argument("empirical_cdf: fewer than 100 trials is meaningless");

  std::vector<double> samples(trials);
  const auto run_range = [&](int lo, int hi) {
    for (int tr = lo; tr < hi; ++tr) {
      RngStream rng = RngStream::for_trial(
          seed, std::uint64_t(tr) * 2 + (hyp == Hypothesis::H1 ? 1 : 0));
      samples[tr] = sample_lambda_max(model, hyp, rng);
    }
  };

  const int workers = std::min(worker_count(), trials);
  if (workers == 1) {
    run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int lo = int(std::int64_t(trials) * w / workers);
      const int hi = int(std::int64_t(trials) * (w + 1) / workers);
      pool.emplace_back([&, lo, hi, w] {
        try {
          run_range(lo, hi);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  std::sort(samples.begin(), samples.end());
  return {std::move(samples), seed, trials};
}

double EmpiricalCdf::eval(double x) const {
  const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), x);
  return double(it - sorted_samples.begin()) / trials;
}

RocCurve empirical_roc(const SignalModel& model, int trials,
                       const std::vector<double>& pf_grid, std::uint64_t seed) {
  if (pf_grid.empty()) throw std::invalid_argument("empirical_roc: empty pf grid");
  double prev = 0.0;
  for (double pf : pf_grid) {
    if (!(pf > prev) || !(pf < 1.0))
      throw std::invalid_argument("empirical_roc: pf grid must be strictly increasing in (0,1)");
    prev = pf;
  }

  const EmpiricalCdf h0 = empirical_cdf(model, Hypothesis::H0, trials, seed);
  const EmpiricalCdf h1 = empirical_cdf(model, Hypothesis::H1, trials, seed);

  RocCurve curve{{}, ModelDims(model.m, model.n, model.p), model.omega()};
  curve.points.reserve(pf_grid.size());
  for (double pf : pf_grid) {
    int k = int(std::ceil((1.0 - pf) * trials));
    k = std::clamp(k, 1, trials);
    const double thr = h0.sorted_samples[k - 1];
    const auto it = std::upper_bound(h1.sorted_samples.begin(),
                                     h1.sorted_samples.end(), thr);
    const double pd = double(h1.sorted_samples.end() - it) / trials;
    curve.points.push_back({pf, pd, thr});
  }
  return curve;
}

}  // namespace royroot
