// royroot: batch front end for the largest-root distribution library.
// Subcommands: cdf | quantile | roc | asympt | simulate | validate.
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "royroot/asympt.hpp"
#include "royroot/cliutil.hpp"
#include "royroot/exactcdf.hpp"
#include "royroot/matint.hpp"
#include "royroot/mcsim.hpp"
#include "royroot/roc.hpp"
#include "royroot/specfun.hpp"

namespace {

using namespace royroot;

using Params = std::vector<std::pair<std::string, std::string>>;

std::string fmt(double v) { return format_full(v); }

std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void emit(const std::string& content, const std::string& out_path,
          const std::string& command, const Params& params, std::uint64_t seed) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + out_path);
  file << content;
  std::ofstream manifest(out_path + ".manifest.json");
  if (!manifest) throw std::runtime_error("cannot open manifest next to: " + out_path);
  manifest << manifest_json(command, params, seed, {out_path});
}

std::string table_csv(const std::vector<std::string>& columns,
                      const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) out += csv_row(row) + "\n";
  return out;
}

std::string table_json(const std::string& command, const Params& params,
                       std::uint64_t seed, const std::vector<std::string>& columns,
                       const std::vector<std::vector<double>>& rows) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["version"] = kLibraryVersion;
  doc["seed"] = seed;
  nlohmann::json prm = nlohmann::json::object();
  for (const auto& [key, value] : params) prm[key] = value;
  doc["params"] = prm;
  doc["columns"] = columns;
  doc["data"] = rows;
  return doc.dump(2) + "\n";
}

void emit_table(const std::string& format, const std::string& command,
                const Params& params, std::uint64_t seed, const std::string& out_path,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<double>>& rows) {
  emit(format == "json" ? table_json(command, params, seed, columns, rows)
                        : table_csv(columns, rows),
       out_path, command, params, seed);
}

std::vector<double> pf_points(const std::string& text, bool logit) {
  const std::vector<double> linear = parse_grid(text);
  if (!logit) return linear;
  return logit_grid(linear.front(), linear.back(), int(linear.size()));
}

// ---------------------------------------------------------------- cdf

struct CdfArgs {
  int m = 0, n = 0, p = 0;
  double omega = 0.0;
  std::string t_grid;
  bool scaled = false;
  std::string format = "csv", out;
};

void run_cdf(const CdfArgs& a) {
  const ModelDims dims(a.m, a.n, a.p);
  const std::vector<double> ts = parse_grid(a.t_grid);
  std::vector<std::vector<double>> rows;
  rows.reserve(ts.size());
  const double c = double(dims.p) / dims.n;
  for (const double t : ts) {
    double f;
    if (dims.p >= dims.m)
      f = a.scaled ? cdf_test_statistic(dims, a.omega, t)
                   : cdf_lambda_max(dims, a.omega, t);
    else
      f = cdf_singular(dims, a.omega, a.scaled ? c * t : t);
    rows.push_back({t, f});
  }
  const Params params = {{"m", std::to_string(a.m)},     {"n", std::to_string(a.n)},
                         {"p", std::to_string(a.p)},     {"omega", fmt(a.omega)},
                         {"t-grid", a.t_grid},           {"scaled", a.scaled ? "true" : "false"},
                         {"format", a.format}};
  emit_table(a.format, "cdf", params, 0, a.out, {"t", "cdf"}, rows);
}

// ---------------------------------------------------------------- quantile

struct QuantileArgs {
  int m = 0, n = 0, p = 0;
  double omega = 0.0, q = 0.0;
  bool scaled = false;
  std::string format = "csv", out;
};

void run_quantile(const QuantileArgs& a) {
  const ModelDims dims(a.m, a.n, a.p);
  double value;
  if (dims.p >= dims.m) {
    value = quantile(dims, a.omega, a.q, a.scaled);
  } else {
    value = quantile(detail::singular_relabel(dims), a.omega, a.q, false);
    if (a.scaled) value *= double(dims.n) / dims.p;
  }
  const Params params = {{"m", std::to_string(a.m)}, {"n", std::to_string(a.n)},
                         {"p", std::to_string(a.p)}, {"omega", fmt(a.omega)},
                         {"q", fmt(a.q)},            {"scaled", a.scaled ? "true" : "false"},
                         {"format", a.format}};
  if (a.format == "json") {
    nlohmann::json doc;
    doc["command"] = "quantile";
    doc["version"] = kLibraryVersion;
    nlohmann::json prm = nlohmann::json::object();
    for (const auto& [key, v] : params) prm[key] = v;
    doc["params"] = prm;
    doc["value"] = value;
    emit(doc.dump(2) + "\n", a.out, "quantile", params, 0);
  } else {
    emit(fmt(value) + "\n", a.out, "quantile", params, 0);
  }
}

// ---------------------------------------------------------------- roc

struct RocArgs {
  std::string regime = "exact";
  int m = -1;
  int n = -1, p = -1;
  double omega = 0.0;
  double k = 1.0, epsilon = -1.0, gamma_quad = -1.0, c1 = -1.0;
  double m_or_c1 = -1.0, sigma_norm = -1.0, sigma_inv_norm = -1.0;
  std::string pf_grid = "0.01:0.99:99";
  bool logit = false;
  std::string format = "csv", out;
};

void require_flag(bool present, const std::string& what, const std::string& regime) {
  if (!present)
    throw std::invalid_argument(what + " is required for --regime " + regime);
}

void run_roc(const RocArgs& a) {
  const std::vector<double> pfs = pf_points(a.pf_grid, a.logit);
  Params params = {{"regime", a.regime},   {"pf-grid", a.pf_grid},
                   {"logit", a.logit ? "true" : "false"}, {"format", a.format}};
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  rows.reserve(pfs.size());

  if (a.regime == "exact") {
    require_flag(a.m > 0 && a.n > 0 && a.p > 0, "--m/--n/--p", a.regime);
    const ModelDims dims(a.m, a.n, a.p);
    params.insert(params.begin(),
                  {{"m", std::to_string(a.m)},
                   {"n", std::to_string(a.n)},
                   {"p", std::to_string(a.p)},
                   {"omega", fmt(a.omega)}});
    columns = {"pf", "pd", "threshold"};
    if (dims.p >= dims.m) {
      const RocCurve curve = roc_curve(dims, a.omega, pfs);
      for (const RocPoint& pt : curve.points)
        rows.push_back({pt.pf, pt.pd, pt.threshold});
    } else {
      const ModelDims rel = detail::singular_relabel(dims);
      for (const double pf : pfs) {
        const double t_th = quantile(rel, 0.0, 1.0 - pf, false);
        rows.push_back({pf, 1.0 - cdf_lambda_max(rel, a.omega, t_th),
                        t_th * double(dims.n) / dims.p});
      }
    }
  } else if (a.regime == "fixed-m") {
    require_flag(a.m > 0, "--m", a.regime);
    require_flag(a.epsilon >= 0, "--epsilon", a.regime);
    require_flag(a.gamma_quad >= 0, "--gamma-quad", a.regime);
    const ScalingLaw law(a.k, a.epsilon);
    params.insert(params.begin(), {{"m", std::to_string(a.m)},
                                   {"k", fmt(a.k)},
                                   {"epsilon", fmt(a.epsilon)},
                                   {"gamma-quad", fmt(a.gamma_quad)}});
    columns = {"pf", "pd"};
    for (const double pf : pfs)
      rows.push_back({pf, limiting_roc_fixed_m(a.m, law, a.gamma_quad, pf)});
  } else if (a.regime == "highdim") {
    require_flag(a.c1 > 0, "--c1", a.regime);
    require_flag(a.epsilon >= 0, "--epsilon", a.regime);
    require_flag(a.gamma_quad >= 0, "--gamma-quad", a.regime);
    const ScalingLaw law(a.k, a.epsilon);
    params.insert(params.begin(), {{"c1", fmt(a.c1)},
                                   {"k", fmt(a.k)},
                                   {"epsilon", fmt(a.epsilon)},
                                   {"gamma-quad", fmt(a.gamma_quad)}});
    columns = {"pf", "pd"};
    for (const double pf : pfs)
      rows.push_back({pf, limiting_roc_highdim(a.c1, law, a.gamma_quad, pf)});
  } else {  // bounds
    require_flag(a.m_or_c1 > 0, "--m-or-c1", a.regime);
    require_flag(a.sigma_norm > 0, "--sigma-norm", a.regime);
    require_flag(a.sigma_inv_norm > 0, "--sigma-inv-norm", a.regime);
    params.insert(params.begin(), {{"k", fmt(a.k)},
                                   {"m-or-c1", fmt(a.m_or_c1)},
                                   {"sigma-norm", fmt(a.sigma_norm)},
                                   {"sigma-inv-norm", fmt(a.sigma_inv_norm)}});
    columns = {"pf", "pd_lower", "pd_upper"};
    for (const double pf : pfs) {
      const auto [lo, hi] =
          roc_power_bounds(pf, a.k, a.m_or_c1, a.sigma_norm, a.sigma_inv_norm);
      rows.push_back({pf, lo, hi});
    }
  }
  emit_table(a.format, "roc", params, 0, a.out, columns, rows);
}

// ---------------------------------------------------------------- asympt

struct AsymptArgs {
  std::string what;
  double c1 = 0.0, c2 = 0.0, gamma = 0.0;
  int m = -1;
  std::string x_grid, pf_grid = "0.01:0.99:99";
  bool logit = false;
  std::string format = "csv", out;
};

void run_asympt(const AsymptArgs& a) {
  const SpectrumParams params_hd(a.c1, a.c2, a.gamma);
  Params params = {{"what", a.what},   {"c1", fmt(a.c1)},
                   {"c2", fmt(a.c2)},  {"gamma", fmt(a.gamma)},
                   {"format", a.format}};

  if (a.what == "constants") {
    const EdgeConstants edge = edge_constants(params_hd);
    const bool supercritical = a.gamma > edge.gamma_p;
    std::vector<std::string> columns = {"r", "mu", "sigma0", "gamma_p"};
    std::vector<double> row = {edge.r, edge.mu, edge.sigma0, edge.gamma_p};
    if (supercritical) {
      const SpikeConstants spike = spike_constants(params_hd);
      columns.insert(columns.end(), {"xi", "sigma1"});
      row.insert(row.end(), {spike.xi, spike.sigma1});
    }
    emit_table(a.format, "asympt", params, 0, a.out, columns, {row});
    return;
  }

  if (a.m <= 0) throw std::invalid_argument("--m is required for --what " + a.what);
  params.push_back({"m", std::to_string(a.m)});
  std::vector<std::vector<double>> rows;
  if (a.what == "power") {
    params.push_back({"pf-grid", a.pf_grid});
    for (const double pf : pf_points(a.pf_grid, a.logit))
      rows.push_back({pf, asympt_power(params_hd, a.m, pf)});
    emit_table(a.format, "asympt", params, 0, a.out, {"pf", "power"}, rows);
    return;
  }
  if (a.x_grid.empty())
    throw std::invalid_argument("--x-grid is required for --what " + a.what);
  params.push_back({"x-grid", a.x_grid});
  const bool null_law = a.what == "null-cdf";
  for (const double x : parse_grid(a.x_grid))
    rows.push_back({x, null_law ? null_cdf_approx(params_hd, a.m, x)
                                : alt_cdf_approx(params_hd, a.m, x)});
  emit_table(a.format, "asympt", params, 0, a.out, {"x", "cdf"}, rows);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string what;
  std::string config;
  int m = -1, n = -1, p = -1;
  double omega = -1.0;
  std::string hypothesis;  // empty = config value or default h1
  int trials = -1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string pf_grid = "0.05:0.95:19";
  bool logit = false;
  std::string format = "csv", out;
};

void run_simulate(const SimulateArgs& a) {
  const bool inline_model = a.m > 0 || a.n > 0 || a.p > 0 || a.omega >= 0.0;
  if (!a.config.empty() && inline_model)
    throw std::invalid_argument("give --config or inline --m/--n/--p/--omega, not both");
  if (a.config.empty() && !(a.m > 0 && a.n > 0 && a.p > 0 && a.omega >= 0.0))
    throw std::invalid_argument("simulate needs --config, or all of --m/--n/--p/--omega");

  std::string hypothesis = a.hypothesis;
  int trials = a.trials;
  std::uint64_t seed = a.seed;
  bool seed_set = a.seed_given;

  SignalModel model = [&] {
    if (a.config.empty())
      return SignalModel::isotropic(a.m, a.n, a.p, a.omega);
    std::ifstream file(a.config);
    if (!file) throw std::runtime_error("cannot read config file: " + a.config);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    const nlohmann::json doc = nlohmann::json::parse(text);
    if (hypothesis.empty() && doc.contains("hypothesis"))
      hypothesis = doc.at("hypothesis").get<std::string>();
    if (trials < 0 && doc.contains("trials")) trials = doc.at("trials").get<int>();
    if (!seed_set && doc.contains("seed")) {
      seed = doc.at("seed").get<std::uint64_t>();
      seed_set = true;
    }
    return SignalModel::from_json(text);
  }();

  if (hypothesis.empty()) hypothesis = "h1";
  if (trials < 0) trials = 10000;
  const Hypothesis hyp = hypothesis == "h0" ? Hypothesis::H0 : Hypothesis::H1;

  Params params = {{"what", a.what},
                   {"m", std::to_string(model.m)},
                   {"n", std::to_string(model.n)},
                   {"p", std::to_string(model.p)},
                   {"omega", fmt(model.omega())},
                   {"hypothesis", hypothesis},
                   {"trials", std::to_string(trials)},
                   {"format", a.format}};
  if (!a.config.empty()) params.push_back({"config", a.config});

  if (a.what == "roc") {
    params.push_back({"pf-grid", a.pf_grid});
    const RocCurve curve =
        empirical_roc(model, trials, pf_points(a.pf_grid, a.logit), seed);
    std::vector<std::vector<double>> rows;
    for (const RocPoint& pt : curve.points)
      rows.push_back({pt.pf, pt.pd, pt.threshold});
    emit_table(a.format, "simulate", params, seed, a.out, {"pf", "pd", "threshold"}, rows);
    return;
  }

  const EmpiricalCdf cdf = empirical_cdf(model, hyp, trials, seed);
  std::vector<std::vector<double>> rows;
  rows.reserve(cdf.sorted_samples.size());
  if (a.what == "samples") {
    for (const double s : cdf.sorted_samples) rows.push_back({s});
    emit_table(a.format, "simulate", params, seed, a.out, {"lambda_hat"}, rows);
  } else {  // cdf
    const double inv = 1.0 / trials;
    for (std::size_t i = 0; i < cdf.sorted_samples.size(); ++i)
      rows.push_back({cdf.sorted_samples[i], double(i + 1) * inv});
    emit_table(a.format, "simulate", params, seed, a.out, {"lambda_hat", "cdf"}, rows);
  }
}

// ---------------------------------------------------------------- validate

struct ValidateReport {
  int checks = 0;
  int failures = 0;

  void note(const std::string& name, bool ok, const std::string& detail) {
    ++checks;
    if (!ok) ++failures;
    std::cout << (ok ? "[ok] " : "[FAIL] ") << name << ": " << detail << "\n";
  }

  void bound(const std::string& name, double worst, double limit) {
    note(name, worst < limit, "max err " + fmt3(worst) + " (limit " + fmt3(limit) + ")");
  }
};

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i)
    out[i] = lo * std::pow(hi / lo, double(i) / (count - 1));
  return out;
}

void suite_identities(ValidateReport& report) {
  const std::vector<double> ts = log_spaced(0.2, 30.0, 12);

  double worst = 0.0;
  for (const ModelDims& dims : {ModelDims(3, 6, 8), ModelDims(5, 7, 11)})
    for (const double t : ts) {
      const double b = cdf_central(dims, t);
      if (b < 1e-280) continue;
      worst = std::max(worst, std::abs(cdf_lambda_max(dims, 0.0, t) - b) / b);
    }
  report.bound("central degeneration", worst, 1e-10);

  worst = 0.0;
  for (const auto& [dims, omega] :
       {std::pair{ModelDims(4, 4, 9), 1.7}, std::pair{ModelDims(2, 2, 5), 3.0}})
    for (const double t : ts) {
      const double b = cdf_alpha0(dims.m, dims.p - dims.m, omega, t);
      if (b < 1e-280) continue;
      worst = std::max(worst, std::abs(cdf_lambda_max(dims, omega, t) - b) / b);
    }
  report.bound("rank-zero degeneration", worst, 1e-10);

  worst = 0.0;
  const struct {
    int m, alpha, beta;
    double omega_a, z;
  } series_cases[] = {{2, 1, 2, 2.5, 0.3},
                      {3, 2, 1, 2.5, 0.5},
                      {1, 0, 3, 5.0, 0.4},
                      {2, 3, 4, 1.0, 0.6}};
  for (const auto& c : series_cases) {
    const ModelDims dims(c.m, c.m + c.alpha, c.m + c.beta);
    worst = std::max(worst, series_consistency_residual(dims, c.omega_a, c.z, 60));
  }
  report.bound("series consistency", worst, 1e-8);

  worst = 0.0;
  const ModelDims sq(4, 4, 7);
  for (const double pf : {0.05, 0.2, 0.5, 0.8}) {
    const double thr = quantile(sq, 0.0, 1.0 - pf, true);
    const double pd = 1.0 - cdf_test_statistic(sq, 2.0, thr);
    worst = std::max(worst, std::abs(roc_alpha0_closed(4, 3, 2.0, pf) - pd));
  }
  report.bound("closed-form roc vs quantile path", worst, 1e-9);

  worst = 0.0;
  const ModelDims qd(5, 8, 10);
  for (const double omega : {0.0, 2.0})
    for (const double q : {0.01, 0.5, 0.99})
      worst = std::max(
          worst, std::abs(cdf_lambda_max(qd, omega, quantile(qd, omega, q)) - q));
  report.bound("quantile roundtrip", worst, 1e-9);

  const ModelDims sing(5, 8, 3);
  const ModelDims rel = detail::singular_relabel(sing);
  const ModelDims back = detail::singular_relabel(rel);
  bool ok = back.m == sing.m && back.n == sing.n && back.p == sing.p;
  for (const double t : {0.5, 2.0, 8.0})
    ok = ok && cdf_singular(sing, 1.2, t) == cdf_lambda_max(rel, 1.2, t);
  report.note("singular relabeling", ok, "involution and law agreement");

  worst = 0.0;
  for (const double x : {1.0, 5.0, 20.0}) {
    worst = std::max(worst, std::abs(limiting_scaled_cdf(0.5, x, LimitRegime::tau, 3.0) -
                                     std::exp(-2.0 / x)));
    worst = std::max(worst, std::abs(limiting_scaled_cdf(0.5, x, LimitRegime::phi, 1.0) -
                                     std::exp(-6.0 / x)));
  }
  report.bound("scaled-limit closed forms", worst, 1e-15);

  const SpectrumParams hd(0.25, 0.5, 5.0);
  const SpikeConstants spike = spike_constants(hd);
  const EdgeConstants edge = edge_constants(hd);
  report.note("spike location rational point", spike.xi == 15.75 && spike.xi > edge.mu,
              "xi(0.25, 0.5, 5) = " + fmt(spike.xi));

  worst = 0.0;
  for (const double q : {0.05, 0.5, 0.95})
    worst = std::max(worst, std::abs(tw2_cdf(tw2_quantile(q)) - q));
  report.bound("tw quantile roundtrip", worst, 1e-9);

  const MatIntParams collapse(2, 1, 0, 2, 1.0, 0.5);
  const double z1 = zeta(1, collapse);
  report.note("integral first-column collapse",
              std::abs(z1 - 30.0) < 1e-10 * 30.0 && zeta(2, collapse) == 0.0 &&
                  zeta(3, collapse) == 0.0,
              "zeta_1 = " + fmt(z1));
}

void suite_tw(ValidateReport& report) {
  int violations = 0;
  double prev = tw2_cdf(-12.0);
  for (double s = -11.95; s <= 7.0; s += 0.05) {
    const double cur = tw2_cdf(s);
    if (!(cur > prev)) ++violations;
    prev = cur;
  }
  report.note("tw cdf strictly increasing", violations == 0,
              std::to_string(violations) + " violations on [-12, 7]");

  const std::pair<double, double> anchors[] = {{-5.0, 2.135996995466e-05},
                                               {-3.0, 8.031955294183e-02},
                                               {0.0, 9.693728283554e-01},
                                               {2.0, 9.998875536983e-01}};
  double worst = 0.0;
  for (const auto& [s, f] : anchors) worst = std::max(worst, std::abs(tw2_cdf(s) - f));
  report.bound("tw anchor values", worst, 1e-6);

  worst = 0.0;
  for (const double q : {1e-6, 1e-3, 0.01, 0.1, 0.5, 0.9, 0.99, 0.999, 1 - 1e-9})
    worst = std::max(worst, std::abs(tw2_cdf(tw2_quantile(q)) - q));
  report.bound("tw quantile roundtrip (wide)", worst, 1e-8);

  // moments by tail integration of the cdf
  const double h = 0.005;
  double mean = 0.0, second = 0.0;
  for (double s = -12.0; s < 0.0; s += h) {
    const double f = 0.5 * (tw2_cdf(s) + tw2_cdf(s + h));
    mean -= f * h;
    second -= 2.0 * (s + 0.5 * h) * f * h;
  }
  for (double s = 0.0; s < 8.0; s += h) {
    const double g = 1.0 - 0.5 * (tw2_cdf(s) + tw2_cdf(s + h));
    mean += g * h;
    second += 2.0 * (s + 0.5 * h) * g * h;
  }
  const double var = second - mean * mean;
  report.note("tw moments", std::abs(mean + 1.771087) < 5e-4 && std::abs(var - 0.813228) < 5e-4,
              "mean " + fmt3(mean) + ", var " + fmt3(var));
}

void suite_mc(ValidateReport& report, std::uint64_t seed) {
  {
    const SignalModel one = SignalModel::isotropic(1, 1, 1, 0.0);
    const EmpiricalCdf emp = empirical_cdf(one, Hypothesis::H0, 5000, seed);
    double worst = 0.0;
    for (double q = 0.02; q < 0.99; q += 0.04)
      worst = std::max(worst, std::abs(emp.eval(q / (1.0 - q)) - q));
    report.bound("scalar f-law (dkw)", worst, 0.0232);
  }
  {
    const ModelDims dims(2, 4, 5);
    const SignalModel model = SignalModel::isotropic(2, 4, 5, 2.0);
    const EmpiricalCdf emp = empirical_cdf(model, Hypothesis::H1, 5000, seed + 1);
    double worst = 0.0;
    for (int k = 333; k < 5000; k += 333) {
      const double x = emp.sorted_samples[k];
      worst = std::max(worst, std::abs(emp.eval(x) - cdf_test_statistic(dims, 2.0, x)));
    }
    report.bound("exact cdf vs monte carlo (dkw)", worst, 0.0232);
  }
  {
    using C = std::complex<double>;
    const int trials = 4000;
    std::vector<C> ar(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        ar[std::size_t(j) * 3 + i] = C(std::pow(0.5, std::abs(i - j)), 0.0);
    const std::vector<C> a = {C(1, 0), C(0, 0), C(0, 0)};
    const std::vector<C> s(7, C(0, 0));
    const SignalModel corr(3, 6, 7, ar, a, s);
    const SignalModel iso = SignalModel::isotropic(3, 6, 7, 0.0);
    const EmpiricalCdf e1 = empirical_cdf(corr, Hypothesis::H0, trials, seed + 2);
    const EmpiricalCdf e2 = empirical_cdf(iso, Hypothesis::H0, trials, seed + 3);
    std::size_t i = 0, j = 0;
    double ks = 0.0;
    while (i < e1.sorted_samples.size() && j < e2.sorted_samples.size()) {
      if (e1.sorted_samples[i] <= e2.sorted_samples[j])
        ++i;
      else
        ++j;
      ks = std::max(ks, std::abs(double(i) / trials - double(j) / trials));
    }
    const double crit = std::sqrt(-0.5 * std::log(0.005)) * std::sqrt(2.0 / trials);
    report.bound("noise-shape invariance (ks)", ks, crit);
  }
  {
    const ModelDims dims(3, 6, 2);
    const SignalModel model = SignalModel::isotropic(3, 6, 2, 1.0);
    const EmpiricalCdf emp = empirical_cdf(model, Hypothesis::H1, 4000, seed + 4);
    const double c = double(dims.p) / dims.n;
    double worst = 0.0;
    for (int k = 300; k < 4000; k += 300) {
      const double x = emp.sorted_samples[k];
      worst = std::max(worst, std::abs(emp.eval(x) - cdf_singular(dims, 1.0, c * x)));
    }
    report.bound("singular branch (dkw)", worst, 0.026);
  }
}

int run_validate(const std::string& suite, std::uint64_t seed) {
  ValidateReport report;
  if (suite == "all" || suite == "identities") suite_identities(report);
  if (suite == "all" || suite == "tw") suite_tw(report);
  if (suite == "all" || suite == "mc") suite_mc(report, seed);
  if (report.failures == 0)
    std::cout << "all " << report.checks << " checks passed\n";
  else
    std::cout << report.failures << " of " << report.checks << " checks FAILED\n";
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"largest-root distributions, ROC curves, and Monte Carlo validation "
               "for rank-one signal detection in colored noise"};
  app.require_subcommand(1);
  int exit_code = 0;

  CdfArgs cdf_args;
  CLI::App* cdf_cmd = app.add_subcommand("cdf", "exact CDF of the largest root on a t-grid");
  cdf_cmd->add_option("--m", cdf_args.m, "array dimension")->required();
  cdf_cmd->add_option("--n", cdf_args.n, "noise-only snapshots")->required();
  cdf_cmd->add_option("--p", cdf_args.p, "signal-bearing snapshots")->required();
  cdf_cmd->add_option("--omega", cdf_args.omega, "non-centrality");
  cdf_cmd->add_option("--t-grid", cdf_args.t_grid, "start:stop:count")->required();
  cdf_cmd->add_flag("--scaled", cdf_args.scaled, "grid on the test-statistic scale");
  cdf_cmd->add_option("--format", cdf_args.format)->check(CLI::IsMember({"csv", "json"}));
  cdf_cmd->add_option("--out", cdf_args.out, "output path (manifest written alongside)");
  cdf_cmd->callback([&] { run_cdf(cdf_args); });

  QuantileArgs q_args;
  CLI::App* q_cmd = app.add_subcommand("quantile", "inverse CDF at probability q");
  q_cmd->add_option("--m", q_args.m)->required();
  q_cmd->add_option("--n", q_args.n)->required();
  q_cmd->add_option("--p", q_args.p)->required();
  q_cmd->add_option("--omega", q_args.omega);
  q_cmd->add_option("--q", q_args.q, "probability in (0,1)")->required();
  q_cmd->add_flag("--scaled", q_args.scaled, "result on the test-statistic scale");
  q_cmd->add_option("--format", q_args.format)->check(CLI::IsMember({"csv", "json"}));
  q_cmd->add_option("--out", q_args.out);
  q_cmd->callback([&] { run_quantile(q_args); });

  RocArgs roc_args;
  CLI::App* roc_cmd = app.add_subcommand("roc", "detection-vs-false-alarm curves");
  roc_cmd->add_option("--regime", roc_args.regime)
      ->check(CLI::IsMember({"exact", "fixed-m", "highdim", "bounds"}));
  roc_cmd->add_option("--m", roc_args.m);
  roc_cmd->add_option("--n", roc_args.n);
  roc_cmd->add_option("--p", roc_args.p);
  roc_cmd->add_option("--omega", roc_args.omega);
  roc_cmd->add_option("--k", roc_args.k, "signal-energy scale");
  roc_cmd->add_option("--epsilon", roc_args.epsilon, "signal-energy growth exponent");
  roc_cmd->add_option("--gamma-quad", roc_args.gamma_quad);
  roc_cmd->add_option("--c1", roc_args.c1);
  roc_cmd->add_option("--m-or-c1", roc_args.m_or_c1);
  roc_cmd->add_option("--sigma-norm", roc_args.sigma_norm);
  roc_cmd->add_option("--sigma-inv-norm", roc_args.sigma_inv_norm);
  roc_cmd->add_option("--pf-grid", roc_args.pf_grid, "start:stop:count");
  roc_cmd->add_flag("--logit", roc_args.logit, "logit-spaced pf grid");
  roc_cmd->add_option("--format", roc_args.format)->check(CLI::IsMember({"csv", "json"}));
  roc_cmd->add_option("--out", roc_args.out);
  roc_cmd->callback([&] { run_roc(roc_args); });

  AsymptArgs as_args;
  CLI::App* as_cmd = app.add_subcommand("asympt", "high-dimensional limiting laws");
  as_cmd->add_option("--what", as_args.what)
      ->check(CLI::IsMember({"constants", "null-cdf", "alt-cdf", "power"}))
      ->required();
  as_cmd->add_option("--c1", as_args.c1, "lim m/p")->required();
  as_cmd->add_option("--c2", as_args.c2, "lim m/n")->required();
  as_cmd->add_option("--gamma", as_args.gamma, "snr")->required();
  as_cmd->add_option("--m", as_args.m);
  as_cmd->add_option("--x-grid", as_args.x_grid, "start:stop:count");
  as_cmd->add_option("--pf-grid", as_args.pf_grid);
  as_cmd->add_flag("--logit", as_args.logit);
  as_cmd->add_option("--format", as_args.format)->check(CLI::IsMember({"csv", "json"}));
  as_cmd->add_option("--out", as_args.out);
  as_cmd->callback([&] { run_asympt(as_args); });

  SimulateArgs sim_args;
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Monte Carlo sampling of the largest root");
  sim_cmd->add_option("--what", sim_args.what)
      ->check(CLI::IsMember({"samples", "cdf", "roc"}))
      ->required();
  sim_cmd->add_option("--config", sim_args.config, "JSON model file");
  sim_cmd->add_option("--m", sim_args.m);
  sim_cmd->add_option("--n", sim_args.n);
  sim_cmd->add_option("--p", sim_args.p);
  sim_cmd->add_option("--omega", sim_args.omega);
  sim_cmd->add_option("--hypothesis", sim_args.hypothesis)
      ->check(CLI::IsMember({"h0", "h1"}));
  sim_cmd->add_option("--trials", sim_args.trials);
  CLI::Option* seed_opt = sim_cmd->add_option("--seed", sim_args.seed);
  sim_cmd->add_option("--pf-grid", sim_args.pf_grid);
  sim_cmd->add_flag("--logit", sim_args.logit);
  sim_cmd->add_option("--format", sim_args.format)->check(CLI::IsMember({"csv", "json"}));
  sim_cmd->add_option("--out", sim_args.out);
  sim_cmd->callback([&] {
    sim_args.seed_given = seed_opt->count() > 0;
    run_simulate(sim_args);
  });

  std::string suite = "all";
  std::uint64_t val_seed = 42;
  CLI::App* val_cmd = app.add_subcommand("validate", "run the built-in oracle suites");
  val_cmd->add_option("--suite", suite)->check(CLI::IsMember({"all", "identities", "mc", "tw"}));
  val_cmd->add_option("--seed", val_seed);
  val_cmd->callback([&] { exit_code = run_validate(suite, val_seed); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const numeric_range_error& e) {
    std::cerr << "numeric range: " << e.what()
              << "\nhint: the exact finite-dimensional evaluation left the floating-point "
                 "range; for large dimensions use `asympt` or `roc --regime highdim`\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
