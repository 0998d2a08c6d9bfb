#include "royroot/cliutil.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace royroot {

std::vector<double> parse_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos)
    throw std::invalid_argument("grid: expected start:stop:count");

  double start = 0.0, stop = 0.0;
  long count = 0;
  std::size_t used = 0;
  try {
    start = std::stod(text.substr(0, first), &used);
    if (used != first) throw std::invalid_argument("");
    stop = std::stod(text.substr(first + 1, second - first - 1), &used);
    if (used != second - first - 1) throw std::invalid_argument("");
    count = std::stol(text.substr(second + 1), &used);
    if (used != text.size() - second - 1) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("grid: malformed number in start:stop:count");
  }
  if (!std::isfinite(start) || !std::isfinite(stop))
    throw std::invalid_argument("grid: endpoints must be finite");
  if (count < 1 || count > 10'000'000)
    throw std::invalid_argument("grid: count outside 1..10000000");
  if (count == 1) {
    if (start != stop) throw std::invalid_argument("grid: count 1 needs start == stop");
    return {start};
  }
  if (!(stop > start)) throw std::invalid_argument("grid: stop must exceed start");

  std::vector<double> out(count);
  for (long i = 0; i < count; ++i)
    out[i] = start + (stop - start) * double(i) / double(count - 1);
  out.front() = start;
  out.back() = stop;
  return out;
}

std::vector<double> logit_grid(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi < 1.0) || !(lo < hi))
    throw std::invalid_argument("logit grid: need 0 < lo < hi < 1");
  if (count < 2) throw std::invalid_argument("logit grid: count must be >= 2");
  const double llo = std::log(lo / (1.0 - lo));
  const double lhi = std::log(hi / (1.0 - hi));
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    const double l = llo + (lhi - llo) * double(i) / double(count - 1);
    out[i] = 1.0 / (1.0 + std::exp(-l));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) row += ',';
    row += format_full(values[i]);
  }
  return row;
}

std::string manifest_json(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& params,
                          std::uint64_t seed, const std::vector<std::string>& outputs) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["version"] = kLibraryVersion;
  doc["seed"] = seed;
  std::time_t now = std::time(nullptr);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  doc["timestamp"] = stamp;
  nlohmann::json prm = nlohmann::json::object();
  for (const auto& [key, value] : params) prm[key] = value;
  doc["params"] = prm;
  doc["outputs"] = outputs;
  return doc.dump(2) + "\n";
}

}  // namespace royroot
