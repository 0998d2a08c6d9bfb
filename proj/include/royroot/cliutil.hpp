#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace royroot {

inline constexpr const char* kLibraryVersion = "1.0.0";

// "start:stop:count" with inclusive endpoints, linearly spaced; count == 1
// requires start == stop.
std::vector<double> parse_grid(const std::string& text);

// Logit-spaced points strictly inside (0,1), endpoints included.
std::vector<double> logit_grid(double lo, double hi, int count);

// Full-precision decimal (17 significant digits) so CSV round-trips bitwise.
std::string format_full(double v);

std::string csv_row(const std::vector<double>& values);

// Reproduction manifest written next to every file output.
std::string manifest_json(const std::string& command,
                          const std::vector<std::pair<std::string, std::string>>& params,
                          std::uint64_t seed, const std::vector<std::string>& outputs);

}  // namespace royroot
