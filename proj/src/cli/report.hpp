#pragma once

#include <string>
#include <utility>
#include <vector>

#include "belief/rational.hpp"

#include <json.hpp>

namespace belief::cli {

// Result of one CLI command. Float renderings are always derived from the
// exact rationals; float-native metrics (KL divergences) live in `floats`.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, Rat>> exact;
  std::vector<std::pair<std::string, double>> floats;
  std::vector<std::pair<std::string, std::string>> info;
  std::vector<std::pair<std::string, bool>> checks;
  nlohmann::json sampler;  // {accepted, attempted, frequencies, seed} if any
  double elapsed_ms = 0.0;

  bool pass() const {
    for (const auto& [_, ok] : checks)
      if (!ok) return false;
    return true;
  }
};

std::string format_double(double v);  // 15 significant digits

nlohmann::json report_to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);
std::string report_to_table(const RunReport& r);

}  // namespace belief::cli
