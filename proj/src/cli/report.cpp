#include "cli/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace belief::cli {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

json report_to_json(const RunReport& r) {
  json j;
  j["command"] = r.command;
  json exact = json::object();
  json floats = json::object();
  for (const auto& [name, value] : r.exact) {
    exact[name] = rat_to_string(value);
    floats[name] = format_double(rat_to_double(value));
  }
  for (const auto& [name, value] : r.floats) floats[name] = format_double(value);
  j["exact"] = exact;
  j["float"] = floats;
  if (!r.info.empty()) {
    json info = json::object();
    for (const auto& [name, value] : r.info) info[name] = value;
    j["info"] = info;
  }
  if (!r.checks.empty()) {
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    j["pass"] = r.pass();
  }
  if (!r.sampler.is_null()) j["sampler"] = r.sampler;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.command = j.at("command").get<std::string>();
  if (j.contains("exact"))
    for (const auto& [name, value] : j.at("exact").items())
      r.exact.emplace_back(name, rat_from_string(value.get<std::string>()));
  if (j.contains("float"))
    for (const auto& [name, value] : j.at("float").items()) {
      bool is_exact = false;
      for (const auto& [ename, _] : r.exact)
        if (ename == name) is_exact = true;
      if (!is_exact)
        r.floats.emplace_back(name, std::stod(value.get<std::string>()));
    }
  if (j.contains("info"))
    for (const auto& [name, value] : j.at("info").items())
      r.info.emplace_back(name, value.get<std::string>());
  if (j.contains("checks"))
    for (const auto& [name, value] : j.at("checks").items())
      r.checks.emplace_back(name, value.get<bool>());
  if (j.contains("sampler")) r.sampler = j.at("sampler");
  if (j.contains("elapsed_ms")) r.elapsed_ms = j.at("elapsed_ms").get<double>();
  return r;
}

std::string report_to_table(const RunReport& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  std::size_t width = 8;
  for (const auto& [name, _] : r.exact) width = std::max(width, name.size());
  for (const auto& [name, _] : r.floats) width = std::max(width, name.size());
  for (const auto& [name, _] : r.checks) width = std::max(width, name.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width - s.size() + 2, ' ');
  };
  for (const auto& [name, value] : r.exact)
    out << "  " << pad(name) << rat_to_string(value) << "  ("
        << format_double(rat_to_double(value)) << ")\n";
  for (const auto& [name, value] : r.floats)
    out << "  " << pad(name) << format_double(value) << "\n";
  for (const auto& [name, ok] : r.checks)
    out << "  " << pad(name) << (ok ? "pass" : "FAIL") << "\n";
  for (const auto& [name, value] : r.info)
    out << "  " << pad(name) << value << "\n";
  if (!r.sampler.is_null())
    out << "  " << pad("sampler") << r.sampler.dump() << "\n";
  out << "  " << pad("elapsed") << format_double(r.elapsed_ms) << " ms\n";
  return out.str();
}

}  // namespace belief::cli
