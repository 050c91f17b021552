#pragma once

#include <charconv>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "json.hpp"

#include "seedwave/construct.hpp"
#include "seedwave/errors.hpp"
#include "seedwave/moments.hpp"
#include "seedwave/seed_sequence.hpp"
#include "seedwave/transform.hpp"

namespace seedwave {

/// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw IoError("failed to format double");
  return std::string(buf, ptr);
}

inline nlohmann::json seed_to_json(const SeedSequence& seq) {
  return nlohmann::json{{"values", seq.values()}, {"delta", seq.delta()}, {"t0", seq.t0()}};
}

inline SeedSequence seed_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("values") || !j.contains("delta") || !j.contains("t0")) {
    throw IoError("seed JSON must be an object with keys: values, delta, t0");
  }
  std::vector<double> values;
  try {
    values = j.at("values").get<std::vector<double>>();
    return SeedSequence(std::move(values), j.at("delta").get<double>(),
                        j.at("t0").get<double>());
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed seed JSON: ") + e.what());
  }
}

inline nlohmann::json moment_report_to_json(const MomentReport& report) {
  return nlohmann::json{{"moments", report.moments},
                        {"vanishing_order", report.vanishing_order},
                        {"tolerance", report.tolerance}};
}

inline nlohmann::json construction_system_to_json(const ConstructionSystem& sys) {
  return nlohmann::json{{"p", sys.nodes.size()},
                        {"M", sys.M.data()},  // row-major
                        {"c", sys.c},
                        {"x", sys.x},
                        {"nodes", sys.nodes},
                        {"wing", sys.wing},
                        {"condition_estimate", sys.condition_estimate}};
}

/// CSV with header "t,psi", one row per grid point, round-trip precision.
inline std::string wavelet_grid_csv(std::span<const std::pair<double, double>> grid) {
  std::string out = "t,psi\n";
  for (const auto& [t, psi] : grid) {
    out += format_double(t);
    out += ',';
    out += format_double(psi);
    out += '\n';
  }
  return out;
}

/// CSV with header "omega,re,im,abs".
inline std::string spectrum_csv(
    std::span<const std::pair<double, std::complex<double>>> samples) {
  std::string out = "omega,re,im,abs\n";
  for (const auto& [omega, f] : samples) {
    out += format_double(omega);
    out += ',';
    out += format_double(f.real());
    out += ',';
    out += format_double(f.imag());
    out += ',';
    out += format_double(std::abs(f));
    out += '\n';
  }
  return out;
}

/// Header row of shifts (first cell "scale"), first column scales, body
/// coefficients.
inline std::string cwt_grid_csv(const CwtGrid& grid) {
  std::string out = "scale";
  for (double b : grid.shifts) {
    out += ',';
    out += format_double(b);
  }
  out += '\n';
  for (std::size_t i = 0; i < grid.scales.size(); ++i) {
    out += format_double(grid.scales[i]);
    for (std::size_t j = 0; j < grid.shifts.size(); ++j) {
      out += ',';
      out += format_double(grid.coefficients(i, j));
    }
    out += '\n';
  }
  return out;
}

/// Write via a temp file in the same directory plus rename, so readers never
/// observe a partial file.
inline void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  const auto dir = path.parent_path();
  if (!dir.empty()) {
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  }
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + tmp + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw IoError("short write to " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename " + tmp + " to " + path.string() + ": " + ec.message());
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline SeedSequence load_seed(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
  return seed_from_json(j);
}

/// Signal CSV: one sample per line; a leading non-numeric header line is
/// skipped; blank lines ignored.
inline std::vector<double> read_signal_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path.string());
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    double v = 0.0;
    const char* begin = line.data();
    const char* end = begin + line.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
      if (lineno == 1) continue;  // header
      throw IoError("bad number on line " + std::to_string(lineno) + " of " + path.string());
    }
    out.push_back(v);
  }
  if (out.empty()) throw IoError("no samples in " + path.string());
  return out;
}

}  // namespace seedwave
