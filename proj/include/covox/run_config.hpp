#pragma once

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covox/errors.hpp"

namespace covox {

enum class OutputFormat { csv, json };

inline std::string to_string(OutputFormat f) {
  return f == OutputFormat::csv ? "csv" : "json";
}

inline OutputFormat output_format_from_string(const std::string& s) {
  if (s == "csv")
    return OutputFormat::csv;
  if (s == "json")
    return OutputFormat::json;
  throw domain_error("output_format must be csv or json, got '" + s + "'");
}

//! Run-wide settings. grid_extent unset means "choose from the rapidity".
struct RunConfig {
  std::optional<double> grid_extent;
  int grid_count = 801;
  double truncation_tol = 1e-10;
  OutputFormat output_format = OutputFormat::csv;
  std::string output_path;
};

//! Enforces the invariants: extent positive, count odd positive (origin
//! on-grid), tolerance in (0, 1).
inline void validate(const RunConfig& c) {
  if (c.grid_extent) {
    if (!std::isfinite(*c.grid_extent) || *c.grid_extent <= 0.0)
      throw domain_error("grid_extent must be a positive real");
  }
  if (c.grid_count <= 0)
    throw domain_error("grid_count must be positive, got " +
                       std::to_string(c.grid_count));
  if (c.grid_count % 2 == 0)
    throw domain_error("grid_count must be odd so the origin is on-grid, got " +
                       std::to_string(c.grid_count));
  if (!(c.truncation_tol > 0.0) || !(c.truncation_tol < 1.0))
    throw domain_error("truncation_tol must lie in (0, 1)");
}

namespace detail {

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline double parse_real(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size())
      throw domain_error("");
    return v;
  } catch (const std::exception&) {
    throw domain_error("config key '" + key + "': not a number: '" + s + "'");
  }
}

inline int parse_int(const std::string& s, const std::string& key) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size())
      throw domain_error("");
    return v;
  } catch (const std::exception&) {
    throw domain_error("config key '" + key + "': not an integer: '" + s +
                       "'");
  }
}

} // namespace detail

//! Applies one `key = value` assignment; unknown keys are rejected so a
//! typo cannot silently fall back to defaults.
inline void apply_config_entry(RunConfig& c, const std::string& key,
                               const std::string& value) {
  if (key == "grid_extent")
    c.grid_extent = detail::parse_real(value, key);
  else if (key == "grid_count")
    c.grid_count = detail::parse_int(value, key);
  else if (key == "truncation_tol")
    c.truncation_tol = detail::parse_real(value, key);
  else if (key == "output_format")
    c.output_format = output_format_from_string(value);
  else if (key == "output_path")
    c.output_path = value;
  else
    throw domain_error("unknown config key '" + key + "'");
}

//! Reads a TOML-style `key = value` file: one assignment per line, `#`
//! starts a comment, blank lines ignored. Returns defaults overlaid with
//! the file's assignments, validated.
inline RunConfig load_run_config(std::istream& in) {
  RunConfig c;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = detail::trim(line);
    if (line.empty())
      continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config line " + std::to_string(line_no) +
                         ": expected key = value");
    std::string key = detail::trim(line.substr(0, eq));
    std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty())
      throw domain_error("config line " + std::to_string(line_no) +
                         ": empty key");
    apply_config_entry(c, key, value);
  }
  validate(c);
  return c;
}

inline RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw domain_error("cannot open config file '" + path + "'");
  return load_run_config(in);
}

//! Inclusive sweep `start:stop:step`, or a single value. The point count is
//! fixed up front as floor((stop-start)/step + 1/2) + 1 so endpoints within
//! half a step are kept and floating accumulation cannot change the length.
inline std::vector<double> parse_sweep(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1)
    return {detail::parse_real(detail::trim(parts[0]), "sweep")};
  if (parts.size() != 3)
    throw domain_error("sweep must be a value or start:stop:step, got '" +
                       text + "'");
  double start = detail::parse_real(detail::trim(parts[0]), "sweep start");
  double stop = detail::parse_real(detail::trim(parts[1]), "sweep stop");
  double step = detail::parse_real(detail::trim(parts[2]), "sweep step");
  if (step == 0.0 || !std::isfinite(step))
    throw domain_error("sweep step must be nonzero and finite");
  if ((stop - start) * step < 0.0)
    throw domain_error("sweep step direction does not reach stop");
  long long count = static_cast<long long>(
                        std::floor((stop - start) / step + 0.5)) +
                    1;
  if (count < 1 || count > 10000000)
    throw domain_error("sweep point count " + std::to_string(count) +
                       " outside [1, 10^7]");
  std::vector<double> values;
  values.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i)
    values.push_back(start + static_cast<double>(i) * step);
  return values;
}

} // namespace covox
