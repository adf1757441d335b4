#pragma once

// Run configuration as flat `key = value` lines with dotted keys. Lines
// starting with '#' are comments. Unknown keys and out-of-range values are
// rejected with ConfigError.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "zdcert/error.hpp"

namespace zdcert::config {

inline constexpr std::string_view kTaskNames[] = {"kernel", "cond2", "density-table", "extremal", "case-analysis"};

struct RunConfig {
  std::vector<std::string> tasks{"kernel", "cond2", "density-table", "extremal", "case-analysis"};

  double cond2_step_a = 0.01;
  double cond2_step_b = 0.01;
  double cond2_step_t = 0.005;
  double cond2_margin = 0.0;
  std::vector<std::string> cond2_regions{"1", "2", "3"};
  int cond2_workers = 0;

  double density_x_min = 0.60;
  double density_x_max = 1.70;
  double density_x_step = 0.01;

  // extremal problem for `extremal solve`; defaults are the Case 1 instance
  double extremal_d0 = 0.631;
  double extremal_x = 0.7;
  double extremal_budget = 2.446666;
  double extremal_B = 25.0 / 7.0;
  double extremal_C = 0.0;
  std::vector<double> extremal_caps;
  int property_samples = 1000;
  unsigned property_seed = 20240601;

  bool cases_sensitivity = false;
  double cases_sensitivity_b1 = 0.08;

  std::string output_path;
  std::string output_format = "table";
  int report_version = 1;

  bool operator==(const RunConfig&) const = default;

  bool has_task(std::string_view t) const { return std::find(tasks.begin(), tasks.end(), t) != tasks.end(); }
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto part = trim(s.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!part.empty()) out.push_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline double parse_double(const std::string& key, std::string_view s) {
  double v = 0.0;
  const auto t = trim(s);
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: " + key + " expects a number, got '" + t + "'");
  }
  return v;
}

inline long parse_int(const std::string& key, std::string_view s) {
  long v = 0;
  const auto t = trim(s);
  const auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || p != t.data() + t.size() || t.empty()) {
    throw ConfigError("config: " + key + " expects an integer, got '" + t + "'");
  }
  return v;
}

inline bool parse_bool(const std::string& key, std::string_view s) {
  const auto t = trim(s);
  if (t == "true") return true;
  if (t == "false") return false;
  throw ConfigError("config: " + key + " expects true or false, got '" + t + "'");
}

/// Comma list of values; `n*v` repeats v n times.
inline std::vector<double> parse_caps(const std::string& key, std::string_view s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) {
    const auto star = item.find('*');
    if (star == std::string::npos) {
      out.push_back(parse_double(key, item));
      continue;
    }
    const long n = parse_int(key, std::string_view(item).substr(0, star));
    if (n < 0 || n > 1'000'000) throw ConfigError("config: " + key + " repeat count out of range");
    out.insert(out.end(), static_cast<std::size_t>(n), parse_double(key, std::string_view(item).substr(star + 1)));
  }
  return out;
}

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError("config: " + msg);
}

inline void validate(const RunConfig& c) {
  for (const auto& t : c.tasks) {
    require(std::find(std::begin(kTaskNames), std::end(kTaskNames), t) != std::end(kTaskNames),
            "unknown task '" + t + "'");
  }
  for (double s : {c.cond2_step_a, c.cond2_step_b, c.cond2_step_t}) require(s > 0.0 && s <= 0.5, "cond2 steps must lie in (0, 0.5]");
  require(c.cond2_margin >= 0.0, "cond2.margin must be non-negative");
  for (const auto& r : c.cond2_regions) require(r == "1" || r == "2" || r == "3" || r == "1w", "unknown cond2 region '" + r + "'");
  require(c.cond2_workers >= 0 && c.cond2_workers <= 256, "cond2.workers must lie in [0, 256]");
  require(c.density_x_min > 0.0 && c.density_x_min <= c.density_x_max && c.density_x_max <= 3.0,
          "density x grid must satisfy 0 < x_min <= x_max <= 3");
  require(c.density_x_step > 0.0, "density.x_step must be positive");
  require(c.extremal_d0 > 0.0 && c.extremal_x > 0.0 && c.extremal_budget >= 0.0, "extremal d0, x must be positive, budget non-negative");
  require(c.property_samples >= 1 && c.property_samples <= 1'000'000, "property.samples must lie in [1, 1e6]");
  require(c.cases_sensitivity_b1 > 0.0 && c.cases_sensitivity_b1 < 1.0, "cases.sensitivity_b1 must lie in (0, 1)");
  require(c.output_format == "table" || c.output_format == "records", "output.format must be table or records");
  require(c.report_version == 1, "report.version must be 1");
}

inline void apply(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "tasks") {
    c.tasks.clear();
    for (const auto& t : split_list(value)) {
      if (t == "all") {
        c.tasks.assign(std::begin(kTaskNames), std::end(kTaskNames));
      } else if (t != "none") {
        c.tasks.push_back(t);
      }
    }
  } else if (key == "cond2.step_a") {
    c.cond2_step_a = parse_double(key, value);
  } else if (key == "cond2.step_b") {
    c.cond2_step_b = parse_double(key, value);
  } else if (key == "cond2.step_t") {
    c.cond2_step_t = parse_double(key, value);
  } else if (key == "cond2.margin") {
    c.cond2_margin = parse_double(key, value);
  } else if (key == "cond2.regions") {
    c.cond2_regions = split_list(value);
  } else if (key == "cond2.workers") {
    c.cond2_workers = static_cast<int>(parse_int(key, value));
  } else if (key == "density.x_min") {
    c.density_x_min = parse_double(key, value);
  } else if (key == "density.x_max") {
    c.density_x_max = parse_double(key, value);
  } else if (key == "density.x_step") {
    c.density_x_step = parse_double(key, value);
  } else if (key == "extremal.d0") {
    c.extremal_d0 = parse_double(key, value);
  } else if (key == "extremal.x") {
    c.extremal_x = parse_double(key, value);
  } else if (key == "extremal.budget") {
    c.extremal_budget = parse_double(key, value);
  } else if (key == "extremal.B") {
    c.extremal_B = parse_double(key, value);
  } else if (key == "extremal.C") {
    c.extremal_C = parse_double(key, value);
  } else if (key == "extremal.caps") {
    c.extremal_caps = parse_caps(key, value);
  } else if (key == "property.samples") {
    c.property_samples = static_cast<int>(parse_int(key, value));
  } else if (key == "property.seed") {
    const long s = parse_int(key, value);
    require(s >= 0 && s <= 0xFFFFFFFFL, "property.seed must fit in 32 bits");
    c.property_seed = static_cast<unsigned>(s);
  } else if (key == "cases.sensitivity") {
    c.cases_sensitivity = parse_bool(key, value);
  } else if (key == "cases.sensitivity_b1") {
    c.cases_sensitivity_b1 = parse_double(key, value);
  } else if (key == "output.path") {
    c.output_path = value;
  } else if (key == "output.format") {
    c.output_format = value;
  } else if (key == "report.version") {
    c.report_version = static_cast<int>(parse_int(key, value));
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

inline RunConfig parse(std::istream& in, RunConfig c = {}) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    apply(c, trim(std::string_view(t).substr(0, eq)), trim(std::string_view(t).substr(eq + 1)));
  }
  validate(c);
  return c;
}

inline RunConfig parse_string(const std::string& text, RunConfig base = {}) {
  std::istringstream in(text);
  return parse(in, std::move(base));
}

inline RunConfig load(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  return parse(in, std::move(base));
}

/// Shortest round-trip decimal, so the echo parses back to the same value.
inline std::string exact(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

inline std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

/// Every key in a fixed order; parsing the echo reproduces the config.
inline std::string echo(const RunConfig& c) {
  std::ostringstream os;
  os << "tasks = " << (c.tasks.empty() ? "none" : join(c.tasks)) << '\n'
     << "cond2.step_a = " << exact(c.cond2_step_a) << '\n'
     << "cond2.step_b = " << exact(c.cond2_step_b) << '\n'
     << "cond2.step_t = " << exact(c.cond2_step_t) << '\n'
     << "cond2.margin = " << exact(c.cond2_margin) << '\n'
     << "cond2.regions = " << join(c.cond2_regions) << '\n'
     << "cond2.workers = " << c.cond2_workers << '\n'
     << "density.x_min = " << exact(c.density_x_min) << '\n'
     << "density.x_max = " << exact(c.density_x_max) << '\n'
     << "density.x_step = " << exact(c.density_x_step) << '\n'
     << "extremal.d0 = " << exact(c.extremal_d0) << '\n'
     << "extremal.x = " << exact(c.extremal_x) << '\n'
     << "extremal.budget = " << exact(c.extremal_budget) << '\n'
     << "extremal.B = " << exact(c.extremal_B) << '\n'
     << "extremal.C = " << exact(c.extremal_C) << '\n'
     << "extremal.caps = ";
  for (std::size_t i = 0; i < c.extremal_caps.size(); ++i) os << (i ? "," : "") << exact(c.extremal_caps[i]);
  os << '\n'
     << "property.samples = " << c.property_samples << '\n'
     << "property.seed = " << c.property_seed << '\n'
     << "cases.sensitivity = " << (c.cases_sensitivity ? "true" : "false") << '\n'
     << "cases.sensitivity_b1 = " << exact(c.cases_sensitivity_b1) << '\n'
     << "output.path = " << c.output_path << '\n'
     << "output.format = " << c.output_format << '\n'
     << "report.version = " << c.report_version << '\n';
  return os.str();
}

}  // namespace zdcert::config
