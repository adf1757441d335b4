#pragma once

// Result records and their two serializations: one JSON object per line, or
// an aligned text table. Floats are rounded to 12 significant digits so the
// output is byte-stable.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace zdcert::report {

inline constexpr const char* kSchema = "zdcert.report/1";
inline constexpr const char* kToolVersion = "1.0.0";

struct Record {
  std::string id;
  double value = 0.0;
  std::optional<double> paper_value;
  std::string citation;
  /// published | derived | identity | unverified | plumbing
  std::string tag;
  bool pass = true;
  /// Acceptance criterion this record feeds, 0 for none.
  int criterion = 0;
  std::string note;
};

struct Verdict {
  bool certified = false;
  double c0 = 0.0;
  double theta = 0.0;
  double A = 0.0;
  double exponent = 0.0;
  std::string caveat;
};

struct Report {
  std::string config_echo;
  std::vector<std::string> errata;
  std::vector<Record> records;
  std::optional<Verdict> verdict;

  bool all_pass() const {
    for (const auto& r : records) {
      if (!r.pass) return false;
    }
    return !verdict || verdict->certified;
  }
};

/// Shortest decimal that round-trips the value rounded to 12 significant digits.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double rounded = std::strtod(buf, nullptr);
  for (int p = 1; p < 12; ++p) {
    char shorter[64];
    std::snprintf(shorter, sizeof shorter, "%.*g", p, rounded);
    if (std::strtod(shorter, nullptr) == rounded) return shorter;
  }
  return buf;
}

inline double round12(double v) { return std::isfinite(v) ? std::strtod(format_number(v).c_str(), nullptr) : v; }

inline nlohmann::ordered_json number_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round12(v);
}

inline nlohmann::ordered_json to_json(const Record& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["value"] = number_json(r.value);
  j["paper_value"] = r.paper_value ? number_json(*r.paper_value) : nlohmann::ordered_json(nullptr);
  j["citation"] = r.citation;
  j["tag"] = r.tag;
  j["pass"] = r.pass;
  return j;
}

inline void emit_records(const Report& rep, std::ostream& os) {
  nlohmann::ordered_json head;
  head["schema"] = kSchema;
  head["tool_version"] = kToolVersion;
  head["config"] = rep.config_echo;
  head["errata"] = rep.errata;
  os << head.dump() << '\n';
  for (const auto& r : rep.records) os << to_json(r).dump() << '\n';
  if (rep.verdict) {
    nlohmann::ordered_json v;
    v["id"] = "verdict";
    v["certified"] = rep.verdict->certified;
    v["c0"] = number_json(rep.verdict->c0);
    v["theta"] = number_json(rep.verdict->theta);
    v["A"] = number_json(rep.verdict->A);
    v["exponent"] = number_json(rep.verdict->exponent);
    v["caveat"] = rep.verdict->caveat;
    os << v.dump() << '\n';
  }
}

inline void emit_table(const Report& rep, std::ostream& os) {
  os << "# " << kSchema << "  zdcert " << kToolVersion << '\n';
  if (rep.records.empty() && !rep.verdict) return;
  std::size_t w = 2, wv = 5, wp = 9, wt = 3;
  for (const auto& r : rep.records) {
    w = std::max(w, r.id.size());
    wv = std::max(wv, format_number(r.value).size());
    wp = std::max(wp, r.paper_value ? format_number(*r.paper_value).size() : 1);
    wt = std::max(wt, r.tag.size());
  }
  const auto col = [&os](const std::string& s, std::size_t width) {
    os << std::left << std::setw(static_cast<int>(width + 2)) << s;
  };
  col("id", w);
  col("value", wv);
  col("published", wp);
  col("tag", wt);
  col("pass", 4);
  os << "citation\n";
  for (const auto& r : rep.records) {
    col(r.id, w);
    col(format_number(r.value), wv);
    col(r.paper_value ? format_number(*r.paper_value) : "-", wp);
    col(r.tag, wt);
    col(r.pass ? "yes" : "NO", 4);
    os << r.citation;
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << '\n';
  }
  if (rep.verdict) {
    const auto& v = *rep.verdict;
    os << "\nverdict: " << (v.certified ? "certified" : "NOT certified") << "  c0 = " << format_number(v.c0)
       << "  theta = " << format_number(v.theta) << "  A = " << format_number(v.A)
       << "  exponent = " << format_number(v.exponent) << '\n'
       << "caveat: " << v.caveat << '\n';
  }
  if (!rep.errata.empty()) {
    os << "\nerrata:\n";
    for (const auto& e : rep.errata) os << "  - " << e << '\n';
  }
}

}  // namespace zdcert::report
