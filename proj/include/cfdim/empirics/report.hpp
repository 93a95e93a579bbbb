#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfdim/support/summation.hpp"

namespace cfdim::empirics {

using json = nlohmann::ordered_json;

struct Summary {
  std::size_t count = 0;
  double mean = 0, stddev = 0;
  double min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
};

inline Summary summarize(const std::vector<double>& v) {
  Summary s;
  s.count = v.size();
  if (v.empty()) return s;
  compensated_sum<long double> sum;
  for (double x : v) sum += x;
  const long double mean = sum.value() / static_cast<long double>(v.size());
  compensated_sum<long double> sq;
  for (double x : v) sq += (x - mean) * (x - mean);
  s.mean = static_cast<double>(mean);
  s.stddev = v.size() > 1 ? static_cast<double>(std::sqrt(sq.value() / static_cast<long double>(v.size() - 1))) : 0.0;
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  auto q = [&](double p) {
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  s.min = sorted.front();
  s.q25 = q(0.25);
  s.median = q(0.5);
  s.q75 = q(0.75);
  s.max = sorted.back();
  return s;
}

/// Result of one experiment or check. Everything needed to reproduce it is in
/// `config`; serialisation is a pure function of the fields.
struct ExperimentReport {
  std::string name;
  std::string statistic;
  json config = json::object();
  std::vector<double> values;
  Summary summary;
  std::optional<double> target;
  std::optional<double> tolerance;
  std::optional<bool> passed;
  std::uint64_t discarded = 0;
  std::map<std::string, double> metrics;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> notes;
};

inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json number_json(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

inline json to_json(const Summary& s) {
  return json{{"count", s.count}, {"mean", number_json(s.mean)}, {"stddev", number_json(s.stddev)},
              {"min", number_json(s.min)}, {"q25", number_json(s.q25)}, {"median", number_json(s.median)},
              {"q75", number_json(s.q75)}, {"max", number_json(s.max)}};
}

inline json to_json(const ExperimentReport& r, bool include_values = true) {
  json j;
  j["name"] = r.name;
  j["statistic"] = r.statistic;
  j["config"] = r.config;
  j["summary"] = to_json(r.summary);
  j["target"] = r.target ? number_json(*r.target) : json(nullptr);
  j["tolerance"] = r.tolerance ? number_json(*r.tolerance) : json(nullptr);
  j["passed"] = r.passed ? json(*r.passed) : json(nullptr);
  j["discarded"] = r.discarded;
  json m = json::object();
  for (const auto& [k, v] : r.metrics) m[k] = number_json(v);
  j["metrics"] = m;
  if (!r.columns.empty()) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      json o = json::object();
      for (std::size_t c = 0; c < r.columns.size() && c < row.size(); ++c) o[r.columns[c]] = number_json(row[c]);
      rows.push_back(o);
    }
    j["rows"] = rows;
  }
  if (include_values) {
    json v = json::array();
    for (double x : r.values) v.push_back(number_json(x));
    j["values"] = v;
  }
  j["notes"] = r.notes;
  return j;
}

/// '#' metadata lines, then the detail table (or per-sample values).
inline void write_csv(std::ostream& os, const ExperimentReport& r) {
  os << "# name: " << r.name << "\n# statistic: " << r.statistic << "\n";
  os << "# summary: count=" << r.summary.count << " mean=" << format_number(r.summary.mean)
     << " stddev=" << format_number(r.summary.stddev) << " median=" << format_number(r.summary.median) << "\n";
  if (r.target) os << "# target: " << format_number(*r.target) << "\n";
  if (r.tolerance) os << "# tolerance: " << format_number(*r.tolerance) << "\n";
  if (r.passed) os << "# passed: " << (*r.passed ? "true" : "false") << "\n";
  os << "# discarded: " << r.discarded << "\n";
  for (const auto& [k, v] : r.metrics) os << "# metric " << k << ": " << format_number(v) << "\n";
  for (const auto& n : r.notes) os << "# note: " << n << "\n";
  if (!r.columns.empty()) {
    for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << r.columns[c];
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
      os << "\n";
    }
    return;
  }
  os << "sample,value\n";
  for (std::size_t i = 0; i < r.values.size(); ++i) os << i << "," << format_number(r.values[i]) << "\n";
}

}  // namespace cfdim::empirics
