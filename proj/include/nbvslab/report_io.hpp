#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace nbvslab {

/// One report line. `params` is a semicolon-separated key=value string so
/// a row never needs CSV quoting.
struct ReportRow {
  std::string check_id;
  std::string family;
  std::string params;
  double scale = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  std::string verdict;
};

inline constexpr const char* kReportHeader = "check_id,family,params,scale,lhs,rhs,ratio,verdict";

/// 12 significant digits; infinities spelled out so CSV and JSON agree.
inline std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline double parse_number(const std::string& s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::stod(s);
}

namespace detail {

inline std::string csv_safe(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    if (c == ',' || c == '\n' || c == '"') c = ';';
  return out;
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

inline void write_csv(std::ostream& os, std::span<const ReportRow> rows) {
  os << kReportHeader << "\n";
  for (const auto& r : rows) {
    os << detail::csv_safe(r.check_id) << ',' << detail::csv_safe(r.family) << ','
       << detail::csv_safe(r.params) << ',' << format_number(r.scale) << ','
       << format_number(r.lhs) << ',' << format_number(r.rhs) << ',' << format_number(r.ratio)
       << ',' << detail::csv_safe(r.verdict) << "\n";
  }
}

inline void write_json(std::ostream& os, std::span<const ReportRow> rows) {
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const auto num = [](double v) -> std::string {
      if (!std::isfinite(v)) return "\"" + format_number(v) + "\"";
      return format_number(v);
    };
    os << (i == 0 ? "\n" : ",\n");
    os << "  {\"check_id\":\"" << detail::json_escape(r.check_id) << "\",\"family\":\""
       << detail::json_escape(r.family) << "\",\"params\":\"" << detail::json_escape(r.params)
       << "\",\"scale\":" << num(r.scale) << ",\"lhs\":" << num(r.lhs)
       << ",\"rhs\":" << num(r.rhs) << ",\"ratio\":" << num(r.ratio) << ",\"verdict\":\""
       << detail::json_escape(r.verdict) << "\"}";
  }
  os << "\n]\n";
}

inline std::vector<ReportRow> parse_csv(std::istream& is) {
  std::vector<ReportRow> rows;
  std::string line;
  if (!std::getline(is, line)) return rows;
  if (line != kReportHeader) throw std::runtime_error("parse_csv: unexpected header: " + line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 8) throw std::runtime_error("parse_csv: expected 8 fields: " + line);
    ReportRow r;
    r.check_id = fields[0];
    r.family = fields[1];
    r.params = fields[2];
    r.scale = parse_number(fields[3]);
    r.lhs = parse_number(fields[4]);
    r.rhs = parse_number(fields[5]);
    r.ratio = parse_number(fields[6]);
    r.verdict = fields[7];
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace nbvslab
