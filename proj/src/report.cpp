#include "lipext/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lipext {

bool RunReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::string format_double(double v) {
  if (!std::isfinite(v)) throw IoError(IoError::Kind::FileError, "nonfinite value in report");
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void write_report_body(std::ostringstream& os, const RunReport& report) {
  os << "{\"command\":\"" << json_escape(report.command) << "\",\"inputs\":{";
  bool first = true;
  for (const auto& [k, v] : report.inputs) {
    if (!first) os << ",";
    first = false;
    os << "\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
  }
  os << "},\"pass\":" << (report.pass ? "true" : "false") << ",\"results\":[";
  for (size_t i = 0; i < report.results.size(); ++i) {
    const ResultRow& r = report.results[i];
    if (i) os << ",";
    os << "{\"claimed\":" << format_double(r.claimed)
       << ",\"computed\":" << format_double(r.computed) << ",\"kind\":\"" << json_escape(r.kind)
       << "\",\"margin\":" << format_double(r.margin)
       << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"row\":\"" << json_escape(r.row)
       << "\"}";
  }
  os << "]}";
}

RunReport report_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw IoError(IoError::Kind::ParseError, "report must be an object");
  RunReport report;
  report.command = j.at("command").get<std::string>();
  if (j.contains("inputs"))
    for (const auto& [k, v] : j.at("inputs").items())
      report.inputs[k] = v.get<std::string>();
  report.pass = j.at("pass").get<bool>();
  for (const auto& row : j.at("results")) {
    ResultRow r;
    r.row = row.at("row").get<std::string>();
    r.kind = row.at("kind").get<std::string>();
    r.claimed = row.at("claimed").get<double>();
    r.computed = row.at("computed").get<double>();
    r.margin = row.at("margin").get<double>();
    r.pass = row.at("pass").get<bool>();
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace

std::string to_canonical_json(const RunReport& report) {
  std::ostringstream os;
  write_report_body(os, report);
  os << "\n";
  return os.str();
}

std::string registry_to_canonical_json(const std::vector<RunReport>& runs) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < runs.size(); ++i) {
    if (i) os << ",";
    write_report_body(os, runs[i]);
  }
  os << "]\n";
  return os.str();
}

namespace {

void write_csv_rows(std::ostringstream& os, const RunReport& report) {
  for (const ResultRow& r : report.results)
    os << report.command << "," << r.row << "," << format_double(r.claimed) << ","
       << format_double(r.computed) << "," << format_double(r.margin) << ","
       << (r.pass ? "true" : "false") << "\n";
}

}  // namespace

std::string to_csv(const RunReport& report) {
  std::ostringstream os;
  os << "command,row,claimed,computed,margin,pass\n";
  write_csv_rows(os, report);
  return os.str();
}

std::string to_csv(const std::vector<RunReport>& runs) {
  std::ostringstream os;
  os << "command,row,claimed,computed,margin,pass\n";
  for (const RunReport& r : runs) write_csv_rows(os, r);
  return os.str();
}

RunReport parse_report(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError(IoError::Kind::ParseError, "invalid report JSON");
  return report_from_json(j);
}

std::vector<RunReport> parse_registry(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError(IoError::Kind::ParseError, "invalid registry JSON");
  if (!j.is_array()) throw IoError(IoError::Kind::ParseError, "registry must be an array");
  std::vector<RunReport> runs;
  for (const auto& item : j) runs.push_back(report_from_json(item));
  return runs;
}

std::vector<RunReport> read_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoError::Kind::NoPriorRun, "no registry at " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

void append_run(const std::string& path, const RunReport& report) {
  std::vector<RunReport> runs;
  if (std::ifstream probe(path); probe) {
    std::ostringstream ss;
    ss << probe.rdbuf();
    runs = parse_registry(ss.str());
  }
  runs.push_back(report);
  write_text_file(path, registry_to_canonical_json(runs));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::FileError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(IoError::Kind::FileError, "cannot write " + path);
  out << content;
  if (!out) throw IoError(IoError::Kind::FileError, "short write to " + path);
}

}  // namespace lipext
