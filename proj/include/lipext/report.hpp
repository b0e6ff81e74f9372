#pragma once

#include <map>
#include <string>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

struct ResultRow {
  std::string row;   // what was checked
  std::string kind;  // "bound", "equals", "property"
  double claimed = 0.0;
  double computed = 0.0;
  double margin = 0.0;  // slack left after the check; negative means failed
  bool pass = false;
};

struct RunReport {
  std::string command;
  std::map<std::string, std::string> inputs;  // flat, serialized in key order
  std::vector<ResultRow> results;
  bool pass = false;
  // Wall time is informational only and never serialized, so identical
  // inputs produce byte-identical reports.
  double wall_time_seconds = 0.0;

  bool all_pass() const;
};

// Shortest %.12g rendering; round-trips through parsing unchanged.
std::string format_double(double v);

// Canonical JSON: keys sorted, fixed layout, trailing newline.  Two reports
// with equal content serialize to identical bytes.
std::string to_canonical_json(const RunReport& report);
std::string registry_to_canonical_json(const std::vector<RunReport>& runs);

// CSV with header command,row,claimed,computed,margin,pass.
std::string to_csv(const RunReport& report);
std::string to_csv(const std::vector<RunReport>& runs);

RunReport parse_report(const std::string& text);
std::vector<RunReport> parse_registry(const std::string& text);

// Registry file holding every run as a JSON array, appended in order.
std::vector<RunReport> read_registry(const std::string& path);
void append_run(const std::string& path, const RunReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lipext
