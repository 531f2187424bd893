#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isoact/json_io.hpp"

namespace isoact {

struct Row {
  std::string id;
  std::string inputs;  // digest of the inputs
  json values;
  double residual = 0;
  double tolerance = 0;
  std::string verdict;  // pass | fail | unresolved
};

struct Summary {
  int pass = 0, fail = 0, unresolved = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct Report {
  std::string suite;
  json config;
  std::string config_digest;
  std::vector<Row> rows;

  Summary summary() const;
  double max_residual() const;  // over pass and fail rows
};

std::string digest(const json& j);  // FNV-1a 64 of the canonical dump, hex
std::string verdict_for(double residual, double tolerance);
Row make_row(std::string id, const json& inputs, json values, double residual, double tolerance);

json report_to_json(const Report& r);
Report report_from_json(const json& j);  // throws InvalidEncoding
std::string report_to_csv(const Report& r);
std::string format_double(double x);  // shortest round-trip form

// "-" writes to stdout.  Throws IoError.
void emit_report(const Report& r, const std::string& format, const std::string& path);

}  // namespace isoact
