#include "isoact/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "isoact/error.hpp"

namespace isoact {

namespace {

// JSON has no non-finite numbers; they travel as strings
json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  std::string s = j.get<std::string>();
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  fail(Errc::invalid_encoding, "not a number: " + s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Summary Report::summary() const {
  Summary s;
  for (const Row& r : rows) {
    if (r.verdict == "pass")
      ++s.pass;
    else if (r.verdict == "fail")
      ++s.fail;
    else
      ++s.unresolved;
  }
  return s;
}

double Report::max_residual() const {
  double m = 0;
  for (const Row& r : rows)
    if (r.verdict != "unresolved" && !std::isnan(r.residual)) m = std::max(m, r.residual);
  return m;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string verdict_for(double residual, double tolerance) {
  return !std::isnan(residual) && residual <= tolerance ? "pass" : "fail";
}

Row make_row(std::string id, const json& inputs, json values, double residual, double tolerance) {
  return Row{std::move(id), digest(inputs), std::move(values), residual, tolerance, verdict_for(residual, tolerance)};
}

json report_to_json(const Report& r) {
  json rows = json::array();
  for (const Row& x : r.rows)
    rows.push_back({{"id", x.id},
                    {"inputs", x.inputs},
                    {"values", x.values},
                    {"residual", number(x.residual)},
                    {"tolerance", number(x.tolerance)},
                    {"verdict", x.verdict}});
  Summary s = r.summary();
  return {{"suite", r.suite},
          {"config", r.config},
          {"config_digest", r.config_digest},
          {"rows", rows},
          {"max_residual", number(r.max_residual())},
          {"summary", {{"pass", s.pass}, {"fail", s.fail}, {"unresolved", s.unresolved}}}};
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.suite = j.at("suite").get<std::string>();
    r.config = j.at("config");
    r.config_digest = j.at("config_digest").get<std::string>();
    for (const json& x : j.at("rows"))
      r.rows.push_back(Row{x.at("id").get<std::string>(), x.at("inputs").get<std::string>(), x.at("values"),
                           read_number(x.at("residual")), read_number(x.at("tolerance")),
                           x.at("verdict").get<std::string>()});
    const json& s = j.at("summary");
    Summary want{s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("unresolved").get<int>()};
    if (!(want == r.summary())) fail(Errc::invalid_encoding, "summary does not match the rows");
    return r;
  } catch (const json::exception& e) {
    fail(Errc::invalid_encoding, std::string("report: ") + e.what());
  }
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string report_to_csv(const Report& r) {
  std::string out = "suite,id,inputs,residual,tolerance,verdict,values\n";
  for (const Row& x : r.rows)
    out += csv_field(r.suite) + "," + csv_field(x.id) + "," + x.inputs + "," + format_double(x.residual) + "," +
           format_double(x.tolerance) + "," + x.verdict + "," + csv_field(x.values.dump()) + "\n";
  return out;
}

void emit_report(const Report& r, const std::string& format, const std::string& path) {
  std::string text;
  if (format == "json")
    text = report_to_json(r).dump(2) + "\n";
  else if (format == "csv")
    text = report_to_csv(r);
  else
    fail(Errc::config_error, "format: expected json or csv, got '" + format + "'");
  if (path == "-" || path.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) fail(Errc::io_error, "cannot write to stdout");
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(Errc::io_error, "cannot open " + path);
  f << text;
  f.close();
  if (!f) fail(Errc::io_error, "write to " + path + " failed");
}

}  // namespace isoact
