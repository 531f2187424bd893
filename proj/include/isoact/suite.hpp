#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "isoact/report.hpp"

namespace isoact {

struct SuiteConfig {
  std::string suite;
  std::string mode = "exact";  // exact | float
  std::uint64_t seed = 42;
  int trials = 0;      // 0: the suite's default
  double tol = 0;      // 0: the suite's default
  json params = json::object();

  json to_json() const;
  // Unknown keys, tol <= 0, trials < 1 and bad modes raise ConfigError naming the key.
  static SuiteConfig from_json(const json& j);
};

// Values in `over` replace those in `base`; params merge key by key.
json merge_config(const json& base, const json& over);

struct SuiteContext {
  SuiteConfig cfg;
  int trials;
  double tol;
  json params;  // defaults filled in

  std::mt19937_64 rng(std::uint64_t counter) const;
  long integer(const std::string& key) const;
  double real(const std::string& key) const;
  std::string text(const std::string& key) const;
};

struct SuiteInfo {
  std::string name;
  int criterion;
  std::string summary;
  int default_trials;
  double default_tol;
  json default_params;
  std::function<std::vector<Row>(const SuiteContext&)> run;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& find_suite(const std::string& name);  // throws ConfigError

// Rows sorted by id; deterministic in (suite, seed, params, mode).
Report run_suite(const SuiteConfig& cfg);

// ISOACT_THREADS caps the worker count.
int worker_count(int jobs);
// Runs job(i) for i < count on the worker pool.  Library errors of the
// unresolvable kinds become unresolved rows, anything else a failing row.
std::vector<Row> parallel_rows(int count, const std::function<Row(int)>& job, const std::function<std::string(int)>& id);

}  // namespace isoact
