#include "isoact/suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "isoact/error.hpp"
#include "isoact/rng.hpp"

namespace isoact {

json SuiteConfig::to_json() const {
  json j{{"suite", suite}, {"mode", mode}, {"seed", seed}, {"params", params}};
  // zero means the suite default and is left out
  if (trials > 0) j["trials"] = trials;
  if (tol > 0) j["tol"] = tol;
  return j;
}

SuiteConfig SuiteConfig::from_json(const json& j) {
  if (!j.is_object()) fail(Errc::config_error, "config: expected an object");
  SuiteConfig c;
  for (const auto& [key, v] : j.items()) {
    try {
      if (key == "suite")
        c.suite = v.get<std::string>();
      else if (key == "mode")
        c.mode = v.get<std::string>();
      else if (key == "seed")
        c.seed = v.get<std::uint64_t>();
      else if (key == "trials")
        c.trials = v.get<int>();
      else if (key == "tol")
        c.tol = v.get<double>();
      else if (key == "params") {
        if (!v.is_object()) fail(Errc::config_error, "params: expected an object");
        c.params = v;
      } else
        fail(Errc::config_error, key + ": unknown key");
    } catch (const json::exception& e) {
      fail(Errc::config_error, key + ": " + e.what());
    }
  }
  if (c.suite.empty()) fail(Errc::config_error, "suite: missing");
  if (c.mode != "exact" && c.mode != "float") fail(Errc::config_error, "mode: expected exact or float");
  if (j.contains("tol") && !(c.tol > 0)) fail(Errc::config_error, "tol: must be positive");
  if (j.contains("trials") && c.trials < 1) fail(Errc::config_error, "trials: must be at least 1");
  return c;
}

json merge_config(const json& base, const json& over) {
  json out = base.is_object() ? base : json::object();
  for (const auto& [k, v] : over.items()) {
    if (k == "params" && out.contains("params") && out["params"].is_object() && v.is_object())
      for (const auto& [pk, pv] : v.items()) out["params"][pk] = pv;
    else
      out[k] = v;
  }
  return out;
}

std::mt19937_64 SuiteContext::rng(std::uint64_t counter) const { return trial_rng(cfg.seed, counter); }

long SuiteContext::integer(const std::string& key) const {
  const json& v = params.at(key);
  if (!v.is_number_integer()) fail(Errc::config_error, key + ": expected an integer");
  return v.get<long>();
}

double SuiteContext::real(const std::string& key) const {
  const json& v = params.at(key);
  if (!v.is_number()) fail(Errc::config_error, key + ": expected a number");
  return v.get<double>();
}

std::string SuiteContext::text(const std::string& key) const {
  const json& v = params.at(key);
  if (!v.is_string()) fail(Errc::config_error, key + ": expected a string");
  return v.get<std::string>();
}

const SuiteInfo& find_suite(const std::string& name) {
  for (const SuiteInfo& s : suites())
    if (s.name == name) return s;
  fail(Errc::config_error, "suite: unknown suite '" + name + "'");
}

Report run_suite(const SuiteConfig& cfg) {
  const SuiteInfo& info = find_suite(cfg.suite);
  SuiteContext ctx{cfg, cfg.trials > 0 ? cfg.trials : info.default_trials, cfg.tol > 0 ? cfg.tol : info.default_tol,
                   info.default_params};
  for (const auto& [k, v] : cfg.params.items()) {
    if (!ctx.params.contains(k)) fail(Errc::config_error, "params." + k + ": unknown parameter for " + info.name);
    if (ctx.params[k].type() != v.type() &&
        !(ctx.params[k].is_number() && v.is_number() && !(ctx.params[k].is_number_integer() && !v.is_number_integer())))
      fail(Errc::config_error, "params." + k + ": wrong type");
    ctx.params[k] = v;
  }
  Report r;
  r.suite = info.name;
  SuiteConfig effective = cfg;
  effective.trials = ctx.trials;
  effective.tol = ctx.tol;
  effective.params = ctx.params;
  r.config = effective.to_json();
  r.config_digest = digest(r.config);
  r.rows = info.run(ctx);
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const Row& a, const Row& b) { return a.id < b.id; });
  return r;
}

int worker_count(int jobs) {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (const char* env = std::getenv("ISOACT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1) n = std::min(n, cap);
  }
  return std::max(1, std::min(n, jobs));
}

std::vector<Row> parallel_rows(int count, const std::function<Row(int)>& job, const std::function<std::string(int)>& id) {
  std::vector<Row> rows(count);
  auto one = [&](int i) {
    try {
      rows[i] = job(i);
    } catch (const Error& e) {
      bool soft = e.code() == Errc::branch_guard || e.code() == Errc::unresolvable;
      rows[i] = Row{id(i), "", json{{"error", e.what()}}, std::nan(""), 0, soft ? "unresolved" : "fail"};
    } catch (const std::exception& e) {
      rows[i] = Row{id(i), "", json{{"error", e.what()}}, std::nan(""), 0, "fail"};
    }
  };
  int workers = worker_count(count);
  if (workers == 1) {
    for (int i = 0; i < count; ++i) one(i);
    return rows;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += workers) one(i);
    });
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace isoact
