#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "check.hpp"
#include "isoact/suite.hpp"

using namespace isoact;

namespace {

Report sample_report() {
  Report r;
  r.suite = "sample";
  r.config = {{"suite", "sample"}, {"seed", 7}};
  r.config_digest = digest(r.config);
  r.rows.push_back(make_row("a", json{{"x", 1}}, json{{"v", 0.1}}, 1e-12, 1e-9));
  r.rows.push_back(make_row("b", json{{"x", 2}}, json{{"v", "1/3"}}, 0.5, 1e-9));
  r.rows.push_back(Row{"c", "", json{{"error", "guard"}}, std::nan(""), 0, "unresolved"});
  r.rows.push_back(make_row("d", json{{"x", 3}}, json::object(), 1.0 / 3.0, 1));
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int csv_lines(const std::string& s) {
  // quoted fields never hold newlines: values are dumped compactly
  int n = 0;
  for (char c : s) n += c == '\n';
  return n - 1;
}

SuiteConfig cfg(const json& j) { return SuiteConfig::from_json(j); }

}  // namespace

TEST_CASE("summary tallies the rows") {
  Report r = sample_report();
  CHECK(r.summary() == Summary{2, 1, 1});
  CHECK(r.max_residual() == 0.5);
  CHECK(verdict_for(std::nan(""), 1) == "fail");
  CHECK(verdict_for(0, 0) == "pass");
}

TEST_CASE("json round trip") {
  Report r = sample_report();
  json j = report_to_json(r);
  Report back = report_from_json(json::parse(j.dump()));
  REQUIRE(back.rows.size() == r.rows.size());
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    CHECK(back.rows[i].id == r.rows[i].id);
    CHECK(back.rows[i].inputs == r.rows[i].inputs);
    CHECK(back.rows[i].values == r.rows[i].values);
    CHECK(back.rows[i].verdict == r.rows[i].verdict);
    if (std::isnan(r.rows[i].residual))
      CHECK(std::isnan(back.rows[i].residual));
    else
      CHECK(back.rows[i].residual == r.rows[i].residual);
  }
  CHECK(report_to_json(back).dump() == j.dump());
  json bad = j;
  bad["summary"]["pass"] = 3;
  CHECK_ERRC(report_from_json(bad), Errc::invalid_encoding);
  CHECK_ERRC(report_from_json(json{{"suite", "x"}}), Errc::invalid_encoding);
}

TEST_CASE("csv and json agree on row count") {
  Report r = sample_report();
  CHECK(csv_lines(report_to_csv(r)) == static_cast<int>(report_to_json(r)["rows"].size()));
  Report empty;
  empty.suite = "empty";
  empty.config = json::object();
  empty.config_digest = digest(empty.config);
  CHECK(csv_lines(report_to_csv(empty)) == 0);
  json j = report_to_json(empty);
  CHECK(j["rows"].empty());
  CHECK(report_from_json(j).rows.empty());
}

TEST_CASE("float formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 5e-324, 123456789.125, -2.5}) {
    std::string s = format_double(x);
    double y = 0;
    std::from_chars(s.data(), s.data() + s.size(), y);
    CHECK(y == x);
  }
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(format_double(-INFINITY) == "-inf");
}

TEST_CASE("emit_report writes files and reports bad paths") {
  auto dir = std::filesystem::temp_directory_path() / "isoact_test_cli";
  std::filesystem::create_directories(dir);
  Report r = sample_report();
  emit_report(r, "json", (dir / "r.json").string());
  emit_report(r, "csv", (dir / "r.csv").string());
  CHECK(report_from_json(json::parse(slurp(dir / "r.json"))).rows.size() == 4);
  CHECK(csv_lines(slurp(dir / "r.csv")) == 4);
  CHECK_ERRC(emit_report(r, "json", (dir / "missing" / "r.json").string()), Errc::io_error);
  CHECK_ERRC(emit_report(r, "xml", (dir / "r.xml").string()), Errc::config_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("config validation names the key") {
  auto message = [](const json& j) {
    try {
      SuiteConfig::from_json(j);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::config_error);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message({{"suite", "fock"}, {"tolerance", 1}}).find("tolerance") != std::string::npos);
  CHECK(message({{"suite", "fock"}, {"tol", 0}}).find("tol") != std::string::npos);
  CHECK(message({{"suite", "fock"}, {"tol", -1e-3}}).find("tol") != std::string::npos);
  CHECK(message({{"suite", "fock"}, {"trials", 0}}).find("trials") != std::string::npos);
  CHECK(message({{"suite", "fock"}, {"mode", "fast"}}).find("mode") != std::string::npos);
  CHECK(message({{"seed", 1}}).find("suite") != std::string::npos);
  CHECK(message({{"suite", "fock"}, {"seed", "x"}}).find("seed") != std::string::npos);
  CHECK_ERRC(run_suite(cfg({{"suite", "no-such-suite"}})), Errc::config_error);
  CHECK_ERRC(run_suite(cfg({{"suite", "fock"}, {"params", {{"bogus", 1}}}})), Errc::config_error);
  CHECK_ERRC(run_suite(cfg({{"suite", "fock"}, {"params", {{"gamma_max", "big"}}}})), Errc::config_error);
  SuiteConfig c = cfg({{"suite", "fock"}, {"seed", 9}, {"params", {{"gamma_max", 0.2}}}});
  CHECK(SuiteConfig::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("flags override the config file") {
  json base{{"suite", "fock"}, {"seed", 1}, {"params", {{"gamma_max", 0.3}, {"shapes", {{1, 6}}}}}};
  json over{{"seed", 5}, {"params", {{"gamma_max", 0.1}}}};
  json m = merge_config(base, over);
  CHECK(m["seed"] == 5);
  CHECK(m["params"]["gamma_max"] == 0.1);
  CHECK(m["params"]["shapes"] == json{{1, 6}});
  CHECK(m["suite"] == "fock");
}

TEST_CASE("registry covers every criterion") {
  std::vector<int> seen;
  for (const SuiteInfo& s : suites()) {
    seen.push_back(s.criterion);
    CHECK(find_suite(s.name).name == s.name);
    CHECK(s.default_trials >= 1);
    CHECK(s.default_tol > 0);
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen.size() == 13);
  CHECK(seen.front() == 1);
  CHECK(seen.back() == 13);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  SuiteConfig c = cfg({{"suite", "sp-tau"}, {"trials", 60}, {"seed", 11}});
  std::string a = report_to_json(run_suite(c)).dump();
  setenv("ISOACT_THREADS", "1", 1);
  std::string b = report_to_json(run_suite(c)).dump();
  unsetenv("ISOACT_THREADS");
  CHECK(a == b);
  CHECK(report_to_csv(run_suite(c)) == report_to_csv(run_suite(c)));
  SuiteConfig d = c;
  d.seed = 12;
  CHECK(report_to_json(run_suite(d)).dump() != a);
}

TEST_CASE("adding trials leaves earlier rows unchanged") {
  Report small = run_suite(cfg({{"suite", "triangle"}, {"trials", 5}}));
  Report big = run_suite(cfg({{"suite", "triangle"}, {"trials", 12}}));
  REQUIRE(big.rows.size() == 12);
  for (std::size_t i = 0; i < small.rows.size(); ++i) {
    CHECK(small.rows[i].id == big.rows[i].id);
    CHECK(small.rows[i].inputs == big.rows[i].inputs);
  }
}

TEST_CASE("tree-identities at n = 2, radius 4") {
  // The definitions satisfy div grad = p Laplacian - I and div = -grad^T; the
  // printed relations are reported and fail.
  Report r = run_suite(cfg({{"suite", "tree-identities"}, {"trials", 20}, {"params", {{"n", {2}}, {"radius", 4}}}}));
  REQUIRE(r.rows.size() == 6);
  for (const Row& x : r.rows) {
    bool corrected = x.id.find("corrected/") != std::string::npos;
    CHECK_MESSAGE(x.verdict == (corrected ? "pass" : "fail"), x.id);
    if (corrected) CHECK(x.residual == 0);
  }
}

TEST_CASE("sp-tau at 1000 trials, seed 42") {
  Report r = run_suite(cfg({{"suite", "sp-tau"}, {"trials", 1000}, {"seed", 42}}));
  CHECK(r.summary().fail == 0);
  CHECK(r.summary().unresolved == 0);
  CHECK(r.max_residual() <= 1e-9);
}

TEST_CASE("unreadable corpus is an io error") {
  CHECK_ERRC(run_suite(cfg({{"suite", "traintrack"}, {"params", {{"corpus", "/nonexistent/tracks"}}}})), Errc::io_error);
}
