#include <cmath>
#include <fstream>
#include <random>

#include "check.hpp"
#include "isoact/traintrack.hpp"

using namespace isoact;

namespace {

TrainTrack load(const std::string& name) {
  std::ifstream in(std::string(ISOACT_TEST_DATA) + "/" + name);
  return TrainTrack::from_json(json::parse(in));
}

TrainTrack single_edge(const Rational& s) {
  json j = {{"vertices", {"A", "B"}},
            {"edges", {{{"ends", {"A", "B"}}}}},
            {"cyclic", {{"A", {0}}, {"B", {0}}}},
            {"widths", {{"A:0:+", to_string(s)}, {"A:0:-", to_string(s)}, {"B:0:+", to_string(s)}, {"B:0:-", to_string(s)}}}};
  return TrainTrack::from_json(j);
}

std::vector<Slot> slots(const TrainTrack& tt) {
  std::vector<Slot> out;
  for (const auto& [s, w] : tt.widths) out.push_back(s);
  return out;
}

TrackPoint random_point(std::mt19937_64& rng, const TrainTrack& tt, int denom = 12) {
  auto all = slots(tt);
  Slot s = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  Rational o = tt.width(s) * Rational(std::uniform_int_distribution<int>(0, denom)(rng), denom);
  o.canonicalize();
  return {s, o};
}

}  // namespace

TEST_CASE("validation") {
  CHECK(traintrack_validate(single_edge(Rational(3, 2))).empty());
  CHECK(traintrack_validate(TrainTrack::from_json(json::object())).empty());
  for (const char* name : {"theta.json", "star.json", "path.json"}) {
    auto tt = load(name);
    CHECK(traintrack_validate(tt).empty());
    for (const auto& s : slots(tt)) {
      auto bad = tt;
      bad.widths[s] += 1;
      auto v = traintrack_validate(bad);
      REQUIRE(!v.empty());
      bool names_slot = false;
      for (const auto& x : v) names_slot |= std::find(x.slots.begin(), x.slots.end(), s) != x.slots.end();
      CHECK(names_slot);
    }
    CHECK(TrainTrack::from_json(tt.to_json()).to_json() == tt.to_json());
  }
  auto tt = single_edge(1);
  tt.widths[{0, 0, true}] = 2;
  auto v = traintrack_validate(tt);
  REQUIRE(v.size() >= 1);
  CHECK(v.front().vertex == 0);
  CHECK_ERRC(TrainTrack::from_json(json{{"vertices", {"A"}}, {"edges", {{{"ends", {"A", "Z"}}}}}}), Errc::invalid_encoding);
  CHECK_ERRC(TrainTrack::from_json(json{{"vertices", {"A", "B"}}, {"edges", {{{"ends", {"A", "B"}}}}}, {"widths", {{"A:0:+", 0.5}}}}),
             Errc::invalid_encoding);
  CHECK_ERRC(TrackMetric(tt), Errc::precondition_violation);
}

TEST_CASE("single strip metric") {
  auto tt = single_edge(1);
  TrackMetric m(tt);
  TrackPoint x{{0, 0, true}, Rational(1, 4)}, y{{0, 0, true}, Rational(3, 4)};
  CHECK(m.distance(x, x) == 0);
  CHECK(m.distance(x, y) <= Rational(1, 2));
  // a strip folded at both ends collapses to an interval of length 1
  TrackPoint far{{1, 0, false}, 0};
  CHECK(m.distance(TrackPoint{{0, 0, false}, 0}, far) <= 1);
  CHECK_ERRC(m.distance(TrackPoint{{0, 0, true}, 2}, x), Errc::invalid_coordinate);
}

TEST_CASE("metric axioms on the corpus") {
  std::mt19937_64 rng(7);
  for (const char* name : {"theta.json", "star.json", "path.json"}) {
    auto tt = load(name);
    TrackMetric m(tt);
    for (int trial = 0; trial < 500; ++trial) {
      auto x = random_point(rng, tt), y = random_point(rng, tt), z = random_point(rng, tt);
      Rational dxy = m.distance(x, y), dyz = m.distance(y, z), dxz = m.distance(x, z);
      CHECK(dxy == m.distance(y, x));
      CHECK(dxz <= dxy + dyz);
      CHECK(m.distance(x, x) == 0);
      if (x.slot == y.slot) CHECK(dxy <= abs(x.offset - y.offset));
    }
  }
}

TEST_CASE("metric against a discretized gluing") {
  const double eps = 1e-3;
  std::mt19937_64 rng(8);
  for (const char* name : {"theta.json", "star.json", "path.json"}) {
    auto tt = load(name);
    TrackMetric m(tt);
    TrackGrid grid(tt, eps);
    for (int trial = 0; trial < 20; ++trial) {
      auto x = random_point(rng, tt, 7), y = random_point(rng, tt, 5);
      double exact = m.distance(x, y).get_d(), approx = grid.distance(x, y);
      CHECK(std::abs(exact - approx) <= 5 * eps);
    }
  }
}

TEST_CASE("zero-width slots collapse") {
  // path A - B - C; at B the first strip passes entirely into the second
  json j = {{"vertices", {"A", "B", "C"}},
            {"edges", {{{"ends", {"A", "B"}}}, {{"ends", {"B", "C"}}}}},
            {"cyclic", {{"A", {0}}, {"B", {0, 1}}, {"C", {1}}}},
            {"widths",
             {{"A:0:+", "1"}, {"A:0:-", "1"}, {"B:0:+", "0"}, {"B:1:-", "0"}, {"B:1:+", "2"}, {"B:0:-", "2"},
              {"C:1:+", "1"}, {"C:1:-", "1"}}}};
  auto tt = TrainTrack::from_json(j);
  REQUIRE(traintrack_validate(tt).empty());
  TrackMetric m(tt);
  TrackGrid grid(tt, 1e-3);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = random_point(rng, tt), y = random_point(rng, tt);
    CHECK(std::abs(m.distance(x, y).get_d() - grid.distance(x, y)) <= 5e-3);
  }
}
