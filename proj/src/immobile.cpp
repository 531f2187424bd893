#include "isoact/immobile.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

#include "isoact/error.hpp"

namespace isoact {

CayleyWindow::CayleyWindow(int rank, int radius) : rank_(rank), radius_(radius) {
  if (rank < 1 || radius < 0) fail(Errc::constraint_violation, "Cayley window needs rank >= 1 and radius >= 0");
  vertices_ = free_ball(rank, radius);
  for (const FreeWord& m : vertices_)
    for (int j = 1; j <= rank; ++j) {
      FreeWord to = FreeWord::generator(j) * m;
      if (static_cast<int>(to.length()) <= radius)
        edges_.push_back({m, to, j});
      else
        ++incomplete_;
    }
}

void CayleyWindow::require_radius(int r) const {
  if (r > radius_ || r < 0)
    fail(Errc::window_too_small, "radius " + std::to_string(r) + " outside a window of radius " + std::to_string(radius_));
}

SetWindow SetWindow::full() { return {[](const FreeWord&) { return true; }, json{{"kind", "full"}}}; }
SetWindow SetWindow::empty() { return {[](const FreeWord&) { return false; }, json{{"kind", "empty"}}}; }

SetWindow SetWindow::suffix(const FreeWord& v) {
  // words are kept reduced, so a suffix match has no cancellation into v
  return {[v](const FreeWord& m) { return m.has_suffix(v); }, json{{"kind", "suffix"}, {"v", v.letters()}}};
}

SetWindow SetWindow::even_length() {
  return {[](const FreeWord& m) { return m.length() % 2 == 0; }, json{{"kind", "even_length"}}};
}

SetWindow SetWindow::finite(std::vector<FreeWord> words) {
  auto s = std::make_shared<std::set<FreeWord>>(words.begin(), words.end());
  json listed = json::array();
  for (const FreeWord& w : *s) listed.push_back(w.letters());
  return {[s](const FreeWord& m) { return s->count(m) > 0; }, json{{"kind", "finite"}, {"words", listed}}};
}

namespace {

FreeWord word_from_json(const json& j, int rank) { return FreeWord::reduce(j.get<std::vector<int>>(), rank); }

}  // namespace

SetWindow SetWindow::from_json(const json& j, int rank) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "full") return full();
    if (kind == "empty") return empty();
    if (kind == "even_length") return even_length();
    if (kind == "suffix") return suffix(word_from_json(j.at("v"), rank));
    if (kind == "finite") {
      std::vector<FreeWord> ws;
      for (const json& w : j.at("words")) ws.push_back(word_from_json(w, rank));
      return finite(ws);
    }
    if (kind == "translate") return set_translate(word_from_json(j.at("g"), rank), from_json(j.at("set"), rank));
    if (kind == "union" || kind == "intersection" || kind == "symdiff") {
      const json& parts = j.at("of");
      if (parts.size() != 2) fail(Errc::invalid_encoding, kind + " takes two sets");
      SetWindow a = from_json(parts[0], rank), b = from_json(parts[1], rank);
      if (kind == "union") return set_union(a, b);
      if (kind == "intersection") return set_intersection(a, b);
      return set_symdiff(a, b);
    }
    fail(Errc::invalid_encoding, "unknown set kind '" + kind + "'");
  } catch (const json::exception& e) {
    fail(Errc::invalid_encoding, std::string("set descriptor: ") + e.what());
  }
}

SetWindow set_union(const SetWindow& a, const SetWindow& b) {
  return {[a, b](const FreeWord& m) { return a.contains(m) || b.contains(m); },
          json{{"kind", "union"}, {"of", {a.description, b.description}}}};
}

SetWindow set_intersection(const SetWindow& a, const SetWindow& b) {
  return {[a, b](const FreeWord& m) { return a.contains(m) && b.contains(m); },
          json{{"kind", "intersection"}, {"of", {a.description, b.description}}}};
}

SetWindow set_symdiff(const SetWindow& a, const SetWindow& b) {
  return {[a, b](const FreeWord& m) { return a.contains(m) != b.contains(m); },
          json{{"kind", "symdiff"}, {"of", {a.description, b.description}}}};
}

SetWindow set_translate(const FreeWord& g, const SetWindow& a) {
  FreeWord gi = g.inverse();
  return {[gi, a](const FreeWord& m) { return a.contains(gi * m); },
          json{{"kind", "translate"}, {"g", g.letters()}, {"set", a.description}}};
}

std::size_t count_members(const SetWindow& a, const CayleyWindow& w, int radius) {
  w.require_radius(radius);
  std::size_t c = 0;
  for (const FreeWord& m : w.vertices())
    if (static_cast<int>(m.length()) <= radius && a.contains(m)) ++c;
  return c;
}

namespace {

void check_schedule(const CayleyWindow& w, const std::vector<int>& schedule) {
  for (int r : schedule) w.require_radius(r);
  if (!std::is_sorted(schedule.begin(), schedule.end()))
    fail(Errc::precondition_violation, "radius schedule must be increasing");
}

int edge_radius(const CayleyWindow::Edge& e) { return static_cast<int>(std::max(e.from.length(), e.to.length())); }

}  // namespace

BoundaryReport boundary_edge_count(const SetWindow& a, const CayleyWindow& w, const std::vector<int>& schedule) {
  check_schedule(w, schedule);
  BoundaryReport out{schedule, std::vector<long>(schedule.size(), 0), ""};
  for (const auto& e : w.edges()) {
    if (a.contains(e.from) == a.contains(e.to)) continue;
    int er = edge_radius(e);
    for (std::size_t i = 0; i < schedule.size(); ++i)
      if (er <= schedule[i]) ++out.counts[i];
  }
  std::size_t n = out.counts.size();
  if (n < 3)
    out.verdict = "inconclusive";
  else
    out.verdict = out.counts[n - 1] == out.counts[n - 2] && out.counts[n - 2] == out.counts[n - 3]
                      ? "immobile within window"
                      : "growing";
  return out;
}

ClosureReport boolean_closure(const SetWindow& a, const SetWindow& b, const CayleyWindow& w,
                              const std::vector<int>& schedule) {
  ClosureReport out{boundary_edge_count(a, w, schedule), boundary_edge_count(b, w, schedule),
                    boundary_edge_count(set_union(a, b), w, schedule),
                    boundary_edge_count(set_intersection(a, b), w, schedule), true};
  const std::string stable = "immobile within window";
  if (out.a.verdict == stable && out.b.verdict == stable)
    out.closed = out.united.verdict == stable && out.intersected.verdict == stable;
  return out;
}

WindowFunction indicator(const SetWindow& a) {
  return [a](const FreeWord& m) { return Rational(a.contains(m) ? 1 : 0); };
}

FunctionReport immobile_function_test(const WindowFunction& r, const CayleyWindow& w, const std::vector<int>& schedule) {
  check_schedule(w, schedule);
  FunctionReport out{schedule, std::vector<Rational>(schedule.size(), 0), ""};
  for (const auto& e : w.edges()) {
    Rational d = r(e.from) - r(e.to);
    if (d == 0) continue;
    Rational d2 = d * d;
    int er = edge_radius(e);
    for (std::size_t i = 0; i < schedule.size(); ++i)
      if (er <= schedule[i]) out.partial_sums[i] += d2;
  }
  std::size_t n = out.partial_sums.size();
  if (n < 3) {
    out.verdict = "inconclusive";
  } else {
    double i1 = std::abs(Rational(out.partial_sums[n - 1] - out.partial_sums[n - 2]).get_d());
    double i2 = std::abs(Rational(out.partial_sums[n - 2] - out.partial_sums[n - 3]).get_d());
    out.verdict = i1 <= 1e-9 && i2 <= 1e-9 ? "immobile within window" : "growing";
  }
  return out;
}

std::map<FreeWord, Rational> cocycle_from_function(const WindowFunction& r, const FreeWord& g, const CayleyWindow& w) {
  int inner = w.radius() - static_cast<int>(g.length());
  if (inner < 0) fail(Errc::window_too_small, "g^{-1} h leaves the window for every h");
  FreeWord gi = g.inverse();
  std::map<FreeWord, Rational> out;
  for (const FreeWord& h : w.vertices())
    if (static_cast<int>(h.length()) <= inner) out.emplace(h, r(gi * h) - r(h));
  return out;
}

Address cayley_address(const FreeWord& m) {
  FreeWord u = m.inverse();
  Address a;
  a.reserve(u.length());
  for (std::size_t i = 0; i < u.length(); ++i) {
    int c = letter_code(u[i]);
    if (i == 0) {
      a.push_back(c);
      continue;
    }
    int banned = letter_code(-u[i - 1]);
    a.push_back(c < banned ? c : c - 1);
  }
  return a;
}

IsomorphismReport check_tree_isomorphism(const CayleyWindow& w) {
  TreeBall ball(2 * w.rank() - 1, w.radius());
  IsomorphismReport out;
  out.vertices = w.vertices().size();
  out.edges = w.edges().size();
  std::vector<char> hit(ball.vertex_count(), 0);
  bool ok = out.vertices == static_cast<std::size_t>(ball.vertex_count());
  std::map<FreeWord, int> image;
  for (const FreeWord& m : w.vertices()) {
    auto v = ball.find(cayley_address(m));
    if (!v || hit[*v]) {
      ok = false;
      continue;
    }
    hit[*v] = 1;
    image.emplace(m, *v);
  }
  out.bijective = ok && std::all_of(hit.begin(), hit.end(), [](char c) { return c == 1; });
  bool edges = out.edges == static_cast<std::size_t>(ball.edge_count());
  for (const auto& e : w.edges()) {
    auto a = image.find(e.from), b = image.find(e.to);
    if (a == image.end() || b == image.end()) {
      edges = false;
      continue;
    }
    if (ball.parent(a->second) != b->second && ball.parent(b->second) != a->second) edges = false;
  }
  out.edges_preserved = edges;
  return out;
}

H1Result immobile_h1(const WindowFunction& r, int rank, int radius, SolveMode mode) {
  TreeBall ball(2 * rank - 1, radius);
  EdgeFunction f(ball.vertex_count(), Rational(0));
  // vertex ids in BFS order; word of each vertex from its parent's word
  std::vector<FreeWord> word(ball.vertex_count());
  std::vector<Rational> value(ball.vertex_count());
  value[0] = r(FreeWord());
  for (int v = 1; v < ball.vertex_count(); ++v) {
    // the child address extends u = m^{-1} by one letter
    Address a = ball.address(v);
    int c = a.back();
    FreeWord up = word[ball.parent(v)].inverse();
    int letter;
    if (a.size() == 1) {
      letter = code_letter(c);
    } else {
      int banned = letter_code(-up.back());
      letter = code_letter(c < banned ? c : c + 1);
    }
    word[v] = up.times_letter(letter).inverse();
    value[v] = r(word[v]);
    f[v] = value[v] - value[ball.parent(v)];
  }
  return h1_representative(ball, f, mode);
}

}  // namespace isoact
