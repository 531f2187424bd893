#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "isoact/free_word.hpp"
#include "isoact/json_io.hpp"
#include "isoact/rational.hpp"
#include "isoact/tree_core.hpp"
#include "isoact/tree_harmonic.hpp"

namespace isoact {

// Ball of F_rank acting on itself from the left, edges [m, a_j m].
class CayleyWindow {
 public:
  struct Edge {
    FreeWord from, to;  // to = a_j from
    int generator;
  };

  CayleyWindow(int rank, int radius);

  int rank() const { return rank_; }
  int radius() const { return radius_; }
  const std::vector<FreeWord>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }  // both endpoints in the ball
  std::size_t incomplete_edges() const { return incomplete_; }  // a_j m leaves the ball
  void require_radius(int r) const;                              // throws WindowTooSmall

 private:
  int rank_, radius_;
  std::vector<FreeWord> vertices_;
  std::vector<Edge> edges_;
  std::size_t incomplete_ = 0;
};

// Membership predicate with the description it came from.
struct SetWindow {
  std::function<bool(const FreeWord&)> contains;
  json description;

  static SetWindow full();
  static SetWindow empty();
  static SetWindow suffix(const FreeWord& v);  // X(v): reduced words ending in v
  static SetWindow even_length();
  static SetWindow finite(std::vector<FreeWord> words);
  static SetWindow from_json(const json& j, int rank);  // throws InvalidEncoding
};

SetWindow set_union(const SetWindow& a, const SetWindow& b);
SetWindow set_intersection(const SetWindow& a, const SetWindow& b);
SetWindow set_symdiff(const SetWindow& a, const SetWindow& b);
SetWindow set_translate(const FreeWord& g, const SetWindow& a);  // g A = {m : g^{-1} m in A}

std::size_t count_members(const SetWindow& a, const CayleyWindow& w, int radius);

// Stabilization is judged over the last three radii of the schedule.
struct BoundaryReport {
  std::vector<int> schedule;
  std::vector<long> counts;
  std::string verdict;  // "immobile within window", "growing", or "inconclusive" for < 3 radii
};
BoundaryReport boundary_edge_count(const SetWindow& a, const CayleyWindow& w, const std::vector<int>& schedule);

struct ClosureReport {
  BoundaryReport a, b, united, intersected;
  bool closed;  // union and intersection stable whenever a and b are
};
ClosureReport boolean_closure(const SetWindow& a, const SetWindow& b, const CayleyWindow& w,
                              const std::vector<int>& schedule);

using WindowFunction = std::function<Rational(const FreeWord&)>;
WindowFunction indicator(const SetWindow& a);

struct FunctionReport {
  std::vector<int> schedule;
  std::vector<Rational> partial_sums;  // sum over edges in the ball of |r(m) - r(m')|^2
  std::string verdict;
};
FunctionReport immobile_function_test(const WindowFunction& r, const CayleyWindow& w, const std::vector<int>& schedule);

// gamma_g(h) = r(g^{-1} h) - r(h) on the ball of radius R - |g|, so that
// gamma_{qg}(h) = gamma_g(q^{-1} h) + gamma_q(h).
std::map<FreeWord, Rational> cocycle_from_function(const WindowFunction& r, const FreeWord& g, const CayleyWindow& w);

// m -> address of m^{-1} in T_{2 rank - 1}; carries [m, a_j m] to tree edges.
Address cayley_address(const FreeWord& m);
struct IsomorphismReport {
  bool bijective = false;
  bool edges_preserved = false;
  std::size_t vertices = 0, edges = 0;
};
IsomorphismReport check_tree_isomorphism(const CayleyWindow& w);

// Edge function m' - m of r carried to the tree ball, then projected.
H1Result immobile_h1(const WindowFunction& r, int rank, int radius, SolveMode mode = SolveMode::automatic);

}  // namespace isoact
