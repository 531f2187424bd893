#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "isoact/json_io.hpp"
#include "isoact/rational.hpp"

namespace isoact {

// Oriented-edge slot (v, e) with a sign choosing the segment Delta_+ or Delta_-.
struct Slot {
  int vertex;
  int edge;
  bool plus;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

struct TrainTrack {
  std::vector<std::string> vertices;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> cyclic;  // per vertex: incident edges in cyclic order
  std::map<Slot, Rational> widths;

  static TrainTrack from_json(const json& j);  // throws InvalidEncoding
  json to_json() const;

  int vertex_index(const std::string& name) const;
  std::string slot_key(const Slot& s) const;  // "A:0:+"
  Slot parse_slot(const std::string& key) const;
  Rational width(const Slot& s) const;        // 0 when absent
  Rational strip_width(int edge) const;       // measured at the first end
  int successor(int v, int e) const;          // A+_v(e)
};

struct TrackViolation {
  std::string condition;  // "structure", "a" or "b"
  int vertex = -1, edge = -1;
  std::string detail;
  std::vector<Slot> slots;  // slots whose widths disagree
};

std::vector<TrackViolation> traintrack_validate(const TrainTrack& tt);

struct TrackPoint {
  Slot slot;
  Rational offset;  // distance from the start of the directed segment
};

// Quotient of the strips by the vertex gluings, resolved into a finite metric
// graph: every strip is cut at the orbit of its gluing endpoints, pieces glued
// onto each other are merged, and distances come from an exact Dijkstra.
class TrackMetric {
 public:
  explicit TrackMetric(const TrainTrack& tt, std::size_t max_breakpoints = 200000);  // throws PreconditionViolation

  Rational distance(const TrackPoint& x, const TrackPoint& y) const;  // throws InvalidCoordinate
  Rational strip_coordinate(const TrackPoint& p) const;               // position across the strip, from its first end
  int node_count() const { return static_cast<int>(node_adj_.size()); }
  int piece_count() const { return piece_classes_; }

 private:
  struct Located {
    std::vector<std::pair<int, Rational>> ends;  // (node, distance)
    int piece = -1;                              // piece class when strictly inside one
    Rational along;                              // position along the class representative
  };
  Located locate(const TrackPoint& p) const;
  std::vector<Rational> dijkstra(int source) const;

  const TrainTrack* tt_;
  std::vector<std::vector<Rational>> breaks_;                // per edge, sorted
  std::vector<std::vector<int>> break_node_;                 // node of each breakpoint
  std::vector<std::vector<int>> atom_class_;                 // per edge, per atom
  std::vector<std::vector<bool>> atom_flip_;                 // orientation relative to the representative
  std::vector<std::vector<std::pair<int, Rational>>> node_adj_;
  std::vector<std::array<int, 2>> class_ends_;               // representative start / end node
  std::vector<Rational> class_length_;
  int piece_classes_ = 0;
};


// Comparison metric: shortest paths on a grid of step eps laid over every
// directed segment, with the strip and vertex identifications attached to the
// nearest grid nodes.  Agrees with TrackMetric to a few eps.
class TrackGrid {
 public:
  TrackGrid(const TrainTrack& tt, double eps);
  double distance(const TrackPoint& x, const TrackPoint& y) const;

 private:
  void link(int a, int b, double w);
  std::vector<std::pair<int, double>> nearest(const Slot& s, double o) const;
  void attach(int node, const Slot& s, double o);

  double eps_;
  std::map<Slot, int> base_, count_;
  std::vector<double> pos_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

}  // namespace isoact
