#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "isoact/free_word.hpp"
#include "isoact/rational.hpp"

namespace isoact {

std::uint64_t next_space_id();

// Finitely supported antisymmetric edge function, stored on one orientation
// per edge (the one pointing away from the basepoint).
template <class Key>
struct EdgeVec {
  std::uint64_t space = 0;
  std::map<Key, Rational> w;

  EdgeVec& add(const Key& k, const Rational& x) {
    if (x == 0) return *this;
    auto [it, fresh] = w.try_emplace(k, x);
    if (!fresh) {
      it->second += x;
      if (it->second == 0) w.erase(it);
    }
    return *this;
  }
  EdgeVec& operator+=(const EdgeVec& o) {
    for (const auto& [k, x] : o.w) add(k, x);
    return *this;
  }
  friend EdgeVec operator+(EdgeVec a, const EdgeVec& b) { return a += b; }
  friend EdgeVec operator-(EdgeVec a, const EdgeVec& b) { return a += b * Rational(-1); }
  friend EdgeVec operator*(EdgeVec a, const Rational& s) {
    if (s == 0) a.w.clear();
    for (auto& [k, x] : a.w) x *= s;
    return a;
  }
  friend bool operator==(const EdgeVec&, const EdgeVec&) = default;
};

struct MetricEdge {
  int u, v;
  Rational length;
};

// Finite tree with positive rational edge lengths, rooted at vertex 0.  Edge
// ids are child vertices.
class MetricTree {
 public:
  MetricTree(int vertex_count, const std::vector<MetricEdge>& edges);  // throws InvalidTree

  int vertex_count() const { return static_cast<int>(parent_.size()); }
  std::uint64_t id() const { return id_; }
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  const Rational& edge_length(int e) const { return length_[e]; }
  const Rational& height(int v) const { return height_[v]; }
  const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  int lca(int u, int v) const;
  Rational distance(int u, int v) const;
  std::optional<int> edge_between(int u, int v) const;
  std::vector<int> path(int u, int v) const;

 private:
  std::uint64_t id_;
  std::vector<int> parent_, depth_;
  std::vector<Rational> length_, height_;
  std::vector<std::vector<int>> adj_;
};

using EdgeVector = EdgeVec<int>;

EdgeVector edge_path(const MetricTree& t, int x, int y);  // e(x, y)
Rational edge_pairing(const MetricTree& t, const EdgeVector& a, const EdgeVector& b);  // throws TreeMismatch

class MetricIsometry {
 public:
  MetricIsometry(const MetricTree& t, std::vector<int> images);  // throws InvalidTree if not an isometry
  int operator()(int v) const { return images_[v]; }
  MetricIsometry operator*(const MetricIsometry& o) const;  // (this o other)
  EdgeVector apply(const EdgeVector& v) const;
  const MetricTree& tree() const { return *t_; }

 private:
  const MetricTree* t_;
  std::vector<int> images_;
};

// Fixed point of an isometry: a vertex, or the midpoint of an inverted edge.
struct TreePoint {
  int vertex;
  std::optional<int> flipped_edge;
};

struct TranslationLength {
  Rational length;
  std::optional<FreeWord> axis_point;  // free-group trees, hyperbolic case
  std::optional<TreePoint> fixed_point;
};

TranslationLength translation_length(const MetricIsometry& g, int probe);

EdgeVector canonical_affine_apply(const MetricIsometry& g, const EdgeVector& v, const Rational& s, int x0);

// Cayley tree of F_rank with edges [w, w a_i] of length lengths[i-1] (zero
// lengths contract that edge type).  Only words of length <= window are
// available; anything beyond throws WindowTooSmall.
class FreeGroupTree {
 public:
  FreeGroupTree(int rank, std::vector<Rational> lengths, int window);
  static FreeGroupTree unit(int rank, int window) { return FreeGroupTree(rank, std::vector<Rational>(rank, 1), window); }

  int rank() const { return rank_; }
  int window() const { return window_; }
  std::uint64_t id() const { return id_; }
  const Rational& letter_length(int letter) const { return lengths_[std::abs(letter) - 1]; }
  Rational word_length(const FreeWord& w) const;
  Rational distance(const FreeWord& x, const FreeWord& y) const;
  void require_in_window(const FreeWord& w) const;

 private:
  std::uint64_t id_;
  int rank_, window_;
  std::vector<Rational> lengths_;
};

// Edge [w', w] with w' = w minus its last letter is keyed by w.
using FreeEdgeVector = EdgeVec<FreeWord>;

FreeEdgeVector edge_path(const FreeGroupTree& t, const FreeWord& x, const FreeWord& y);
Rational edge_pairing(const FreeGroupTree& t, const FreeEdgeVector& a, const FreeEdgeVector& b);
FreeEdgeVector translate(const FreeGroupTree& t, const FreeWord& g, const FreeEdgeVector& v);  // pi(g)

TranslationLength translation_length(const FreeGroupTree& t, const FreeWord& g, const FreeWord& probe);

// pi(g) v + s e(x0, g x0)
FreeEdgeVector canonical_affine_apply(const FreeGroupTree& t, const FreeWord& g, const FreeEdgeVector& v,
                                      const Rational& s, const FreeWord& x0);
FreeEdgeVector canonical_gamma(const FreeGroupTree& t, const FreeWord& g, const Rational& s, const FreeWord& x0);

// Coefficient of the cocycle e(x0, g x0) of the tree obtained by contracting the
// edge types a_{alpha+1}..a_n, read off at h (an edge labelled by its endpoint
// farther from the identity, oriented x -> x a_i).  Throws BadLevel unless 1 <= alpha < rank.
int free_cayley_gamma(const FreeWord& g, const FreeWord& h, int alpha, int rank);

}  // namespace isoact
