#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "isoact/free_word.hpp"
#include "isoact/rational.hpp"

namespace isoact {

// Vertex of T_n named by its branch choices from the basepoint.  The first
// choice is in [0, n] (n + 1 neighbours), every later one in [0, n - 1]
// (the backtracking neighbour is skipped).
using Address = std::vector<int>;

class TreeBall {
 public:
  TreeBall(int n, int radius);

  int n() const { return n_; }
  int radius() const { return radius_; }
  int vertex_count() const { return static_cast<int>(parent_.size()); }
  int edge_count() const { return vertex_count() - 1; }

  // Vertices are numbered in breadth-first order; vertex 0 is the basepoint.
  // Edge ids are child vertex ids, oriented parent -> child.
  int parent(int v) const { return parent_[v]; }
  int depth(int v) const { return depth_[v]; }
  int branch(int v) const { return branch_[v]; }
  int first_child(int v) const { return first_child_[v]; }
  int child_count(int v) const { return child_count_[v]; }
  int degree(int v) const { return child_count(v) + (v == 0 ? 0 : 1); }
  bool is_interior(int v) const { return depth_[v] < radius_; }
  std::vector<int> neighbors(int v) const;

  Address address(int v) const;
  bool valid_address(const Address& a) const;
  std::optional<int> find(const Address& a) const;
  int index(const Address& a) const;  // throws VertexNotFound

  static std::int64_t expected_vertex_count(int n, int radius);

 private:
  int n_, radius_;
  std::vector<int> parent_, depth_, branch_, first_child_, child_count_;
};

int tree_distance(const TreeBall& ball, const Address& u, const Address& v);
int address_distance(const Address& u, const Address& v);

// End of the tree.  Choices past the prefix are all 0 when zero_tail is set,
// and unknown otherwise.
struct BoundaryRay {
  Address prefix;
  bool zero_tail = true;

  std::optional<int> choice(std::size_t i) const;
};

// n^{-(x|y)_s}, the visual distance seen from basepoint s (default: ball centre).
Rational abs_metric(const BoundaryRay& x, const BoundaryRay& y, const TreeBall& ball, const Address& s = {});

// Mass of the cylinder of ends passing through c (as seen from the ball
// centre) for the equidistributed measure based at s.
Rational cylinder_measure(const TreeBall& ball, const Address& c, const Address& s = {});

// Words of F_rank <-> vertices of T_{2 rank - 1}: the word a_{i1}^{e1}...a_{ik}^{ek}
// is reached from the identity by the edges labelled by its letters.
Address word_to_address(const FreeWord& w, int rank);
FreeWord address_to_word(const Address& a, int rank);

// 2 x 2 rational matrix; for lattices the columns are a Z_p-basis.
struct RatMat2 {
  Rational m[2][2];

  static RatMat2 identity();
  Rational det() const;
  RatMat2 inverse() const;
  friend RatMat2 operator*(const RatMat2& x, const RatMat2& y);
};

// v_p(det) - 2 min v_p(entries) of l1^{-1} l2; throws SingularLattice.
long lattice_distance(const RatMat2& l1, const RatMat2& l2, long p);
bool same_lattice_class(const RatMat2& l1, const RatMat2& l2, long p);

// Lattice classes of the Bruhat-Tits tree of PGL_2(Q_p), based at Z_p^2.
RatMat2 lattice_of_address(const Address& a, long p);
Address address_of_lattice(const RatMat2& l, long p);

// Automorphism given by its values on every vertex of a ball.
class TreeAutomorphism {
 public:
  // images[v] is the image of ball vertex v; adjacency is checked.
  TreeAutomorphism(const TreeBall& domain, std::vector<Address> images);

  static TreeAutomorphism from_free_word(const FreeWord& g, int rank, int radius);
  static TreeAutomorphism from_matrix(const RatMat2& g, long p, int radius);
  // Root-fixing automorphism permuting the first-level branches.
  static TreeAutomorphism rotation(int n, int radius, const std::vector<int>& first_level_perm);

  const TreeBall& domain() const { return domain_; }
  Address apply(const Address& a) const;  // throws Unresolvable outside the domain
  const std::vector<Address>& images() const { return images_; }

 private:
  TreeBall domain_;
  std::vector<Address> images_;
};

// n^alpha where g maps the j-th vertex of the ray to the (j + alpha)-th vertex of g x.
Rational automorphism_derivative(const TreeAutomorphism& g, const BoundaryRay& x);
// Longest known prefix of g x (unknown tail).
BoundaryRay image_ray(const TreeAutomorphism& g, const BoundaryRay& x);

}  // namespace isoact
