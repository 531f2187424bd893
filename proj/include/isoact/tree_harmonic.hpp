#pragma once

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <vector>

#include "isoact/rational.hpp"
#include "isoact/tree_core.hpp"

namespace isoact {

// Functions on a TreeBall.  Vertex functions are indexed by vertex id.  Edge
// functions are indexed by edge id (the child vertex), slot 0 unused, and hold
// the value on the edge oriented away from the centre; the reversed edge
// carries the negative.
using VertexFunction = std::vector<Rational>;
using EdgeFunction = std::vector<Rational>;

struct SparseQ {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rational>>> entries;  // per row, sorted by column

  SparseQ(int r, int c) : rows(r), cols(c), entries(r) {}
  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  Rational at(int r, int c) const;
  SparseQ transpose() const;
  friend SparseQ operator*(const SparseQ& a, const SparseQ& b);
};

struct HarmonicOperators {
  int p;              // the 1/p in the Laplacian; p = n
  SparseQ laplacian;  // (1/p) sum over neighbours - identity
  SparseQ gradient;   // f(end) - f(origin)
  SparseQ divergence; // sum over edges leaving v
};

// Throws BallTooSmall for radius < 2.
HarmonicOperators operator_matrices(const TreeBall& ball);

VertexFunction laplacian(const TreeBall& ball, const VertexFunction& f);
EdgeFunction gradient(const TreeBall& ball, const VertexFunction& f);
VertexFunction divergence(const TreeBall& ball, const EdgeFunction& h);
Rational vertex_pairing(const VertexFunction& f, const VertexFunction& g);
Rational edge_pairing(const EdgeFunction& f, const EdgeFunction& g);  // one term per unoriented edge

// Entrywise residuals over interior rows.  The printed pair of identities
// (composition = p * Laplacian, divergence adjoint to gradient) is compared
// alongside the relations the definitions actually satisfy on T_n:
// composition = p * Laplacian - identity, divergence = -gradient^T.
struct IdentityReport {
  Rational composition_residual;
  Rational adjoint_residual;
  Rational pairing_residual;  // max over random pairs of |<grad f, h> - <f, div h>|
  Rational corrected_composition_residual;
  Rational corrected_adjoint_residual;
  Rational corrected_pairing_residual;  // |<grad f, h> + <f, div h>|
};

IdentityReport check_identities(const TreeBall& ball, std::mt19937_64& rng, int random_pairs);

// Locally constant function on the ends: one value per depth-k vertex, in
// breadth-first order of the depth-k sphere.
struct CylinderFunction {
  int depth;
  std::vector<Rational> values;
};

std::vector<int> sphere_vertices(const TreeBall& ball, int depth);

// Requires a zero-mean function for the centre's measure and ball radius >= depth + 2.
EdgeFunction poisson_transform(const TreeBall& ball, const CylinderFunction& f, const Rational& c = 1);

enum class SolveMode { automatic, exact, floating };

struct H1Result {
  std::vector<double> representative;       // edge function, slot 0 unused
  std::optional<EdgeFunction> exact;        // set when solved in rationals
  double norm = 0;
  double divergence_residual = 0;           // max |div r| over interior vertices
  bool used_exact = false;
};

// Projection of an edge function (every ball edge has an interior endpoint) onto the
// divergence-free part: solve div grad u = div f on interior vertices with u = 0
// on the boundary sphere and return f - grad u.
H1Result h1_representative(const TreeBall& ball, const EdgeFunction& f, SolveMode mode = SolveMode::automatic,
                           int exact_limit = 2000);

struct Kernel {
  enum Kind { inv_delta, neg_log_delta, neg_log_padic } kind;
  long p = 0;  // for neg_log_padic
};

// Energy integral of the kernel over a pair of depth-k cylinders, with
// separation depths capped at the resolution R (the ball radius).
double cylinder_self_energy(const Kernel& k, int n, int depth, int resolution);
double cylinder_cross_energy(const Kernel& k, int n, int depth, int separation);

struct GramResult {
  Eigen::MatrixXd gram;  // basis 1_{c_i} - 1_{c_0}, i >= 1
  double min_eigenvalue;
  int cylinders;
};

GramResult kernel_gram(int depth, const TreeBall& ball, const Kernel& kernel);

}  // namespace isoact
