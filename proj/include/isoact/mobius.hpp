#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

#include "isoact/su11.hpp"

namespace isoact {

// Whether a cocycle satisfies gamma(gh) = pi(g) gamma(h) + gamma(g) (left) or
// gamma(gh) = pi(h) gamma(g) + gamma(h) (right).  The weight-2 Bergman action
// f -> f(z^[g]) (conj(b) z + conj(a))^{-2} composes on the right.
enum class Side { left, right };

double poincare_distance(cplx z1, cplx z2);  // throws OutsideDisc

// <gamma(g1), gamma(g2)> = -ln u, u = conj(a(g1 g2^{-1})) / (conj(a(g1)) a(g2)).
cplx gamma_gram_argument(const SuMatrix& g1, const SuMatrix& g2);
cplx gamma_gram(const SuMatrix& g1, const SuMatrix& g2);  // throws BranchGuard when |u - 1| >= 1 - 1e-12
double gamma_norm2(const SuMatrix& g);                    // 2 ln |a|

// Monomial coefficients of gamma(g) = conj(b) / (conj(b) z + conj(a)) up to degree N.
Eigen::VectorXcd bergman_gamma(const SuMatrix& g, int n);
// sum_k x_k conj(y_k) / (k + 1) over k <= upto (all by default)
cplx bergman_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y, int upto = -1);
// Matrix of f -> f(z^[g]) (conj(b) z + conj(a))^{-2} on polynomials of degree <= N.
Eigen::MatrixXcd bergman_pi(const SuMatrix& g, int n);

struct CocycleCheck {
  double residual;          // || gamma(g1 g2) - pi(g2) gamma(g1) - gamma(g2) || on degrees <= N/2
  double literal_residual;  // same with pi(g1) gamma(g2) + gamma(g1)
};
CocycleCheck affine_cocycle_check(const SuMatrix& g1, const SuMatrix& g2, int n);  // throws PreconditionViolation for N < 4

enum class MobiusKind { identity, elliptic, parabolic, hyperbolic };
struct HyperbolicLength {
  MobiusKind kind;
  double length;
};
HyperbolicLength hyperbolic_length(const SuMatrix& g, double trace_tol = 1e-9);
std::string to_string(MobiusKind k);

// min of d(z, z^[g]) over a polar grid with |z| <= rmax
double grid_min_displacement(const SuMatrix& g, int radial, int angular, double rmax);

using SuFunction = std::function<double(const SuMatrix&)>;

struct CpdResult {
  bool cpd;
  double max_eigenvalue;  // of Q_ij = phi(g_i^{-1} g_j) on the zero-sum hyperplane
};
CpdResult cpd_check(const std::vector<SuMatrix>& sample, const SuFunction& phi, double tol = 1e-9);

// Gram matrix <gamma(g_i), gamma(g_j)> reconstructed from phi = ||gamma||^2.
Eigen::MatrixXd gns_from_phi(const std::vector<SuMatrix>& sample, const SuFunction& phi, Side side);

struct ProbeReport {
  double sup = 0;
  double slope = 0;       // largest least-squares slope over the power sequences
  bool nontrivial = false;
  std::string verdict;    // "nontrivial (unbounded trend)" or "no growth detected"
};
// sequences[s][k] = ||gamma(g_s^{k+1})||^2; never concludes triviality.
ProbeReport triviality_probe(const std::vector<std::vector<double>>& sequences, double slope_threshold = 1e-2);

}  // namespace isoact
