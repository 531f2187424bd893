#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "isoact/json_io.hpp"
#include "isoact/measure.hpp"
#include "isoact/mobius.hpp"
#include "isoact/rtree.hpp"

namespace isoact {

struct AffineIsometry {
  Eigen::MatrixXcd a;      // unitary
  Eigen::VectorXcd gamma;

  AffineIsometry(Eigen::MatrixXcd a, Eigen::VectorXcd gamma);  // throws ConstraintViolation
};

// Haar-like unitary from the QR of a complex Gaussian; |gamma| uniform in [0, gamma_max].
AffineIsometry random_affine_isometry(std::mt19937_64& rng, int d, double gamma_max = 0.35);

// Holomorphic polynomials in d variables of total degree <= N, with the Fock
// product <z^p, z^q> = p! delta_pq.
class FockTruncation {
 public:
  FockTruncation(int d, int n);  // throws TruncationOverflow beyond d = 3, N = 14

  int d() const { return d_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(exps_.size()); }
  const std::vector<int>& exponent(int i) const { return exps_[i]; }
  int degree(int i) const { return degree_[i]; }
  double norm2(int i) const { return norm2_[i]; }
  int half_block() const;  // basis functions of degree <= N/2 come first

  Eigen::VectorXcd multiply(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) const;
  // change to the orthonormal basis z^p / sqrt(p!)
  Eigen::MatrixXcd orthonormal(const Eigen::MatrixXcd& m) const;

 private:
  int d_, n_;
  std::vector<std::vector<int>> exps_;
  std::vector<int> degree_;
  std::vector<double> norm2_;
  std::vector<std::vector<int>> product_;  // index of z^{p+q}, -1 past degree N
};

// Exp(A, g) f(z) = f(A z + g) exp(-<z, A^{-1} g> - |g|^2 / 2), monomial basis.
Eigen::MatrixXcd exp_operator(const AffineIsometry& iso, const FockTruncation& t);

struct FockLawCheck {
  double residual;   // half-block operator norm, orthonormal basis
  cplx phase;        // exp(-i Im <g, T'^{-1} g'>)
};
// Exp(T,g) Exp(T',g') against phase * Exp(T'T, T'g + g').
FockLawCheck fock_multiplication_check(const AffineIsometry& x, const AffineIsometry& y, const FockTruncation& t);

// Per-element data of an affine action on a finite coordinate model with a
// diagonal metric.
struct ActionIngredients {
  std::optional<Eigen::MatrixXcd> pi;
  std::optional<Eigen::VectorXcd> gamma, gamma_inv;
  std::optional<double> norm2;
};

struct LParams {
  Eigen::MatrixXcd a;
  Eigen::VectorXcd b, c;
  double d;
};

template <class Elem>
struct AffineModel {
  Eigen::VectorXd weights;
  std::function<ActionIngredients(const Elem&)> at;

  cplx inner(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) const {
    cplx s = 0;
    for (int k = 0; k < x.size(); ++k) s += weights(k) * x(k) * std::conj(y(k));
    return s;
  }
};

template <class Elem, class Less>
LParams l_params(const FiniteMeasure<Elem, Less>& mu, const AffineModel<Elem>& model) {
  int n = static_cast<int>(model.weights.size());
  LParams p{Eigen::MatrixXcd::Zero(n, n), Eigen::VectorXcd::Zero(n), Eigen::VectorXcd::Zero(n), 0.0};
  for (const auto& [g, w] : mu.atoms()) {
    ActionIngredients ing = model.at(g);
    if (!ing.pi || !ing.gamma || !ing.gamma_inv || !ing.norm2)
      fail(Errc::missing_ingredient, "action must supply pi, gamma, gamma of the inverse and the squared norm");
    double x = w.get_d();
    p.a += x * *ing.pi;
    p.b += x * *ing.gamma;
    p.c += x * *ing.gamma_inv;
    p.d -= x * *ing.norm2;
  }
  return p;
}

// Im <b(mu), c(nu)> for right actions, Im <b(nu), c(mu)> for left actions.
template <class Elem, class Less>
double sigma_measures(const FiniteMeasure<Elem, Less>& mu, const FiniteMeasure<Elem, Less>& nu,
                      const AffineModel<Elem>& model, Side side) {
  LParams pm = l_params(mu, model), pn = l_params(nu, model);
  return side == Side::right ? model.inner(pm.b, pn.c).imag() : model.inner(pn.b, pm.c).imag();
}

using SuMeasureT = FiniteMeasure<SuMatrix, SuLess>;
// The Bergman case in closed form: sum mu(g) nu(h) Im <gamma(g), gamma(h^{-1})>.
double sigma_su11(const SuMeasureT& mu, const SuMeasureT& nu);
SuMeasureT convolve_su(const SuMeasureT& mu, const SuMeasureT& nu);
AffineModel<SuMatrix> bergman_model(int n);

// The canonical tree action s e(x0, g x0) on the edges of the ball of the
// given radius; pi is the compression of the translation.  Every entry is real.
AffineModel<FreeWord> tree_model(const FreeGroupTree& t, const Rational& s, const FreeWord& x0, int radius);

// Measures on lattice vectors of Z^{2n} read as C^n (x_1..x_n, y_1..y_n).
using LatticeVector = std::vector<long>;
using LatticeMeasure = FiniteMeasure<LatticeVector>;
Rational lattice_im_inner(const LatticeVector& u, const LatticeVector& v);
Rational lattice_sigma(const LatticeMeasure& mu, const LatticeMeasure& nu);

}  // namespace isoact
