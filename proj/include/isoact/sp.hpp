#pragma once

#include <Eigen/Dense>
#include <random>

namespace isoact {

// Real 2n x 2n matrix with g J g^T = J, J = (0 1; -1 0) in n x n blocks.
class SpMatrix {
 public:
  static SpMatrix from_matrix(const Eigen::MatrixXd& g, double tol = 1e-10);
  static SpMatrix identity(int n);
  static SpMatrix rotation(double theta);          // Sp(2), (cos sin; -sin cos)
  static SpMatrix boost(double t);                 // Sp(2), diag(e^t, e^-t)

  int n() const { return static_cast<int>(g_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return g_; }
  Eigen::MatrixXd block_a() const { return g_.topLeftCorner(n(), n()); }
  Eigen::MatrixXd block_b() const { return g_.topRightCorner(n(), n()); }
  Eigen::MatrixXd block_c() const { return g_.bottomLeftCorner(n(), n()); }
  Eigen::MatrixXd block_d() const { return g_.bottomRightCorner(n(), n()); }
  SpMatrix inverse() const;  // -J g^T J
  double residual() const;

  friend SpMatrix operator*(const SpMatrix& x, const SpMatrix& y) { return SpMatrix(x.g_ * y.g_); }

 private:
  explicit SpMatrix(Eigen::MatrixXd g) : g_(std::move(g)) {}
  Eigen::MatrixXd g_;
};

Eigen::MatrixXd symplectic_j(int n);

// Product of a few shears, block-diagonal and rotation factors with entries of size ~scale.
SpMatrix random_sp(std::mt19937_64& rng, int n, double scale = 0.6);

}  // namespace isoact
