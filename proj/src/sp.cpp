#include "isoact/sp.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "isoact/error.hpp"

namespace isoact {

Eigen::MatrixXd symplectic_j(int n) {
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  j.topRightCorner(n, n).setIdentity();
  j.bottomLeftCorner(n, n) = -Eigen::MatrixXd::Identity(n, n);
  return j;
}

SpMatrix SpMatrix::from_matrix(const Eigen::MatrixXd& g, double tol) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0 || g.rows() == 0)
    fail(Errc::constraint_violation, "symplectic matrix must be 2n x 2n");
  SpMatrix s(g);
  if (!(s.residual() <= tol)) fail(Errc::constraint_violation, "g J g^T != J");
  return s;
}

SpMatrix SpMatrix::identity(int n) { return SpMatrix(Eigen::MatrixXd::Identity(2 * n, 2 * n)); }

SpMatrix SpMatrix::rotation(double theta) {
  Eigen::MatrixXd g(2, 2);
  g << std::cos(theta), std::sin(theta), -std::sin(theta), std::cos(theta);
  return SpMatrix(g);
}

SpMatrix SpMatrix::boost(double t) {
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(2, 2);
  g(0, 0) = std::exp(t);
  g(1, 1) = std::exp(-t);
  return SpMatrix(g);
}

SpMatrix SpMatrix::inverse() const {
  Eigen::MatrixXd j = symplectic_j(n());
  return SpMatrix(-j * g_.transpose() * j);
}

double SpMatrix::residual() const {
  Eigen::MatrixXd j = symplectic_j(n());
  return (g_ * j * g_.transpose() - j).cwiseAbs().maxCoeff();
}

SpMatrix random_sp(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> nd(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  auto rnd = [&](double s) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m(i, k) = s * nd(rng);
    return m;
  };
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n), z = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(2 * n, 2 * n);
  for (int step = 0; step < 3; ++step) {
    Eigen::MatrixXd s = rnd(scale);
    s = ((s + s.transpose()) / 2).eval();
    Eigen::MatrixXd t = rnd(scale);
    t = ((t + t.transpose()) / 2).eval();
    Eigen::MatrixXd a = rnd(scale / 2).exp();
    Eigen::MatrixXd up(2 * n, 2 * n), dg(2 * n, 2 * n), lo(2 * n, 2 * n), rot(2 * n, 2 * n);
    up << id, s, z, id;
    dg << a, z, z, a.inverse().transpose();
    lo << id, z, t, id;
    // (cos sin; -sin cos) on each coordinate plane
    Eigen::VectorXd th(n);
    for (int i = 0; i < n; ++i) th(i) = ang(rng);
    Eigen::MatrixXd c = th.array().cos().matrix().asDiagonal(), sn = th.array().sin().matrix().asDiagonal();
    rot << c, sn, -sn, c;
    g = g * up * dg * lo * rot;
  }
  return SpMatrix::from_matrix(g);
}

}  // namespace isoact
