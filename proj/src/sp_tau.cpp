#include "isoact/sp_tau.hpp"

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "isoact/error.hpp"

namespace isoact {

namespace {

bool is_identity(const SpMatrix& g) { return g.matrix() == Eigen::MatrixXd::Identity(2 * g.n(), 2 * g.n()); }

}  // namespace

Eigen::MatrixXcd sp_phi(const SpMatrix& g) {
  const std::complex<double> i(0, 1);
  Eigen::MatrixXcd phi = 0.5 * ((g.block_a() + g.block_d()).cast<std::complex<double>>() +
                                i * (g.block_c() - g.block_b()).cast<std::complex<double>>());
  double smin = Eigen::JacobiSVD<Eigen::MatrixXcd>(phi).singularValues().minCoeff();
  if (smin < 1e-10) fail(Errc::ill_conditioned_phi, "Phi has smallest singular value " + std::to_string(smin));
  return phi;
}

double sp_phi_condition(const SpMatrix& g) {
  auto sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(sp_phi(g)).singularValues();
  return sv.maxCoeff() / sv.minCoeff();
}

SpTauDetail sp_tau_detail(const SpMatrix& g1, const SpMatrix& g2) {
  if (g1.n() != g2.n()) fail(Errc::group_mismatch, "symplectic matrices of different size");
  int n = g1.n();
  Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(n, n);
  // N is exactly the identity when either argument is
  if (is_identity(g1) || is_identity(g2)) return {0.0, 0.0, eye};
  Eigen::MatrixXcd p1 = sp_phi(g1), p12 = sp_phi(g1 * g2), p2 = sp_phi(g2);
  Eigen::MatrixXcd m = p1.partialPivLu().solve(p12) * p2.inverse();
  double dist = Eigen::JacobiSVD<Eigen::MatrixXcd>(m - eye).singularValues()(0);
  if (dist >= 1.0 - 1e-9) fail(Errc::branch_guard, "|N - 1| = " + std::to_string(dist) + " leaves the principal branch");
  Eigen::MatrixXcd lg = m.log();
  return {lg.trace().imag(), dist, m};
}

double sp_tau(const SpMatrix& g1, const SpMatrix& g2) { return sp_tau_detail(g1, g2).tau; }

double sp_tau_cocycle_residual(const SpMatrix& g1, const SpMatrix& g2, const SpMatrix& g3) {
  return sp_tau(g1, g2) + sp_tau(g1 * g2, g3) - sp_tau(g2, g3) - sp_tau(g1, g2 * g3);
}

}  // namespace isoact
