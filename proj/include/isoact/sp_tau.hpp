#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isoact/sp.hpp"

namespace isoact {

// Phi(g) = ((a + d) + i (c - b)) / 2 on the n x n blocks.  Throws
// IllConditionedPhi when the smallest singular value drops below 1e-10.
Eigen::MatrixXcd sp_phi(const SpMatrix& g);
double sp_phi_condition(const SpMatrix& g);  // largest over smallest singular value

struct SpTauDetail {
  double tau;
  double branch_distance;  // spectral norm of N - 1
  Eigen::MatrixXcd n;
};

// tau(g1, g2) = Im tr log(Phi(g1)^{-1} Phi(g1 g2) Phi(g2)^{-1}) with the
// principal logarithm; BranchGuard unless |N - 1| < 1.
SpTauDetail sp_tau_detail(const SpMatrix& g1, const SpMatrix& g2);
double sp_tau(const SpMatrix& g1, const SpMatrix& g2);

// tau(g1,g2) + tau(g1 g2, g3) - tau(g2,g3) - tau(g1, g2 g3)
double sp_tau_cocycle_residual(const SpMatrix& g1, const SpMatrix& g2, const SpMatrix& g3);

}  // namespace isoact
