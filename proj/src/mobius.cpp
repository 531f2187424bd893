#include "isoact/mobius.hpp"

#include <cmath>

#include "isoact/error.hpp"

namespace isoact {

double poincare_distance(cplx z1, cplx z2) {
  if (std::abs(z1) >= 1 || std::abs(z2) >= 1) fail(Errc::outside_disc, "points must lie in the open unit disc");
  double p = std::abs(1.0 - std::conj(z1) * z2), q = std::abs(z2 - z1);
  return 0.5 * std::log((p + q) / (p - q));
}

cplx gamma_gram_argument(const SuMatrix& g1, const SuMatrix& g2) {
  return std::conj((g1 * g2.inverse()).a()) / (std::conj(g1.a()) * g2.a());
}

cplx gamma_gram(const SuMatrix& g1, const SuMatrix& g2) {
  if (g1 == g2) return gamma_norm2(g1);
  cplx u = gamma_gram_argument(g1, g2);
  if (std::abs(u - 1.0) >= 1 - 1e-12) fail(Errc::branch_guard, "|u - 1| reached 1; the principal logarithm is unsafe");
  return -std::log(u);
}

double gamma_norm2(const SuMatrix& g) { return 2 * std::log(std::abs(g.a())); }

Eigen::VectorXcd bergman_gamma(const SuMatrix& g, int n) {
  Eigen::VectorXcd v(n + 1);
  cplx r = std::conj(g.b()) / std::conj(g.a()), p = r;
  for (int k = 0; k <= n; ++k, p *= -r) v(k) = p;
  return v;
}

cplx bergman_pairing(const Eigen::VectorXcd& x, const Eigen::VectorXcd& y, int upto) {
  int last = upto < 0 ? static_cast<int>(std::min(x.size(), y.size())) - 1 : upto;
  cplx s = 0;
  for (int k = 0; k <= last; ++k) s += x(k) * std::conj(y(k)) / double(k + 1);
  return s;
}

namespace {

Eigen::VectorXcd truncated_product(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) {
  int n = static_cast<int>(p.size()) - 1;
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n + 1);
  for (int i = 0; i <= n; ++i)
    if (p(i) != 0.0)
      for (int j = 0; i + j <= n; ++j) out(i + j) += p(i) * q(j);
  return out;
}

double block_norm(const Eigen::VectorXcd& v, int upto) { return std::sqrt(std::abs(bergman_pairing(v, v, upto))); }

}  // namespace

Eigen::MatrixXcd bergman_pi(const SuMatrix& g, int n) {
  cplx a = g.a(), b = g.b(), ca = std::conj(a), cb = std::conj(b);
  // 1 / (conj(b) z + conj(a)) as a series
  Eigen::VectorXcd inv(n + 1), num = Eigen::VectorXcd::Zero(n + 1);
  cplx ratio = -cb / ca, p = 1.0 / ca;
  for (int k = 0; k <= n; ++k, p *= ratio) inv(k) = p;
  num(0) = b;
  if (n >= 1) num(1) = a;
  Eigen::VectorXcd step = truncated_product(num, inv);  // z^[g]
  Eigen::VectorXcd col = truncated_product(inv, inv);   // weight factor
  Eigen::MatrixXcd m(n + 1, n + 1);
  for (int k = 0; k <= n; ++k) {
    m.col(k) = col;
    col = truncated_product(col, step);
  }
  return m;
}

CocycleCheck affine_cocycle_check(const SuMatrix& g1, const SuMatrix& g2, int n) {
  if (n < 4) fail(Errc::precondition_violation, "truncation degree must be at least 4");
  int half = n / 2;
  Eigen::VectorXcd c12 = bergman_gamma(g1 * g2, n), c1 = bergman_gamma(g1, n), c2 = bergman_gamma(g2, n);
  CocycleCheck out;
  out.residual = block_norm(c12 - bergman_pi(g2, n) * c1 - c2, half);
  out.literal_residual = block_norm(c12 - bergman_pi(g1, n) * c2 - c1, half);
  return out;
}

HyperbolicLength hyperbolic_length(const SuMatrix& g, double trace_tol) {
  double t = std::abs(g.trace());
  if (g.b() == 0.0 && g.a().imag() == 0) return {MobiusKind::identity, 0};
  if (std::abs(t - 2) <= trace_tol) return {MobiusKind::parabolic, 0};
  if (t < 2) return {MobiusKind::elliptic, 0};
  return {MobiusKind::hyperbolic, std::acosh(t / 2)};
}

std::string to_string(MobiusKind k) {
  switch (k) {
    case MobiusKind::identity: return "identity";
    case MobiusKind::elliptic: return "elliptic";
    case MobiusKind::parabolic: return "parabolic";
    case MobiusKind::hyperbolic: return "hyperbolic";
  }
  return "?";
}

double grid_min_displacement(const SuMatrix& g, int radial, int angular, double rmax) {
  double best = poincare_distance(0, g.apply(0));
  for (int i = 1; i <= radial; ++i) {
    double r = rmax * i / radial;
    for (int j = 0; j < angular; ++j) {
      cplx z = std::polar(r, 2 * M_PI * j / angular);
      cplx w = g.apply(z);
      if (std::abs(w) >= 1) continue;
      best = std::min(best, poincare_distance(z, w));
    }
  }
  return best;
}

namespace {

void check_symmetric_phi(const std::vector<SuMatrix>& sample, const SuFunction& phi) {
  double e = phi(SuMatrix::identity());
  if (std::abs(e) > 1e-12) fail(Errc::precondition_violation, "phi(e) must vanish");
  for (const auto& g : sample) {
    double x = phi(g), y = phi(g.inverse());
    if (std::abs(x - y) > 1e-9 * (1 + std::abs(x))) fail(Errc::precondition_violation, "phi(g) != phi(g^{-1})");
  }
}

}  // namespace

CpdResult cpd_check(const std::vector<SuMatrix>& sample, const SuFunction& phi, double tol) {
  check_symmetric_phi(sample, phi);
  int m = static_cast<int>(sample.size());
  if (m < 2) return {true, 0};
  Eigen::MatrixXd q(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) q(i, j) = phi(sample[i].inverse() * sample[j]);
  if ((q - q.transpose()).cwiseAbs().maxCoeff() > 1e-9 * (1 + q.cwiseAbs().maxCoeff()))
    fail(Errc::precondition_violation, "phi is not symmetric on the sample");
  q = (q + q.transpose()) / 2;
  // orthonormal basis of the zero-sum hyperplane
  Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(m, 1);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
  Eigen::MatrixXd full = qr.householderQ();
  Eigen::MatrixXd basis = full.rightCols(m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(basis.transpose() * q * basis, Eigen::EigenvaluesOnly);
  double top = es.eigenvalues().maxCoeff();
  return {top <= tol, top};
}

Eigen::MatrixXd gns_from_phi(const std::vector<SuMatrix>& sample, const SuFunction& phi, Side side) {
  check_symmetric_phi(sample, phi);
  int m = static_cast<int>(sample.size());
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // ||gamma(g_i) - gamma(g_j)||^2
      SuMatrix diff = side == Side::right ? sample[i] * sample[j].inverse() : sample[j].inverse() * sample[i];
      g(i, j) = 0.5 * (phi(sample[i]) + phi(sample[j]) - phi(diff));
    }
  return g;
}

ProbeReport triviality_probe(const std::vector<std::vector<double>>& sequences, double slope_threshold) {
  if (sequences.empty()) fail(Errc::precondition_violation, "at least one power sequence is needed");
  ProbeReport r;
  for (const auto& s : sequences) {
    int n = static_cast<int>(s.size());
    if (n < 2) fail(Errc::precondition_violation, "power sequences need two or more terms");
    double mx = 0, my = 0;
    for (int k = 0; k < n; ++k) {
      mx += k + 1;
      my += s[k];
      r.sup = std::max(r.sup, s[k]);
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (int k = 0; k < n; ++k) sxy += (k + 1 - mx) * (s[k] - my), sxx += (k + 1 - mx) * (k + 1 - mx);
    r.slope = std::max(r.slope, sxy / sxx);
  }
  r.nontrivial = r.slope > slope_threshold;
  r.verdict = r.nontrivial ? "nontrivial (unbounded trend)" : "no growth detected";
  return r;
}

}  // namespace isoact
