#include <cmath>
#include <random>

#include "check.hpp"
#include "isoact/mobius.hpp"

using namespace isoact;

namespace {

cplx random_disc_point(std::mt19937_64& rng, double rmax) {
  std::uniform_real_distribution<double> u(0, 1);
  return std::polar(rmax * std::sqrt(u(rng)), 2 * M_PI * u(rng));
}

cplx eval_poly(const Eigen::VectorXcd& c, cplx z) {
  cplx s = 0;
  for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k) s = s * z + c(k);
  return s;
}

// hyperbolic element whose axis passes near `centre`
SuMatrix conjugated_boost(double t, cplx centre, double turn) {
  double r = std::abs(centre);
  SuMatrix move = SuMatrix::rotation(std::arg(centre)) * SuMatrix::boost(std::atanh(r)) * SuMatrix::rotation(turn);
  return move * SuMatrix::boost(t) * move.inverse();
}

}  // namespace

TEST_CASE("Poincare distance") {
  CHECK(poincare_distance(0.3, 0.3) == 0);
  for (double t : {0.5, 1.0, 2.0}) CHECK(std::abs(poincare_distance(0, std::tanh(t)) - t) <= 1e-12);
  CHECK_ERRC(poincare_distance(1.0, 0), Errc::outside_disc);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    SuMatrix g = random_su(rng, 0.7);
    cplx z1 = random_disc_point(rng, 0.8), z2 = random_disc_point(rng, 0.8);
    CHECK(std::abs(poincare_distance(g.apply(z1), g.apply(z2)) - poincare_distance(z1, z2)) <= 1e-10);
  }
}

TEST_CASE("closed-form Gram of the Bergman cocycle") {
  SuMatrix b1 = SuMatrix::boost(1);
  CHECK(gamma_gram(b1, SuMatrix::identity()) == cplx(0));
  CHECK(std::abs(gamma_gram(b1, b1) - 0.8675616609) <= 1e-9);
  CHECK(std::abs(gamma_gram(b1, b1) - 2 * std::log(std::cosh(1.0))) <= 1e-15);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    SuMatrix g1 = random_su(rng, 0.8), g2 = random_su(rng, 0.8);
    auto v1 = bergman_gamma(g1, 100), v2 = bergman_gamma(g2, 100);
    CHECK(std::abs(bergman_pairing(v1, v2) - gamma_gram(g1, g2)) <= 1e-6);
    CHECK(std::abs(gamma_gram(g1, g2) - std::conj(gamma_gram(g2, g1))) <= 1e-10);
    CHECK(std::abs(gamma_gram(g1, g1).imag()) == 0);
    CHECK(std::abs(gamma_gram(g1, g1).real() - 2 * std::log(std::abs(g1.a()))) <= 1e-12);
    // the same pairing through the argument u, away from the diagonal shortcut
    CHECK(std::abs(-std::log(gamma_gram_argument(g1, g1)) - gamma_gram(g1, g1)) <= 1e-12);
    CHECK(std::abs(gamma_gram_argument(g1, g2) - 1.0) < 1);
  }
  auto e = bergman_gamma(SuMatrix::identity(), 10);
  CHECK(e.cwiseAbs().maxCoeff() == 0);
  auto v = bergman_gamma(b1, 100);
  CHECK(std::abs(bergman_pairing(v, v) - 2 * std::log(std::cosh(1.0))) <= 1e-6);
}

TEST_CASE("large boosts") {
  double prev = 1;
  for (int t = 5; t <= 15; ++t) {
    SuMatrix g = SuMatrix::boost(t);
    double delta = std::log(std::abs(g.a()) + std::abs(g.b()));
    double dev = std::abs(gamma_gram(g, g).real() - 2 * delta + 2 * std::log(2.0));
    CHECK(dev <= 1e-3);
    // oracle: 2 ln(1 + e^{-2t})
    CHECK(std::abs(dev - 2 * std::log1p(std::exp(-2.0 * t))) <= 1e-12 * (1 + 2 * t));
    if (t < 12) CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("weight-2 action matrix") {
  std::mt19937_64 rng(3);
  const int n = 40;
  for (int i = 0; i < 10; ++i) {
    SuMatrix g = random_su(rng, 0.6);
    auto m = bergman_pi(g, n);
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n + 1);
    for (int k = 0; k < 4; ++k) f(k) = cplx(rng() % 5, rng() % 3);
    Eigen::VectorXcd pf = m * f;
    for (int j = 0; j < 5; ++j) {
      cplx z = random_disc_point(rng, 0.05);
      cplx direct = eval_poly(f, g.apply(z)) / std::pow(std::conj(g.b()) * z + std::conj(g.a()), 2);
      CHECK(std::abs(eval_poly(pf, z) - direct) <= 1e-10);
    }
  }
}

TEST_CASE("affine cocycle law of the Bergman action") {
  std::mt19937_64 rng(4);
  SuMatrix e = SuMatrix::identity();
  SuMatrix g0 = random_su(rng, 0.5);
  CHECK(affine_cocycle_check(e, g0, 20).residual == 0);
  double worst = 0, literal_best = 1e9;
  for (int i = 0; i < 50; ++i) {
    SuMatrix g1 = random_su(rng, 0.7), g2 = random_su(rng, 0.7);
    auto r = affine_cocycle_check(g1, g2, 80);
    worst = std::max(worst, r.residual);
    literal_best = std::min(literal_best, r.literal_residual);
    CHECK(affine_cocycle_check(g1, g1.inverse(), 80).residual <= 1e-6);
  }
  CHECK(worst <= 1e-6);
  // composing in the printed order does not give a cocycle
  CHECK(literal_best > 1e-3);
  CHECK_ERRC(affine_cocycle_check(e, e, 3), Errc::precondition_violation);
}

TEST_CASE("hyperbolic length") {
  CHECK(hyperbolic_length(SuMatrix::rotation(0.8)).length == 0);
  CHECK(hyperbolic_length(SuMatrix::rotation(0.8)).kind == MobiusKind::elliptic);
  CHECK(hyperbolic_length(SuMatrix::identity()).kind == MobiusKind::identity);
  for (double t : {0.3, 1.0, 4.0}) CHECK(std::abs(hyperbolic_length(SuMatrix::boost(t)).length - t) <= 1e-12);
  auto para = SuMatrix::from_params(cplx(1, 0.7), cplx(0.7, 0));
  CHECK(hyperbolic_length(para).kind == MobiusKind::parabolic);
  CHECK(hyperbolic_length(para).length == 0);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    cplx c = random_disc_point(rng, 0.4);
    double t = std::uniform_real_distribution<double>(0.2, 1.5)(rng);
    SuMatrix g = conjugated_boost(t, c, std::uniform_real_distribution<double>(0, 6)(rng));
    auto hl = hyperbolic_length(g);
    REQUIRE(hl.kind == MobiusKind::hyperbolic);
    CHECK(std::abs(hl.length - t) <= 1e-9);
    SuMatrix p = g;
    for (int k = 2; k <= 10; ++k) {
      p = p * g;
      CHECK(std::abs(hyperbolic_length(p).length - k * hl.length) <= 1e-9);
    }
    const int radial = 300, angular = 300;
    const double rmax = 0.95;
    double est = grid_min_displacement(g, radial, angular, rmax);
    // displacement is 2-Lipschitz; a grid cell near |z| = 0.4 has hyperbolic diameter below h
    double scale = 2 / (1 - 0.4 * 0.4);
    double h = scale * std::hypot(rmax / radial, 2 * M_PI * 0.4 / angular);
    CHECK(est >= hl.length - 1e-9);
    CHECK(est <= hl.length + 2 * h);
  }
}

TEST_CASE("deviation along powers") {
  // ||gamma(g^n)||^2 grows like 2 n l(g): the difference with n l(g) is unbounded,
  // the difference with 2 n l(g) settles
  std::mt19937_64 rng(6);
  for (int i = 0; i < 5; ++i) {
    cplx c = random_disc_point(rng, 0.5);
    SuMatrix g = conjugated_boost(0.7, c, 1.0);
    double ell = hyperbolic_length(g).length, d_axis = poincare_distance(0, c);
    SuMatrix p = SuMatrix::identity();
    double lo = 1e300, hi = -1e300, naive_first = 0, naive_last = 0;
    for (int n = 1; n <= 40; ++n) {
      p = p * g;
      double v = gamma_norm2(p);
      if (n == 1) naive_first = v - n * ell;
      naive_last = v - n * ell;
      if (n >= 10) lo = std::min(lo, v - 2 * n * ell), hi = std::max(hi, v - 2 * n * ell);
    }
    CHECK(hi - lo <= 4 * d_axis + 1);
    CHECK(naive_last - naive_first > 10 * ell);
  }
}

TEST_CASE("conditional positive definiteness") {
  std::mt19937_64 rng(7);
  SuFunction phi = [](const SuMatrix& g) { return gamma_norm2(g); };
  SuFunction zero = [](const SuMatrix&) { return 0.0; };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SuMatrix> s;
    for (int i = 0; i < 6; ++i) s.push_back(random_su(rng, 0.8));
    auto r = cpd_check(s, phi);
    CHECK(r.cpd);
    CHECK(r.max_eigenvalue <= 1e-9);
    CHECK(cpd_check(s, zero).max_eigenvalue == doctest::Approx(0).epsilon(1e-15));
    auto g = gns_from_phi(s, phi, Side::right);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) CHECK(std::abs(g(i, j) - gamma_gram(s[i], s[j]).real()) <= 1e-9);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    CHECK(es.eigenvalues().minCoeff() >= -1e-9);
    CHECK(gns_from_phi(s, zero, Side::left).cwiseAbs().maxCoeff() == 0);
  }
  // the squared displacement of the origin is not conditionally negative
  SuFunction d2 = [](const SuMatrix& g) {
    double d = poincare_distance(0, g.apply(0));
    return d * d;
  };
  bool found = false;
  for (int trial = 0; trial < 200 && !found; ++trial) {
    std::vector<SuMatrix> s;
    for (int i = 0; i < 6; ++i) s.push_back(random_su(rng, 0.95));
    found = !cpd_check(s, d2).cpd;
  }
  CHECK(found);
  SuFunction skew = [](const SuMatrix& g) { return g.a().imag(); };
  std::vector<SuMatrix> s{SuMatrix::rotation(0.3)};
  CHECK_ERRC(cpd_check(s, skew), Errc::precondition_violation);
}

TEST_CASE("triviality probe") {
  double t = 0.4;
  std::vector<double> boosts, elliptic, cob;
  SuMatrix ell = SuMatrix::boost(0.5) * SuMatrix::rotation(1.1) * SuMatrix::boost(-0.5);
  SuMatrix p = SuMatrix::identity();
  // coboundary of a rotation on C^2: ||U^n w - w||^2
  Eigen::Matrix2cd u;
  u << std::polar(1.0, 0.7), 0, 0, std::polar(1.0, -1.9);
  Eigen::Vector2cd w(1.0, cplx(0.5, 2)), un = w;
  for (int n = 1; n <= 30; ++n) {
    boosts.push_back(gamma_norm2(SuMatrix::boost(n * t)));
    p = p * ell;
    elliptic.push_back(gamma_norm2(p));
    un = u * un;
    cob.push_back((un - w).squaredNorm());
  }
  auto rb = triviality_probe({boosts});
  CHECK(rb.nontrivial);
  CHECK(std::abs(rb.slope - 2 * t) <= 0.05);
  CHECK(!triviality_probe({elliptic}).nontrivial);
  CHECK(std::abs(triviality_probe({elliptic}).slope) <= 1e-2);
  auto rc = triviality_probe({cob});
  CHECK(!rc.nontrivial);
  CHECK(rc.sup <= 4 * w.squaredNorm());
}
