#include <cmath>
#include <random>

#include "check.hpp"
#include "isoact/fock.hpp"
#include "isoact/rng.hpp"

using namespace isoact;

namespace {

cplx eval_poly(const FockTruncation& t, const Eigen::VectorXcd& c, const Eigen::VectorXcd& z) {
  cplx s = 0;
  for (int i = 0; i < t.size(); ++i) {
    cplx m = c(i);
    for (int k = 0; k < t.d(); ++k) m *= std::pow(z(k), t.exponent(i)[k]);
    s += m;
  }
  return s;
}

// the operator applied to the monomial z^e at the point z, straight from the formula
cplx exp_formula(const AffineIsometry& iso, const std::vector<int>& e, const Eigen::VectorXcd& z) {
  Eigen::VectorXcd w = iso.a * z + iso.gamma;
  cplx f = 1;
  for (std::size_t k = 0; k < e.size(); ++k) f *= std::pow(w(k), e[k]);
  Eigen::VectorXcd c = iso.a.inverse() * iso.gamma;
  cplx inner = 0;
  for (int k = 0; k < z.size(); ++k) inner += z(k) * std::conj(c(k));
  return f * std::exp(-inner - 0.5 * iso.gamma.squaredNorm());
}

SuMeasureT random_su_measure(std::mt19937_64& rng, int max_atoms) {
  int n = std::uniform_int_distribution<int>(1, max_atoms)(rng);
  std::vector<std::pair<SuMatrix, Rational>> atoms;
  std::vector<long> w(n);
  long total = 0;
  for (long& x : w) total += (x = std::uniform_int_distribution<long>(1, 5)(rng));
  for (int i = 0; i < n; ++i) atoms.emplace_back(random_su(rng, 0.5), frac(w[i], total));
  return SuMeasureT("SU(1,1)", atoms);
}

}  // namespace

TEST_CASE("Exp operator: identity and truncation limits") {
  FockTruncation t(2, 6);
  AffineIsometry e(Eigen::MatrixXcd::Identity(2, 2), Eigen::VectorXcd::Zero(2));
  CHECK((exp_operator(e, t) - Eigen::MatrixXcd::Identity(t.size(), t.size())).norm() == 0);
  CHECK(t.size() == 28);
  CHECK(t.half_block() == 10);
  CHECK_ERRC(FockTruncation(4, 5), Errc::truncation_overflow);
  CHECK_ERRC(FockTruncation(1, 15), Errc::truncation_overflow);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(1, 1) * 1.1;
  CHECK_ERRC(AffineIsometry(bad, Eigen::VectorXcd::Zero(1)), Errc::constraint_violation);
}

TEST_CASE("Exp operator: vacuum norm against the coherent-state series") {
  FockTruncation t(1, 12);
  Eigen::VectorXcd g(1);
  g(0) = 0.3;
  AffineIsometry iso(Eigen::MatrixXcd::Identity(1, 1), g);
  Eigen::VectorXcd col = exp_operator(iso, t).col(0);
  double norm2 = 0;
  for (int i = 0; i < t.size(); ++i) norm2 += std::norm(col(i)) * t.norm2(i);
  // e^{-|g|^2} sum_k |g|^{2k} / k!, truncated at N and in full
  double series = 0, term = 1;
  for (int k = 0; k <= 12; ++k, term *= 0.09 / k) series += term;
  series *= std::exp(-0.09);
  CHECK(std::abs(norm2 - series) <= 1e-14);
  CHECK(std::abs(norm2 - 1.0) <= 1e-8);
}

TEST_CASE("Exp operator matches pointwise evaluation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  for (int d : {1, 2, 3}) {
    FockTruncation t(d, d == 3 ? 10 : 12);
    for (int trial = 0; trial < 5; ++trial) {
      AffineIsometry iso = random_affine_isometry(rng, d);
      Eigen::MatrixXcd m = exp_operator(iso, t);
      Eigen::VectorXcd z(d);
      for (int k = 0; k < d; ++k) z(k) = cplx(u(rng), u(rng));
      for (int col = 0; col < t.half_block(); ++col)
        CHECK(std::abs(eval_poly(t, m.col(col), z) - exp_formula(iso, t.exponent(col), z)) <= 1e-8);
    }
  }
}

TEST_CASE("Fock multiplication law on the half block") {
  for (auto [d, n] : {std::pair{1, 12}, std::pair{2, 10}}) {
    FockTruncation t(d, n);
    double worst = 0, printed_worst = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::mt19937_64 rng = trial_rng(5, trial);
      AffineIsometry x = random_affine_isometry(rng, d), y = random_affine_isometry(rng, d);
      FockLawCheck r = fock_multiplication_check(x, y, t);
      worst = std::max(worst, r.residual);
      // the conjugate phase, as printed alongside the opposite exponent sign
      AffineIsometry xy(y.a * x.a, y.a * x.gamma + y.gamma);
      Eigen::MatrixXcd diff =
          t.orthonormal(exp_operator(x, t) * exp_operator(y, t) - std::conj(r.phase) * exp_operator(xy, t));
      int h = t.half_block();
      printed_worst = std::max(printed_worst, diff.topLeftCorner(h, h).cwiseAbs().maxCoeff());
    }
    CHECK(worst <= 1e-6);
    CHECK(printed_worst > 1e-3);
  }
}

TEST_CASE("Fock law across the sampled grid") {
  std::mt19937_64 rng(23);
  for (int d : {1, 2})
    for (int n : {10, 12, 14}) {
      FockTruncation t(d, n);
      for (int trial = 0; trial < 3; ++trial) {
        AffineIsometry x = random_affine_isometry(rng, d), y = random_affine_isometry(rng, d);
        CHECK(fock_multiplication_check(x, y, t).residual <= 1e-6);
      }
    }
}

TEST_CASE("L-parameters") {
  std::mt19937_64 rng(3);
  AffineModel<SuMatrix> model = bergman_model(30);
  SuMatrix g = random_su(rng, 0.5), h = random_su(rng, 0.5);
  LParams p = l_params(SuMeasureT::delta("SU(1,1)", g), model);
  CHECK((p.a - bergman_pi(g, 30)).norm() == 0);
  CHECK((p.b - bergman_gamma(g, 30)).norm() == 0);
  CHECK((p.c - bergman_gamma(g.inverse(), 30)).norm() == 0);
  CHECK(p.d == -gamma_norm2(g));

  LParams ph = l_params(SuMeasureT::delta("SU(1,1)", h), model);
  LParams avg = l_params(SuMeasureT("SU(1,1)", {{g, frac(1, 2)}, {h, frac(1, 2)}}), model);
  CHECK((avg.a - 0.5 * (p.a + ph.a)).norm() <= 1e-15);
  CHECK((avg.b - 0.5 * (p.b + ph.b)).norm() <= 1e-15);
  CHECK(std::abs(avg.d - 0.5 * (p.d + ph.d)) <= 1e-15);

  // operator norm in the weighted metric
  for (int i = 0; i < 20; ++i) {
    LParams q = l_params(random_su_measure(rng, 3), model);
    Eigen::VectorXd s = model.weights.cwiseSqrt();
    Eigen::MatrixXcd a = s.asDiagonal() * q.a * s.cwiseInverse().asDiagonal();
    CHECK(Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues()(0) <= 1 + 1e-12);
  }

  AffineModel<SuMatrix> partial = model;
  partial.at = [](const SuMatrix& x) {
    ActionIngredients ing;
    ing.gamma = bergman_gamma(x, 4);
    return ing;
  };
  CHECK_ERRC(l_params(SuMeasureT::delta("SU(1,1)", g), partial), Errc::missing_ingredient);
}

TEST_CASE("Tree action: c recovered from b and pi") {
  FreeGroupTree t(2, {1, frac(3, 2)}, 12);
  FreeWord x0 = FreeWord::generator(1);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    std::vector<int> letters;
    int len = std::uniform_int_distribution<int>(0, 5)(rng);
    for (int k = 0; k < len; ++k) {
      int a = std::uniform_int_distribution<int>(1, 2)(rng);
      letters.push_back(std::bernoulli_distribution(0.5)(rng) ? a : -a);
    }
    FreeWord g = FreeWord::reduce(letters, 2);
    FreeEdgeVector c = canonical_gamma(t, g.inverse(), 1, x0);
    FreeEdgeVector b = canonical_gamma(t, g, 1, x0);
    CHECK(c == translate(t, g.inverse(), b) * Rational(-1));
  }
  AffineModel<FreeWord> model = tree_model(t, 1, x0, 4);
  FreeWord g = FreeWord::reduce(std::vector<int>{1, 2, -1}, 2);
  LParams p = l_params(WordMeasure::delta("F_2", g), model);
  LParams q = l_params(WordMeasure::delta("F_2", g.inverse()), model);
  CHECK((p.c - q.b).norm() == 0);
  CHECK((p.c + l_params(WordMeasure::delta("F_2", g.inverse()), model).a * p.b).norm() <= 1e-15);
  CHECK(p.d == -edge_pairing(t, canonical_gamma(t, g, 1, x0), canonical_gamma(t, g, 1, x0)).get_d());
}

TEST_CASE("sigma vanishes for the real tree action") {
  FreeGroupTree t = FreeGroupTree::unit(2, 12);
  AffineModel<FreeWord> model = tree_model(t, 1, FreeWord(), 4);
  std::vector<FreeWord> ws = free_ball(2, 2);
  for (const FreeWord& g : ws)
    for (const FreeWord& h : ws) {
      WordMeasure mu("F_2", {{g, frac(1, 3)}, {h, frac(2, 3)}}), nu = WordMeasure::delta("F_2", h);
      CHECK(sigma_measures(mu, nu, model, Side::left) == 0.0);
      CHECK(sigma_measures(mu, nu, model, Side::right) == 0.0);
    }
}

TEST_CASE("sigma on SU(1,1)") {
  SuMeasureT e = SuMeasureT::delta("SU(1,1)", SuMatrix::identity());
  CHECK(sigma_su11(e, e) == 0);
  AffineModel<SuMatrix> model = bergman_model(200);
  CHECK(sigma_measures(e, e, model, Side::right) == 0);

  std::mt19937_64 rng(17);
  double worst = 0, worst_left = 0;
  for (int i = 0; i < 100; ++i) {
    SuMeasureT mu = random_su_measure(rng, 3), nu = random_su_measure(rng, 3), rho = random_su_measure(rng, 3);
    SuMeasureT mn = convolve_su(mu, nu), nr = convolve_su(nu, rho);
    double r = sigma_su11(mu, nu) + sigma_su11(mn, rho) - sigma_su11(nu, rho) - sigma_su11(mu, nr);
    worst = std::max(worst, std::abs(r));
    if (i < 10) {
      // truncated vectors agree with the closed form
      CHECK(std::abs(sigma_measures(mu, nu, model, Side::right) - sigma_su11(mu, nu)) <= 1e-8);
      double l = sigma_measures(mu, nu, model, Side::left) + sigma_measures(mn, rho, model, Side::left) -
                 sigma_measures(nu, rho, model, Side::left) - sigma_measures(mu, nr, model, Side::left);
      worst_left = std::max(worst_left, std::abs(l));
    }
  }
  CHECK(worst <= 1e-8);
  CHECK(worst_left > 1e-3);  // the pairing order has to follow the side of the action

  // biadditivity in the weights
  SuMatrix g = random_su(rng, 0.5), h = random_su(rng, 0.5), k = random_su(rng, 0.5);
  SuMeasureT mix("SU(1,1)", {{g, frac(1, 4)}, {h, frac(3, 4)}}), nu = SuMeasureT::delta("SU(1,1)", k);
  double lhs = sigma_su11(mix, nu);
  double rhs = 0.25 * sigma_su11(SuMeasureT::delta("SU(1,1)", g), nu) + 0.75 * sigma_su11(SuMeasureT::delta("SU(1,1)", h), nu);
  CHECK(std::abs(lhs - rhs) <= 1e-15);
}

TEST_CASE("lattice sigma") {
  auto delta = [](LatticeVector v) { return LatticeMeasure::delta("Z^2", v); };
  CHECK(lattice_sigma(delta({1, 0}), delta({0, 1})) == -1);
  CHECK(lattice_sigma(delta({3, -2}), delta({3, -2})) == 0);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> c(-4, 4);
  auto rv = [&] { return LatticeVector{c(rng), c(rng), c(rng), c(rng)}; };
  for (int i = 0; i < 50; ++i) {
    LatticeVector a = rv(), b = rv(), v = rv();
    LatticeMeasure mu("Z^4", {{a, frac(1, 3)}, {b, frac(2, 3)}}), nu = LatticeMeasure::delta("Z^4", v);
    Rational want = frac(1, 3) * lattice_im_inner(a, v) + frac(2, 3) * lattice_im_inner(b, v);
    CHECK(lattice_sigma(mu, nu) == want);
    CHECK(lattice_sigma(nu, mu) == -want);
  }
  CHECK_ERRC(lattice_sigma(delta({1, 0}), LatticeMeasure::delta("Z^4", {1, 0, 0, 0})), Errc::group_mismatch);
}
