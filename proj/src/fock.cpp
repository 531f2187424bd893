#include "isoact/fock.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <map>
#include <memory>

namespace isoact {

AffineIsometry::AffineIsometry(Eigen::MatrixXcd a_, Eigen::VectorXcd gamma_) : a(std::move(a_)), gamma(std::move(gamma_)) {
  if (a.rows() != a.cols() || a.rows() != gamma.size())
    fail(Errc::constraint_violation, "linear part and translation have mismatched sizes");
  int d = static_cast<int>(a.rows());
  double err = (a.adjoint() * a - Eigen::MatrixXcd::Identity(d, d)).norm();
  if (err > 1e-10) fail(Errc::constraint_violation, "linear part is not unitary (residual " + std::to_string(err) + ")");
}

AffineIsometry random_affine_isometry(std::mt19937_64& rng, int d, double gamma_max) {
  std::normal_distribution<double> g(0, 1);
  std::uniform_real_distribution<double> u(0, 1);
  Eigen::MatrixXcd z(d, d);
  Eigen::VectorXcd v(d);
  for (int r = 0; r < d; ++r) {
    v(r) = cplx(g(rng), g(rng));
    for (int c = 0; c < d; ++c) z(r, c) = cplx(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  v *= gamma_max * u(rng) / v.norm();
  return AffineIsometry(q, v);
}

FockTruncation::FockTruncation(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 0) fail(Errc::precondition_violation, "truncation needs d >= 1 and N >= 0");
  if (d > 3 || n > 14) fail(Errc::truncation_overflow, "truncation limited to d <= 3, N <= 14");
  // graded order: all exponents of degree k before degree k+1
  for (int deg = 0; deg <= n; ++deg) {
    std::vector<int> e(d, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == d - 1) {
        e[i] = left;
        exps_.push_back(e);
        return;
      }
      for (int k = left; k >= 0; --k) {
        e[i] = k;
        rec(i + 1, left - k);
      }
    };
    rec(0, deg);
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < size(); ++i) {
    index[exps_[i]] = i;
    int deg = 0;
    double f = 1;
    for (int x : exps_[i]) {
      deg += x;
      f *= std::tgamma(x + 1.0);
    }
    degree_.push_back(deg);
    norm2_.push_back(f);
  }
  product_.assign(size(), {});
  for (int i = 0; i < size(); ++i) {
    product_[i].assign(size(), -1);
    for (int j = 0; j < size(); ++j) {
      if (degree_[i] + degree_[j] > n) continue;
      std::vector<int> s(d);
      for (int k = 0; k < d; ++k) s[k] = exps_[i][k] + exps_[j][k];
      product_[i][j] = index.at(s);
    }
  }
}

int FockTruncation::half_block() const {
  int c = 0;
  while (c < size() && 2 * degree_[c] <= n_) ++c;
  return c;
}

Eigen::VectorXcd FockTruncation::multiply(const Eigen::VectorXcd& p, const Eigen::VectorXcd& q) const {
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(size());
  for (int i = 0; i < size(); ++i) {
    if (p(i) == 0.0) continue;
    for (int j = 0; j < size(); ++j) {
      int k = product_[i][j];
      if (k >= 0 && q(j) != 0.0) out(k) += p(i) * q(j);
    }
  }
  return out;
}

Eigen::MatrixXcd FockTruncation::orthonormal(const Eigen::MatrixXcd& m) const {
  Eigen::MatrixXcd out = m;
  for (int r = 0; r < size(); ++r)
    for (int c = 0; c < size(); ++c) out(r, c) *= std::sqrt(norm2_[r] / norm2_[c]);
  return out;
}

Eigen::MatrixXcd exp_operator(const AffineIsometry& iso, const FockTruncation& t) {
  int d = t.d(), n = t.n(), m = t.size();
  if (iso.gamma.size() != d) fail(Errc::constraint_violation, "isometry dimension differs from the truncation");
  Eigen::VectorXcd c = iso.a.lu().solve(iso.gamma);

  auto linear = [&](cplx constant, const Eigen::VectorXcd& coeff) {
    Eigen::VectorXcd p = Eigen::VectorXcd::Zero(m);
    p(0) = constant;
    if (n >= 1)
      for (int j = 0; j < d; ++j) p(1 + j) = coeff(j);  // degree-one block is z_1..z_d in order
    return p;
  };
  Eigen::VectorXcd one = Eigen::VectorXcd::Zero(m);
  one(0) = 1;

  // exp(-<z, c>) truncated
  Eigen::VectorXcd lin = linear(0.0, -c.conjugate());
  Eigen::VectorXcd weight = one, term = one;
  for (int k = 1; k <= n; ++k) {
    term = t.multiply(term, lin) / double(k);
    weight += term;
  }
  weight *= std::exp(-0.5 * iso.gamma.squaredNorm());

  // powers of (A z + gamma)_i
  std::vector<std::vector<Eigen::VectorXcd>> pw(d);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXcd li = linear(iso.gamma(i), iso.a.row(i).transpose());
    pw[i].push_back(one);
    for (int k = 1; k <= n; ++k) pw[i].push_back(t.multiply(pw[i].back(), li));
  }

  Eigen::MatrixXcd out(m, m);
  for (int col = 0; col < m; ++col) {
    Eigen::VectorXcd f = weight;
    for (int i = 0; i < d; ++i)
      if (t.exponent(col)[i] > 0) f = t.multiply(f, pw[i][t.exponent(col)[i]]);
    out.col(col) = f;
  }
  return out;
}

FockLawCheck fock_multiplication_check(const AffineIsometry& x, const AffineIsometry& y, const FockTruncation& t) {
  Eigen::VectorXcd shifted = y.a.lu().solve(y.gamma);
  // Eigen's dot conjugates its left operand, so <u, v> = v.dot(u)
  double im = shifted.dot(x.gamma).imag();
  FockLawCheck out;
  out.phase = std::exp(cplx(0, -im));
  AffineIsometry xy(y.a * x.a, y.a * x.gamma + y.gamma);
  Eigen::MatrixXcd lhs = exp_operator(x, t) * exp_operator(y, t);
  Eigen::MatrixXcd rhs = out.phase * exp_operator(xy, t);
  int h = t.half_block();
  Eigen::MatrixXcd diff = t.orthonormal(lhs - rhs).topLeftCorner(h, h);
  out.residual = Eigen::JacobiSVD<Eigen::MatrixXcd>(diff).singularValues()(0);
  return out;
}

double sigma_su11(const SuMeasureT& mu, const SuMeasureT& nu) {
  double s = 0;
  for (const auto& [g, p] : mu.atoms())
    for (const auto& [h, q] : nu.atoms()) s += Rational(p * q).get_d() * gamma_gram(g, h.inverse()).imag();
  return s;
}

SuMeasureT convolve_su(const SuMeasureT& mu, const SuMeasureT& nu) {
  return mu.convolve(nu, [](const SuMatrix& g, const SuMatrix& h) { return g * h; });
}

AffineModel<SuMatrix> bergman_model(int n) {
  AffineModel<SuMatrix> m;
  m.weights.resize(n + 1);
  for (int k = 0; k <= n; ++k) m.weights(k) = 1.0 / (k + 1);
  m.at = [n](const SuMatrix& g) {
    ActionIngredients ing;
    ing.pi = bergman_pi(g, n);
    ing.gamma = bergman_gamma(g, n);
    ing.gamma_inv = bergman_gamma(g.inverse(), n);
    ing.norm2 = gamma_norm2(g);
    return ing;
  };
  return m;
}

AffineModel<FreeWord> tree_model(const FreeGroupTree& t, const Rational& s, const FreeWord& x0, int radius) {
  auto keys = std::make_shared<std::map<FreeWord, int>>();
  std::vector<double> w;
  for (const FreeWord& k : free_ball(t.rank(), radius)) {
    if (k.empty()) continue;
    keys->emplace(k, static_cast<int>(w.size()));
    w.push_back(t.letter_length(k.back()).get_d());
  }
  AffineModel<FreeWord> m;
  m.weights = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
  int n = static_cast<int>(w.size());
  auto dense = [keys, n, radius](const FreeEdgeVector& v) {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (const auto& [k, x] : v.w) {
      auto it = keys->find(k);
      if (it == keys->end()) fail(Errc::window_too_small, "cocycle leaves the ball of radius " + std::to_string(radius));
      out(it->second) = x.get_d();
    }
    return out;
  };
  m.at = [=](const FreeWord& g) {
    ActionIngredients ing;
    Eigen::MatrixXcd pi = Eigen::MatrixXcd::Zero(n, n);
    for (const auto& [k, col] : *keys) {
      FreeWord a = g * k.drop_last(), b = g * k;
      bool up = b.length() > a.length();
      auto it = keys->find(up ? b : a);
      if (it != keys->end()) pi(it->second, col) = up ? 1.0 : -1.0;
    }
    ing.pi = pi;
    FreeEdgeVector gg = canonical_gamma(t, g, s, x0);
    ing.gamma = dense(gg);
    ing.gamma_inv = dense(canonical_gamma(t, g.inverse(), s, x0));
    ing.norm2 = edge_pairing(t, gg, gg).get_d();
    return ing;
  };
  return m;
}

Rational lattice_im_inner(const LatticeVector& u, const LatticeVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0) fail(Errc::group_mismatch, "lattice vectors of different rank");
  std::size_t n = u.size() / 2;
  Rational s = 0;
  // u = x + i y, v = p + i q: Im(u conj v) = y p - x q
  for (std::size_t k = 0; k < n; ++k) s += Rational(u[n + k]) * v[k] - Rational(u[k]) * v[n + k];
  return s;
}

Rational lattice_sigma(const LatticeMeasure& mu, const LatticeMeasure& nu) {
  if (mu.group() != nu.group()) fail(Errc::group_mismatch, mu.group() + " vs " + nu.group());
  Rational s = 0;
  for (const auto& [u, p] : mu.atoms())
    for (const auto& [v, q] : nu.atoms()) s += p * q * lattice_im_inner(u, v);
  return s;
}

}  // namespace isoact
