#include "isoact/su11.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "isoact/error.hpp"

namespace isoact {

SuMatrix SuMatrix::from_params(cplx a, cplx b, double tol) {
  double na = std::norm(a), nb = std::norm(b);
  if (!std::isfinite(na) || !std::isfinite(nb) || std::abs(na - nb - 1.0) > tol * (na + nb))
    fail(Errc::constraint_violation, "|a|^2 - |b|^2 != 1");
  return SuMatrix(a, b);
}

SuMatrix SuMatrix::boost(double t) { return SuMatrix(std::cosh(t), std::sinh(t)); }

SuMatrix SuMatrix::rotation(double theta) { return SuMatrix(std::polar(1.0, theta / 2), 0.0); }

cplx SuMatrix::apply(cplx z) const { return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_)); }

double SuMatrix::constraint_residual() const {
  double na = std::norm(a_), nb = std::norm(b_);
  return std::abs(na - nb - 1.0) / (na + nb);
}

SuMatrix operator*(const SuMatrix& g, const SuMatrix& h) {
  return SuMatrix(g.a_ * h.a_ + g.b_ * std::conj(h.b_), g.a_ * h.b_ + g.b_ * std::conj(h.a_));
}

bool SuLess::operator()(const SuMatrix& x, const SuMatrix& y) const {
  return std::make_tuple(x.a().real(), x.a().imag(), x.b().real(), x.b().imag()) <
         std::make_tuple(y.a().real(), y.a().imag(), y.b().real(), y.b().imag());
}

SuMatrix random_su(std::mt19937_64& rng, double ratio_max) {
  std::uniform_real_distribution<double> ang(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> rat(0.0, ratio_max);
  double r = std::atanh(rat(rng));
  double th = ang(rng), ph = ang(rng);
  return SuMatrix::from_params(std::polar(std::cosh(r), th), std::polar(std::sinh(r), ph));
}

}  // namespace isoact
