#pragma once

#include <complex>
#include <random>

namespace isoact {

using cplx = std::complex<double>;

// g = (a b; conj(b) conj(a)) with |a|^2 - |b|^2 = 1, acting on the disc by
// z -> (a z + b) / (conj(b) z + conj(a)).
class SuMatrix {
 public:
  SuMatrix() : a_(1.0), b_(0.0) {}

  // The constraint is checked relative to |a|^2 + |b|^2 so that large boosts,
  // whose double entries cannot satisfy it absolutely, stay representable.
  static SuMatrix from_params(cplx a, cplx b, double tol = 1e-12);
  static SuMatrix identity() { return {}; }
  static SuMatrix boost(double t);
  static SuMatrix rotation(double theta);  // z -> e^{i theta} z

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  SuMatrix inverse() const { return SuMatrix(std::conj(a_), -b_); }
  cplx apply(cplx z) const;
  double trace() const { return 2.0 * a_.real(); }
  double constraint_residual() const;

  friend SuMatrix operator*(const SuMatrix& g, const SuMatrix& h);
  friend bool operator==(const SuMatrix&, const SuMatrix&) = default;

 private:
  SuMatrix(cplx a, cplx b) : a_(a), b_(b) {}
  cplx a_, b_;
};

// Strict weak order on the entries; used to key measures.
struct SuLess {
  bool operator()(const SuMatrix& x, const SuMatrix& y) const;
};

// Uniform rotation parts, |b/a| uniform in [0, ratio_max].
SuMatrix random_su(std::mt19937_64& rng, double ratio_max);

}  // namespace isoact
