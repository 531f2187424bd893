#include "isoact/rational.hpp"

#include <cctype>

#include "isoact/error.hpp"

namespace isoact {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  size_t slash = s.find('/');
  bool ok = slash == std::string::npos ? all_digits(s, start, s.size())
                                       : all_digits(s, start, slash) && all_digits(s, slash + 1, s.size());
  if (!ok) fail(Errc::invalid_encoding, "not an exact rational: '" + s + "'");
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    Integer den(s.substr(slash + 1));
    if (den == 0) fail(Errc::invalid_encoding, "zero denominator in '" + s + "'");
    q = Rational(Integer(s.substr(0, slash)), den);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, long e) {
  Rational b = e >= 0 ? base : Rational(1) / base;
  unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), b.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), b.get_den_mpz_t(), k);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long padic_valuation(const Integer& x, long p) {
  Integer y = abs(x);
  long v = 0;
  Integer q, r;
  while (true) {
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(p));
    if (r != 0) break;
    y = q;
    ++v;
  }
  return v;
}

Valuation padic_valuation(const Rational& x, long p) {
  if (!is_prime(p)) fail(Errc::constraint_violation, "p must be prime");
  if (x == 0) return std::nullopt;
  return padic_valuation(Integer(x.get_num()), p) - padic_valuation(Integer(x.get_den()), p);
}

PAdicScalar::PAdicScalar(Rational v, long prime) : value(std::move(v)), p(prime) {
  if (!is_prime(p)) fail(Errc::constraint_violation, "p must be prime");
}

Rational PAdicScalar::abs() const {
  auto v = valuation();
  if (!v) return 0;
  return rational_pow(Rational(p), -*v);
}

}  // namespace isoact
