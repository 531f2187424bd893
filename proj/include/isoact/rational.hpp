#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace isoact {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p" or "p/q"; anything else (decimals, exponents) is rejected.
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
Rational rational_pow(const Rational& base, long e);
inline double to_double(const Rational& q) { return q.get_d(); }

// nullopt stands for +infinity (the valuation of zero).
using Valuation = std::optional<long>;

bool is_prime(long p);
Valuation padic_valuation(const Rational& x, long p);
long padic_valuation(const Integer& x, long p);  // x != 0

struct PAdicScalar {
  Rational value;
  long p;

  PAdicScalar(Rational v, long prime);
  Valuation valuation() const { return padic_valuation(value, p); }
  Rational abs() const;  // p^{-v}, 0 for 0
};

}  // namespace isoact
