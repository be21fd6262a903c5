#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "gramrank/error.hpp"

namespace gramrank {

using BigInt = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) keeps the fraction as given; canonicalize here so that
// later comparisons and get_den() behave.
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  invariant(den != 0, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(const BigInt& n, unsigned long k) {
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

// Falling factorial n (n-1) ... (n-k+1).
inline BigInt falling(const BigInt& n, unsigned long k) {
  BigInt r = 1;
  for (unsigned long i = 0; i < k; i++) r *= n - static_cast<long>(i);
  return r;
}

inline long to_long(const BigInt& v, const std::string& what) {
  require(v.fits_slong_p(), what + " out of machine range");
  return v.get_si();
}

}  // namespace gramrank
