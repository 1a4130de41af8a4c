#pragma once

#include <gmpxx.h>

#include <string>

namespace nilmult {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }

}  // namespace nilmult
