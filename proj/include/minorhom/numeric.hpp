#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace minorhom {

// Arbitrary-precision integers and rationals.  Intermediate entries in integer
// elimination grow far beyond 64 bits even on small inputs, so these are used
// for all exact matrix work.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// Quotient q minimizing |a - q*b|, ties broken toward the smaller quotient.
// Used to keep remainders small during integer elimination.
inline Int balanced_quotient(const Int& a, const Int& b) {
  Int q = a / b;  // truncated
  Int r = a - q * b;
  if (r == 0) return q;
  Int babs = abs_int(b);
  // Candidates q and q +/- 1; pick the one with the smaller remainder.
  Int q2 = (r > 0) == (b > 0) ? Int(q + 1) : Int(q - 1);
  Int r2 = a - q2 * b;
  if (abs_int(r2) < abs_int(r)) return q2;
  return q;
}

inline Int binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  Int out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

}  // namespace minorhom
