#pragma once
// Unbounded integer / exact rational aliases and small integer helpers.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace alterna {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the degenerate conventions the closed-form
// coefficient formulas rely on: C(n,0) = 1 for every integer n (negative
// included), C(n,k) = 0 for k < 0.  A negative n with k > 0 has no sensible
// value here and is treated as a logic error.
inline Int binom(long long n, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (n < 0) throw std::logic_error("binom: n < 0 with k > 0");
  if (k > n) return 0;
  Int r = 1;
  for (long long t = 0; t < k; ++t) {
    r *= Int(n - t);
    r /= Int(t + 1);  // exact at every step
  }
  return r;
}

inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || a % b != 0) throw std::logic_error("exact_div: not divisible");
  return a / b;
}

}  // namespace alterna
