#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lmean {

// Exact scalars used everywhere below the CLI. Rational is always reduced,
// denominator > 0 (maintained by the backend).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 50-decimal-digit float, used only for decimal rendering and for the
// Fourier diagnostic where double precision cannot reach the required bound.
using Float50 = boost::multiprecision::cpp_bin_float_50;

// base^exp, exp >= 0.
Int pow_int(const Int& base, int exp);
Rational pow_rat(const Rational& base, int exp);

// floor(n / d) for d > 0.
Int floor_div(const Int& n, const Int& d);

// n! as an exact integer, memoized; n >= 0.
Int factorial(int n);

// binomial(n, k) exact; 0 when k < 0 or k > n.
Int binomial(int n, int k);

Float50 to_float50(const Rational& x);
const Float50& pi50();

// (-1)^k for any integer k (negative allowed).
inline int parity_sign(long long k) { return (k % 2 != 0) ? -1 : 1; }

}  // namespace lmean
