#pragma once

#include "lmean/rational.hpp"

namespace lmean {

// Bernoulli number B_n, convention B_1 = -1/2. Memoized, safe for concurrent
// callers.
Rational bernoulli_number(int n);

// Bernoulli polynomial B_n(x) = sum_k C(n,k) B_k x^(n-k), exact.
Rational bernoulli_poly(int n, const Rational& x);

// Fractional part with floor convention: result in [0, 1), x - result integer.
Rational frac(const Rational& x);

// Periodic Bernoulli function: B̄_0 = 1; B̄_1(x) = 0 at integers, else
// B_1({x}); B̄_n(x) = B_n({x}) for n >= 2. Values memoized.
Rational bernoulli_function(int n, const Rational& x);

// a^(n-1) sum_{l=0}^{a-1} B̄_n(x + d l / a); equals B̄_n(a x) when
// gcd(a, d) = 1 (multiplication formula over a complete residue system).
// Requires a >= 1 and gcd(a, d) = 1.
Rational raabe_sum(int n, long long a, long long d, const Rational& x);

// Full right-hand side of the two-factor product expansion of
// B̄_m(ax+y) B̄_n(bx+z): the two reduction sums, the gcd-scaled B̄_{m+n}
// term, and the -delta_{1,m} delta_{1,n} sgn(ab) delta_Z(ax+y) delta_Z(bx+z)/4
// correction. Requires m, n >= 1 and a, b nonzero.
Rational product_expansion(int m, int n, long long a, long long b,
                           const Rational& x, const Rational& y,
                           const Rational& z);

// Symmetric partial Fourier sum -n!/(2 pi i)^n sum'_{|k|<=K} e^(2 pi i k x)/k^n
// accumulated in descending |k| order. Phases are reduced exactly (k x mod 1 as
// a rational) and the accumulation runs in 50-digit floats: the acceptance
// truncation bound at large (n, K) sits far below double ulp, so a double
// accumulator cannot meet it. The imaginary part cancels by the +-k pairing;
// it is asserted below 1e-12 before the real part is returned. For n = 1 and
// integer x the symmetric sum is identically 0 (principal value).
Float50 fourier_eval(int n, const Rational& x, long long K);

}  // namespace lmean
