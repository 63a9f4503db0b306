#pragma once

#include <utility>
#include <vector>

#include "lmean/rational.hpp"

namespace lmean {

// Prime factorization of a positive integer: ordered (prime, exponent) pairs,
// primes strictly increasing, exponents >= 1, empty exactly for n = 1.
struct Factorization {
  long long n = 1;
  std::vector<std::pair<long long, int>> factors;
};

// Deterministic trial division; n >= 1.
Factorization factorize(long long n);

// Moebius function: 0 if n has a squared prime factor, else (-1)^(#primes).
int moebius(long long n);

// Euler totient.
long long euler_phi(long long n);

// Jordan totient J_k(q) = q^k prod_{p|q} (1 - p^-k) as an exact integer for
// k >= 1. J_0(q) is defined as the q = 1 indicator so the Moebius divisor-sum
// identity sum_{d|q} mu(q/d) d^k = J_k(q) holds verbatim at k = 0.
Int jordan_totient(int k, long long q);

// All divisors of n, ascending.
std::vector<long long> divisors(long long n);

// Non-negative gcd; (0, 0) rejected.
long long gcd(long long a, long long b);

}  // namespace lmean
