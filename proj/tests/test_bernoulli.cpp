#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "lmean/arith.hpp"
#include "lmean/bernoulli.hpp"

using namespace lmean;

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(4) == Rational(-1, 30));
  CHECK(bernoulli_number(6) == Rational(1, 42));
  CHECK(bernoulli_number(8) == Rational(-1, 30));
  CHECK(bernoulli_number(10) == Rational(5, 66));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (int n = 3; n <= 19; n += 2) CHECK(bernoulli_number(n) == 0);
}

TEST_CASE("bernoulli polynomials") {
  // B_2(x) = x^2 - x + 1/6.
  CHECK(bernoulli_poly(2, Rational(1, 2)) == Rational(-1, 12));
  CHECK(bernoulli_poly(2, 0) == Rational(1, 6));
  CHECK(bernoulli_poly(3, 1) == 0);
  CHECK(bernoulli_poly(0, Rational(7, 3)) == 1);
  // B_n(0) = B_n; B_n(1) = B_n for n != 1.
  for (int n = 0; n <= 12; ++n) {
    CHECK(bernoulli_poly(n, 0) == bernoulli_number(n));
    if (n != 1) CHECK(bernoulli_poly(n, 1) == bernoulli_number(n));
  }
  CHECK(bernoulli_poly(1, 1) == Rational(1, 2));
  // Difference equation B_n(x+1) - B_n(x) = n x^(n-1).
  for (int n = 1; n <= 8; ++n)
    for (const Rational& x : {Rational(1, 3), Rational(-5, 7), Rational(2)})
      CHECK(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) ==
            n * pow_rat(x, n - 1));
}

TEST_CASE("fractional part") {
  CHECK(frac(Rational(7, 3)) == Rational(1, 3));
  CHECK(frac(Rational(-7, 3)) == Rational(2, 3));
  CHECK(frac(Rational(-2)) == 0);
  CHECK(frac(Rational(0)) == 0);
  CHECK(frac(Rational(9, 4)) == Rational(1, 4));
}

TEST_CASE("periodic bernoulli function") {
  CHECK(bernoulli_function(0, Rational(5, 7)) == 1);
  CHECK(bernoulli_function(1, 3) == 0);
  CHECK(bernoulli_function(1, Rational(1, 4)) == Rational(-1, 4));
  CHECK(bernoulli_function(1, Rational(-1, 4)) == Rational(1, 4));
  CHECK(bernoulli_function(2, Rational(5, 2)) == Rational(-1, 12));
  CHECK(bernoulli_function(2, 0) == Rational(1, 6));
  // Periodicity and reflection.
  for (int n = 1; n <= 8; ++n)
    for (const Rational& x :
         {Rational(0), Rational(1, 3), Rational(-7, 4), Rational(11, 6)}) {
      CHECK(bernoulli_function(n, x + 5) == bernoulli_function(n, x));
      CHECK(bernoulli_function(n, -x) ==
            parity_sign(n) * bernoulli_function(n, x));
    }
}

TEST_CASE("raabe multiplication formula") {
  CHECK(raabe_sum(2, 2, 1, 0) == Rational(1, 6));
  CHECK(raabe_sum(1, 3, 2, 0) == 0);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> num(-30, 30);
  std::uniform_int_distribution<long long> den(1, 15);
  for (int n = 1; n <= 8; ++n)
    for (long long a = 1; a <= 8; ++a)
      for (long long d : {1LL, 3LL, 4LL, 7LL}) {
        if (gcd(a, d) != 1) continue;
        Rational x(num(rng), den(rng));
        CHECK(raabe_sum(n, a, d, x) == bernoulli_function(n, a * x));
      }
  CHECK_THROWS_AS(raabe_sum(2, 4, 2, Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(raabe_sum(2, 0, 1, Rational(1, 3)), std::invalid_argument);
}

TEST_CASE("product expansion frozen values") {
  CHECK(product_expansion(1, 1, 1, 1, Rational(1, 3), 0, 0) ==
        Rational(1, 36));
  CHECK(product_expansion(2, 2, 1, -1, Rational(1, 5), 0, 0) ==
        Rational(1, 22500));
  // Both factors vanish at integer arguments; the correction term must make
  // the expansion vanish too.
  CHECK(product_expansion(1, 1, 1, 1, 0, 0, 0) == 0);
}

TEST_CASE("product expansion random grid") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-24, 24);
  std::uniform_int_distribution<long long> den(1, 12);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (long long a : {-3LL, -1LL, 2LL})
        for (long long b : {-2LL, 1LL, 3LL})
          for (int trial = 0; trial < 10; ++trial) {
            Rational x(num(rng), den(rng));
            Rational y(num(rng), den(rng));
            Rational z(num(rng), den(rng));
            Rational lhs = bernoulli_function(m, a * x + y) *
                           bernoulli_function(n, b * x + z);
            CHECK(lhs == product_expansion(m, n, a, b, x, y, z));
          }
  CHECK_THROWS_AS(product_expansion(1, 1, 0, 1, 0, 0, 0),
                  std::invalid_argument);
}

TEST_CASE("fourier partial sums") {
  // Truncation bound 2 n! / (2 pi)^n K^(1-n) / (n-1) for n >= 2.
  for (int n = 2; n <= 5; ++n)
    for (long long K : {100LL, 1000LL}) {
      Float50 bound = 2 * Float50(factorial(n)) / pow(2 * pi50(), n) *
                      pow(Float50(K), 1 - n) / (n - 1);
      for (const Rational& x : {Rational(0), Rational(1, 3), Rational(3, 8)}) {
        Float50 diff =
            abs(fourier_eval(n, x, K) - to_float50(bernoulli_function(n, x)));
        CHECK(diff <= bound);
      }
    }
  // n = 1 at non-integer x converges like 1/K.
  Float50 d14 = abs(fourier_eval(1, Rational(1, 4), 10000) -
                    to_float50(Rational(-1, 4)));
  CHECK(d14 <= 1e-3);
  // n = 1 at integer x: empty symmetric sum, exact 0.
  CHECK(fourier_eval(1, Rational(3), 500) == 0);
}
