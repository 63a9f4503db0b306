#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "lmean/arith.hpp"

using namespace lmean;

TEST_CASE("integer and rational powers") {
  CHECK(pow_int(2, 10) == 1024);
  CHECK(pow_int(-3, 3) == -27);
  CHECK(pow_int(7, 0) == 1);
  CHECK(pow_rat(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_rat(Rational(2), -3) == Rational(1, 8));
  CHECK(pow_rat(Rational(-1, 2), 2) == Rational(1, 4));
  CHECK(pow_rat(Rational(5), 0) == 1);
}

TEST_CASE("floor division") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("factorials and binomials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(6, -1) == 0);
  // Pascal identity on a block.
  for (int n = 1; n <= 20; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("factorization") {
  Factorization f = factorize(360);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::pair<long long, int>{2, 3});
  CHECK(f.factors[1] == std::pair<long long, int>{3, 2});
  CHECK(f.factors[2] == std::pair<long long, int>{5, 1});
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(97).factors.size() == 1);
  // Recompose.
  for (long long n = 1; n <= 500; ++n) {
    Int prod = 1;
    for (auto [p, e] : factorize(n).factors) prod *= pow_int(p, e);
    CHECK(prod == n);
  }
}

TEST_CASE("moebius") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(2) == -1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  // sum_{d|n} mu(d) = [n = 1].
  for (long long n = 1; n <= 200; ++n) {
    int s = 0;
    for (long long d : divisors(n)) s += moebius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(100) == 40);
  // Count coprime residues directly.
  for (long long n = 1; n <= 100; ++n) {
    long long count = 0;
    for (long long a = 1; a <= n; ++a)
      if (gcd(a, n) == 1) ++count;
    CHECK(euler_phi(n) == count);
  }
}

TEST_CASE("jordan totient") {
  CHECK(jordan_totient(0, 1) == 1);
  CHECK(jordan_totient(0, 5) == 0);
  CHECK(jordan_totient(2, 4) == 12);
  CHECK(jordan_totient(4, 4) == 240);
  CHECK(jordan_totient(2, 12) == 96);
  CHECK(jordan_totient(6, 3) == 728);
  CHECK(jordan_totient(8, 3) == 6560);
  for (long long q = 1; q <= 50; ++q)
    CHECK(jordan_totient(1, q) == euler_phi(q));
}

TEST_CASE("moebius divisor sum equals jordan totient") {
  for (long long q = 1; q <= 50; ++q)
    for (int k = 0; k <= 6; ++k) {
      Int s = 0;
      for (long long d : divisors(q)) s += moebius(q / d) * pow_int(d, k);
      CHECK(s == jordan_totient(k, q));
    }
}

TEST_CASE("divisors") {
  CHECK(divisors(1) == std::vector<long long>{1});
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(49) == std::vector<long long>{1, 7, 49});
}

TEST_CASE("gcd") {
  CHECK(gcd(0, 5) == 5);
  CHECK(gcd(5, 0) == 5);
  CHECK(gcd(-4, 6) == 2);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(7, 13) == 1);
  CHECK_THROWS_AS(gcd(0, 0), std::invalid_argument);
}
