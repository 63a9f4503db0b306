#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "lmean/characters.hpp"
#include "lmean/lvalues.hpp"
#include "lmean/rational.hpp"

using namespace lmean;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kCatalan = 0.91596559417721901505;
constexpr double kApery = 1.20205690315959428540;
constexpr double kEulerGamma = 0.57721566490153286061;

bool is_real_character(const DirichletCharacter& chi) {
  return chi.group->character_index(conjugate(chi)) ==
         chi.group->character_index(chi);
}

}  // namespace

TEST_CASE("hurwitz zeta frozen values") {
  CHECK(std::fabs(hurwitz_zeta(2, Rational(1)) - kPi * kPi / 6) < 1e-12);
  CHECK(std::fabs(hurwitz_zeta(2, Rational(1, 2)) - kPi * kPi / 2) < 1e-12);
  CHECK(std::fabs(hurwitz_zeta(3, Rational(1)) - kApery) < 1e-12);
  CHECK(std::fabs(hurwitz_zeta(4, Rational(1)) -
                  kPi * kPi * kPi * kPi / 90) < 1e-12);
  // zeta(2, 1/4) = pi^2 + 8 * Catalan.
  CHECK(std::fabs(hurwitz_zeta(2, Rational(1, 4)) -
                  (kPi * kPi + 8 * kCatalan)) < 1e-11);
}

TEST_CASE("hurwitz zeta identities") {
  // zeta(m, 1/2) = (2^m - 1) zeta(m).
  for (int m = 2; m <= 6; ++m) {
    double lhs = hurwitz_zeta(m, Rational(1, 2));
    double rhs = (std::pow(2.0, m) - 1.0) * hurwitz_zeta(m, Rational(1));
    CHECK(std::fabs(lhs - rhs) < 1e-10);
  }
  // Multiplication: sum_{j<a} zeta(m, (x+j)/a) = a^m zeta(m, x).
  for (int m = 2; m <= 4; ++m)
    for (const Rational& x :
         {Rational(1, 3), Rational(2, 5), Rational(7, 8), Rational(1)}) {
      const int a = 3;
      double lhs = 0.0;
      for (int j = 0; j < a; ++j)
        lhs += hurwitz_zeta(m, (x + j) / a);
      double rhs = std::pow(static_cast<double>(a), m) * hurwitz_zeta(m, x);
      CHECK(std::fabs(lhs - rhs) < 1e-9);
    }
}

TEST_CASE("hurwitz zeta domain") {
  CHECK_THROWS_AS(hurwitz_zeta(1, Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(hurwitz_zeta(2, Rational(-1, 3)), std::invalid_argument);
}

TEST_CASE("digamma frozen values") {
  CHECK(std::fabs(digamma(Rational(1)) + kEulerGamma) < 1e-12);
  CHECK(std::fabs(digamma(Rational(2)) - (1 - kEulerGamma)) < 1e-12);
  double log2 = std::log(2.0);
  CHECK(std::fabs(digamma(Rational(1, 2)) - (-kEulerGamma - 2 * log2)) <
        1e-12);
  CHECK(std::fabs(digamma(Rational(1, 4)) -
                  (-kEulerGamma - kPi / 2 - 3 * log2)) < 1e-12);
  CHECK(std::fabs(digamma(Rational(3, 2)) - (2 - kEulerGamma - 2 * log2)) <
        1e-12);
}

TEST_CASE("digamma recurrence") {
  for (const Rational& x : {Rational(1, 3), Rational(3, 7), Rational(5, 2),
                            Rational(99, 4), Rational(100, 3)}) {
    double lhs = digamma(x + 1);
    double rhs = digamma(x) + (Rational(1) / x).convert_to<double>();
    CHECK(std::fabs(lhs - rhs) < 3e-12);
  }
  CHECK_THROWS_AS(digamma(Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(digamma(Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("l-value frozen values") {
  // Odd quadratic character mod 4: L(1) = pi/4, L(2) = Catalan,
  // L(3) = pi^3/32.
  auto g4 = character_group(4);
  DirichletCharacter chi4 = g4->character(1);
  REQUIRE(parity(chi4) == -1);
  ComplexApprox l1 = l_value(1, chi4);
  CHECK(std::fabs(l1.re - kPi / 4) < 1e-10);
  CHECK(std::fabs(l1.im) < 1e-12);
  CHECK(l1.err <= 1e-10);
  ComplexApprox l2 = l_value(2, chi4);
  CHECK(std::fabs(l2.re - kCatalan) < 1e-10);
  ComplexApprox l3 = l_value(3, chi4);
  CHECK(std::fabs(l3.re - kPi * kPi * kPi / 32) < 1e-10);

  // Quadratic character mod 3: L(1) = pi/(3 sqrt 3), L(3) = 4 pi^3/(81
  // sqrt 3).
  auto g3 = character_group(3);
  DirichletCharacter chi3 = g3->character(1);
  REQUIRE(parity(chi3) == -1);
  CHECK(std::fabs(l_value(1, chi3).re - kPi / (3 * std::sqrt(3.0))) < 1e-10);
  CHECK(std::fabs(l_value(3, chi3).re -
                  4 * kPi * kPi * kPi / (81 * std::sqrt(3.0))) < 1e-10);

  // Principal characters: L(m, chi_0 mod q) = zeta(m) prod_{p|q} (1-p^-m).
  auto g1 = character_group(1);
  CHECK(std::fabs(l_value(2, g1->principal()).re - kPi * kPi / 6) < 1e-10);
  CHECK(std::fabs(l_value(2, g4->principal()).re - kPi * kPi / 8) < 1e-10);
}

TEST_CASE("l-value domain") {
  auto g5 = character_group(5);
  CHECK_THROWS_AS(l_value(0, g5->character(1)), std::invalid_argument);
  CHECK_THROWS_AS(l_value(1, g5->principal()), std::invalid_argument);
  CHECK_THROWS_AS(l_value(1, character_group(1)->principal()),
                  std::invalid_argument);
}

TEST_CASE("conjugate symmetry and real characters") {
  for (long long q : {3LL, 5LL, 7LL, 12LL, 16LL, 20LL}) {
    auto g = character_group(q);
    for (std::size_t i = 0; i < g->size(); ++i) {
      DirichletCharacter chi = g->character(i);
      for (int m = 1; m <= 3; ++m) {
        if (m == 1 && is_principal(chi)) continue;
        ComplexApprox a = l_value(m, chi);
        ComplexApprox b = l_value(m, conjugate(chi));
        CHECK(std::fabs(a.re - b.re) < 1e-10);
        CHECK(std::fabs(a.im + b.im) < 1e-10);
        if (is_real_character(chi)) CHECK(std::fabs(a.im) < 1e-12);
      }
    }
  }
}

TEST_CASE("l-value matches direct partial sums") {
  struct Probe {
    long long q;
    std::size_t index;
    int m;
    long long terms;
    double tol;
  };
  // Tail after N terms is bounded by 2 max|sum chi| / N^m.
  for (const Probe& p : {Probe{7, 1, 1, 1000000, 5e-5},
                         Probe{20, 3, 1, 1000000, 5e-5},
                         Probe{12, 3, 2, 100000, 1e-9},
                         Probe{4, 1, 1, 1000000, 5e-5}}) {
    auto g = character_group(p.q);
    DirichletCharacter chi = g->character(p.index);
    if (p.m == 1) REQUIRE(!is_principal(chi));
    std::complex<double> s = 0;
    for (long long n = 1; n <= p.terms; ++n) {
      RootOfUnity v = char_value(chi, n);
      if (v.zero) continue;
      s += v.to_complex() / std::pow(static_cast<double>(n), p.m);
    }
    ComplexApprox l = l_value(p.m, chi);
    CHECK(std::abs(s - std::complex<double>(l.re, l.im)) < p.tol);
  }
}
