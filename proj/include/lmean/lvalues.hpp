#pragma once

#include "lmean/characters.hpp"
#include "lmean/rational.hpp"

namespace lmean {

// Complex value with a propagated absolute error bound on each part.
struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;
};

// zeta(m, x) = sum_{k>=0} (k+x)^(-m) for m >= 2, 0 < x <= 1. Direct summation
// to a shift threshold plus an Euler-Maclaurin tail with 8 correction terms,
// accumulated in long double. Absolute error <= max(1e-13, 1e-18*|value|).
double hurwitz_zeta(int m, const Rational& x);

// psi(x) for rational x > 0: upward recurrence past a threshold, then the
// asymptotic series. Absolute error <= 1e-12.
double digamma(const Rational& x);

// L(m, chi). m >= 2: q^(-m) sum_a chi(a) zeta(m, a/q). m = 1 (non-principal
// chi only): -(1/q) sum_{a<q} chi(a) psi(a/q). err <= 1e-10 always.
ComplexApprox l_value(int m, const DirichletCharacter& chi);

}  // namespace lmean
