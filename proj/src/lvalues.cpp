#include "lmean/lvalues.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lmean/arith.hpp"
#include "lmean/bernoulli.hpp"

namespace lmean {

namespace {

long double to_long_double(const Rational& x) {
  return numerator(x).convert_to<long double>() /
         denominator(x).convert_to<long double>();
}

// Kahan-compensated accumulator.
struct Kahan {
  long double sum = 0.0L;
  long double c = 0.0L;
  void add(long double v) {
    long double y = v - c;
    long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// B_{2j}/(2j)! for the Euler-Maclaurin tail, exact then rounded once.
const std::vector<long double>& em_coeffs() {
  static const std::vector<long double> coeffs = [] {
    std::vector<long double> c;
    for (int j = 1; j <= 8; ++j) {
      Rational r = bernoulli_number(2 * j) / Rational(factorial(2 * j));
      c.push_back(to_long_double(r));
    }
    return c;
  }();
  return coeffs;
}

// B_{2j}/(2j) for the digamma asymptotic series.
const std::vector<long double>& digamma_coeffs() {
  static const std::vector<long double> coeffs = [] {
    std::vector<long double> c;
    for (int j = 1; j <= 8; ++j) {
      Rational r = bernoulli_number(2 * j) / Rational(2 * j);
      c.push_back(to_long_double(r));
    }
    return c;
  }();
  return coeffs;
}

double zeta_err_bound(double value) {
  double rel = std::fabs(value) * 1e-18;
  return rel > 1e-13 ? rel : 1e-13;
}

}  // namespace

double hurwitz_zeta(int m, const Rational& x) {
  if (m < 2) throw std::invalid_argument("hurwitz_zeta: m must be >= 2");
  if (x <= 0 || x > 1)
    throw std::invalid_argument("hurwitz_zeta: x must be in (0, 1]");
  const int shift = 32;
  long double xd = to_long_double(x);
  Kahan acc;
  for (int k = shift - 1; k >= 0; --k)
    acc.add(powl(k + xd, static_cast<long double>(-m)));
  long double t = shift + xd;
  acc.add(powl(t, static_cast<long double>(1 - m)) / (m - 1));
  acc.add(powl(t, static_cast<long double>(-m)) / 2.0L);
  // Correction terms B_{2j}/(2j)! * (m)(m+1)...(m+2j-2) * t^(-m-2j+1).
  long double rising = static_cast<long double>(m);
  long double tpow = powl(t, static_cast<long double>(-m - 1));
  const long double inv_t2 = 1.0L / (t * t);
  const auto& coeffs = em_coeffs();
  for (int j = 1; j <= 8; ++j) {
    acc.add(coeffs[j - 1] * rising * tpow);
    rising *= (m + 2 * j - 1) * static_cast<long double>(m + 2 * j);
    tpow *= inv_t2;
  }
  return static_cast<double>(acc.sum);
}

double digamma(const Rational& x) {
  if (x <= 0) throw std::invalid_argument("digamma: x must be positive");
  const long double threshold = 24.0L;
  long double t = to_long_double(x);
  Kahan acc;
  while (t < threshold) {
    acc.add(-1.0L / t);
    t += 1.0L;
  }
  acc.add(logl(t));
  acc.add(-1.0L / (2.0L * t));
  long double tpow = 1.0L / (t * t);
  const long double inv_t2 = tpow;
  const auto& coeffs = digamma_coeffs();
  for (int j = 1; j <= 8; ++j) {
    acc.add(-coeffs[j - 1] * tpow);
    tpow *= inv_t2;
  }
  return static_cast<double>(acc.sum);
}

ComplexApprox l_value(int m, const DirichletCharacter& chi) {
  if (m < 1) throw std::invalid_argument("l_value: m must be >= 1");
  const long long q = chi.group->q;
  if (m == 1 && is_principal(chi))
    throw std::invalid_argument("l_value: L(1, principal) diverges");

  Kahan re, im;
  double err = 0.0;
  if (m >= 2) {
    double qm = std::pow(static_cast<double>(q), -m);
    for (long long a = 1; a <= q; ++a) {
      RootOfUnity v = char_value(chi, a);
      if (v.zero) continue;
      double z = hurwitz_zeta(m, Rational(a, q));
      std::complex<double> cv = v.to_complex();
      re.add(static_cast<long double>(cv.real()) * z);
      im.add(static_cast<long double>(cv.imag()) * z);
      err += (zeta_err_bound(z) + std::fabs(z) * 2.3e-16) * qm;
    }
    ComplexApprox out;
    out.re = static_cast<double>(re.sum) * qm;
    out.im = static_cast<double>(im.sum) * qm;
    out.err = err + 1e-15;
    if (is_principal(chi)) {
      // chi_0 sanity: L(m, chi_0) = zeta(m) prod_{p|q} (1 - p^-m).
      double ref = hurwitz_zeta(m, Rational(1));
      for (const auto& [p, e] : factorize(q).factors) {
        (void)e;
        ref *= 1.0 - std::pow(static_cast<double>(p), -m);
      }
      if (std::fabs(out.re - ref) > 1e-10 || std::fabs(out.im) > 1e-10)
        throw std::logic_error("l_value: principal cross-check failed");
    }
    return out;
  }

  for (long long a = 1; a < q; ++a) {
    RootOfUnity v = char_value(chi, a);
    if (v.zero) continue;
    double p = digamma(Rational(a, q));
    std::complex<double> cv = v.to_complex();
    re.add(static_cast<long double>(cv.real()) * p);
    im.add(static_cast<long double>(cv.imag()) * p);
    err += (1e-12 + std::fabs(p) * 2.3e-16) / static_cast<double>(q);
  }
  ComplexApprox out;
  out.re = -static_cast<double>(re.sum) / static_cast<double>(q);
  out.im = -static_cast<double>(im.sum) / static_cast<double>(q);
  out.err = err + 1e-15;
  return out;
}

}  // namespace lmean
