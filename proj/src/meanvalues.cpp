#include "lmean/meanvalues.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lmean/arith.hpp"
#include "lmean/bernoulli.hpp"

namespace lmean {

PiValue make_pi_value(int pi_power, Rational coeff) {
  PiValue v;
  v.coeff = std::move(coeff);
  v.pi_power = v.coeff == 0 ? 0 : pi_power;
  return v;
}

bool operator==(const PiValue& a, const PiValue& b) {
  return a.pi_power == b.pi_power && a.coeff == b.coeff;
}

bool operator!=(const PiValue& a, const PiValue& b) { return !(a == b); }

PiValue add(const PiValue& a, const PiValue& b) {
  if (a.coeff == 0) return b;
  if (b.coeff == 0) return a;
  if (a.pi_power != b.pi_power)
    throw std::invalid_argument("PiValue add: pi_power mismatch");
  return make_pi_value(a.pi_power, a.coeff + b.coeff);
}

Float50 to_float50(const PiValue& v) {
  Float50 p = 1;
  for (int i = 0; i < v.pi_power; ++i) p *= pi50();
  return to_float50(v.coeff) * p;
}

double to_double(const PiValue& v) {
  return static_cast<double>(to_float50(v));
}

std::string coeff_string(const PiValue& v) {
  std::ostringstream os;
  os << numerator(v.coeff);
  if (denominator(v.coeff) != 1) os << "/" << denominator(v.coeff);
  return os.str();
}

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_coprime(long long a, long long q, const char* msg) {
  require(a >= 1 && gcd(a, q) == 1, msg);
}

// Divisors d of q with mu(q/d) != 0, as (d, mu(q/d)) pairs.
std::vector<std::pair<long long, int>> moebius_divisors(long long q) {
  std::vector<std::pair<long long, int>> out;
  for (long long d : divisors(q)) {
    int mu = moebius(q / d);
    if (mu != 0) out.emplace_back(d, mu);
  }
  return out;
}

Rational phi_rat(long long q) { return Rational(euler_phi(q)); }

Rational jordan_rat(int k, long long q) {
  return Rational(jordan_totient(k, q));
}

// Shared prefactor of the two-factor forms:
// (-1)^((m-n)/2) 2^(m+n) phi(q) / (4 q^(m+n) m! n!).
Rational v2_prefactor(long long q, int m, int n) {
  Rational num = Rational(parity_sign((m - n) / 2)) *
                 Rational(pow_int(Int(2), m + n)) * phi_rat(q);
  Rational den = Rational(4) * Rational(pow_int(Int(q), m + n)) *
                 Rational(factorial(m) * factorial(n));
  return num / den;
}

bool parity_mismatch(int m, int n) { return (m - n) % 2 != 0; }

}  // namespace

Rational r_term(int m, int n, long long q, long long a, long long b) {
  require(m >= 1 && n >= 1, "r_term: m, n must be >= 1");
  require(q >= 1, "r_term: q must be >= 1");
  require_coprime(a, q, "r_term: a must be positive and coprime to q");
  require_coprime(b, q, "r_term: b must be positive and coprime to q");
  auto divs = moebius_divisors(q);
  Rational total = 0;
  for (int j = 0; j <= m; ++j) {
    Rational jcoeff = Rational(binomial(m, j)) * Rational(parity_sign(j)) *
                      Rational(pow_int(Int(a), m - j)) / Rational(m + n - j);
    Rational lsum = 0;
    for (long long l = 1; l <= b; ++l) {
      Rational outer = bernoulli_function(j, Rational(a * l, b));
      if (outer == 0) continue;
      Rational dsum = 0;
      for (const auto& [d, mu] : divs) {
        dsum += Rational(mu) * Rational(pow_int(Int(d), j)) *
                bernoulli_function(m + n - j, Rational(d * l, b));
      }
      lsum += outer * dsum;
    }
    total += jcoeff * lsum;
  }
  return Rational(n) * Rational(pow_int(Int(b), n - 1)) * total;
}

Rational c1_term(int m, int n, long long q, long long a, long long b) {
  require(m >= 1 && n >= 1, "c1_term: m, n must be >= 1");
  require(q >= 1, "c1_term: q must be >= 1");
  require_coprime(a, q, "c1_term: a must be positive and coprime to q");
  require_coprime(b, q, "c1_term: b must be positive and coprime to q");
  long long g = gcd(a, b);
  Rational first = Rational(parity_sign(n - 1)) *
                   Rational(factorial(m) * factorial(n)) *
                   Rational(pow_int(Int(g), m + n)) * bernoulli_number(m + n) *
                   jordan_rat(m + n, q) /
                   (Rational(pow_int(Int(a), n) * pow_int(Int(b), m)) *
                    Rational(factorial(m + n)));
  Rational second =
      (m == 1 && n == 1) ? phi_rat(q) / Rational(4) : Rational(0);
  return first - second;
}

Theorem21Terms thm21_terms(int m, int n, long long q, long long a,
                           long long b) {
  Theorem21Terms t;
  t.R_ab = r_term(m, n, q, a, b);
  t.R_ba = r_term(n, m, q, b, a);
  t.C1 = c1_term(m, n, q, a, b);
  return t;
}

Rational lattice2_core(long long q, int m, int n, long long a, long long b) {
  require(m >= 1 && n >= 1, "lattice2_core: m, n must be >= 1");
  require(q >= 1, "lattice2_core: q must be >= 1");
  require_coprime(a, q, "lattice2_core: a must be positive and coprime to q");
  require_coprime(b, q, "lattice2_core: b must be positive and coprime to q");
  Rational total = 0;
  for (const auto& [d, mu] : moebius_divisors(q)) {
    Rational inner = 0;
    for (long long j = 0; j < d; ++j) {
      Rational bm = bernoulli_function(m, Rational(a * j, d));
      if (bm == 0) continue;
      inner += bm * bernoulli_function(n, Rational(b * j, d));
    }
    total += Rational(mu) * Rational(pow_int(Int(d), m + n - 1)) * inner;
  }
  return total;
}

Rational lattice3_core(long long q, int m1, int m2, int m3, long long a,
                       long long b, long long c) {
  require(m1 >= 1 && m2 >= 1 && m3 >= 1, "lattice3_core: orders must be >= 1");
  require(q >= 1, "lattice3_core: q must be >= 1");
  require_coprime(a, q, "lattice3_core: a must be positive and coprime to q");
  require_coprime(b, q, "lattice3_core: b must be positive and coprime to q");
  require_coprime(c, q, "lattice3_core: c must be positive and coprime to q");
  int S = m1 + m2 + m3;
  Rational total = 0;
  for (const auto& [d, mu] : moebius_divisors(q)) {
    Rational inner = 0;
    for (long long s = 0; s < d; ++s) {
      Rational b1 = bernoulli_function(m1, Rational(a * s, d));
      if (b1 == 0) continue;
      for (long long t = 0; t < d; ++t) {
        Rational b2 = bernoulli_function(m2, Rational(b * t, d));
        if (b2 == 0) continue;
        inner += b1 * b2 * bernoulli_function(m3, Rational(c * (s + t), d));
      }
    }
    total += Rational(mu) * Rational(pow_int(Int(d), S - 2)) * inner;
  }
  return total;
}

PiValue v2_closed(long long q, int m, int n, long long a, long long b) {
  require(m >= 1 && n >= 1, "v2_closed: m, n must be >= 1");
  require(q >= 1, "v2_closed: q must be >= 1");
  require_coprime(a, q, "v2_closed: a must be positive and coprime to q");
  require_coprime(b, q, "v2_closed: b must be positive and coprime to q");
  if (parity_mismatch(m, n)) return PiValue{};
  Theorem21Terms t = thm21_terms(m, n, q, a, b);
  return make_pi_value(m + n,
                       v2_prefactor(q, m, n) * (t.R_ab + t.R_ba + t.C1));
}

PiValue v2_lattice(long long q, int m, int n, long long a, long long b) {
  require(m >= 1 && n >= 1, "v2_lattice: m, n must be >= 1");
  require(q >= 1, "v2_lattice: q must be >= 1");
  require_coprime(a, q, "v2_lattice: a must be positive and coprime to q");
  require_coprime(b, q, "v2_lattice: b must be positive and coprime to q");
  if (parity_mismatch(m, n)) return PiValue{};
  return make_pi_value(m + n,
                       v2_prefactor(q, m, n) * lattice2_core(q, m, n, a, b));
}

PiValue v2_cor22(long long q, int m, int n, long long a) {
  require(m >= 1 && n >= 1, "v2_cor22: m, n must be >= 1");
  require(q >= 2, "v2_cor22: q must be >= 2");
  require_coprime(a, q, "v2_cor22: a must be positive and coprime to q");
  if (parity_mismatch(m, n)) return PiValue{};
  auto divs = moebius_divisors(q);

  Rational term1 = 0;
  for (int j = 1; j <= m; ++j) {
    Rational bj = bernoulli_function(j, Rational(0));
    if (bj == 0) continue;
    term1 += Rational(binomial(m, j)) * Rational(parity_sign(j)) *
             Rational(pow_int(Int(a), m - j)) / Rational(m + n - j) * bj *
             bernoulli_function(m + n - j, Rational(0)) * jordan_rat(j, q);
  }
  term1 *= Rational(n);

  Rational term2 = 0;
  for (int j = 1; j <= n; ++j) {
    Rational lsum = 0;
    for (long long l = 1; l <= a; ++l) {
      Rational outer = bernoulli_function(j, Rational(l, a));
      if (outer == 0) continue;
      Rational dsum = 0;
      for (const auto& [d, mu] : divs) {
        dsum += Rational(mu) * Rational(pow_int(Int(d), j)) *
                bernoulli_function(m + n - j, Rational(d * l, a));
      }
      lsum += outer * dsum;
    }
    term2 += Rational(binomial(n, j)) * Rational(parity_sign(j)) /
             Rational(m + n - j) * lsum;
  }
  term2 *= Rational(m) * Rational(pow_int(Int(a), m - 1));

  Rational term3 = Rational(parity_sign(n - 1)) *
                   Rational(factorial(m) * factorial(n)) *
                   bernoulli_number(m + n) * jordan_rat(m + n, q) /
                   (Rational(pow_int(Int(a), n)) * Rational(factorial(m + n)));
  Rational term4 =
      (m == 1 && n == 1) ? phi_rat(q) / Rational(4) : Rational(0);

  return make_pi_value(
      m + n, v2_prefactor(q, m, n) * (term1 + term2 + term3 - term4));
}

PiValue v2_eq28(long long q, long long a) {
  require(q >= 2, "v2_eq28: q must be >= 2");
  require_coprime(a, q, "v2_eq28: a must be positive and coprime to q");
  Rational phi = phi_rat(q);
  Rational q2 = Rational(q) * Rational(q);
  Rational main = phi * phi / (Rational(12 * a) * q2) *
                  (jordan_rat(2, q) / phi - Rational(3 * a));
  Rational corr = 0;
  for (const auto& [d, mu] : moebius_divisors(q)) {
    Rational lsum = 0;
    for (long long l = 1; l <= a; ++l) {
      Rational outer = bernoulli_function(1, Rational(l, a));
      if (outer == 0) continue;
      lsum += outer * bernoulli_function(1, Rational(d * l, a));
    }
    corr += Rational(mu) * Rational(d) * lsum;
  }
  return make_pi_value(2, main - phi / q2 * corr);
}

PiValue v2_cor23(long long q, int m, int n) {
  require(m >= 1 && n >= 1, "v2_cor23: m, n must be >= 1");
  require(q >= 2, "v2_cor23: q must be >= 2");
  if (parity_mismatch(m, n)) return PiValue{};
  Rational sum = 0;
  for (int j = 1; 2 * j <= m; ++j) {
    sum += Rational(n) * Rational(binomial(m, 2 * j)) *
           bernoulli_number(2 * j) * bernoulli_number(m + n - 2 * j) /
           Rational(m + n - 2 * j) * jordan_rat(2 * j, q);
  }
  for (int j = 1; 2 * j <= n; ++j) {
    sum += Rational(m) * Rational(binomial(n, 2 * j)) *
           bernoulli_number(2 * j) * bernoulli_number(m + n - 2 * j) /
           Rational(m + n - 2 * j) * jordan_rat(2 * j, q);
  }
  sum += Rational(parity_sign(n - 1)) * Rational(factorial(m) * factorial(n)) *
         bernoulli_number(m + n) * jordan_rat(m + n, q) /
         Rational(factorial(m + n));
  if (m == 1 && n == 1) sum -= phi_rat(q) / Rational(4);
  return make_pi_value(m + n, v2_prefactor(q, m, n) * sum);
}

PiValue v2_diag(long long q, int n) {
  require(n >= 2, "v2_diag: n must be >= 2");
  require(q >= 2, "v2_diag: q must be >= 2");
  Rational sum = 0;
  for (int j = 1; 2 * j <= n; ++j) {
    sum += Rational(2 * n) * Rational(binomial(n, 2 * j)) *
           bernoulli_number(2 * j) * bernoulli_number(2 * n - 2 * j) /
           Rational(2 * n - 2 * j) * jordan_rat(2 * j, q);
  }
  Rational nfact = Rational(factorial(n));
  sum -= Rational(parity_sign(n)) * nfact * nfact * bernoulli_number(2 * n) *
         jordan_rat(2 * n, q) / Rational(factorial(2 * n));
  Rational pref = Rational(pow_int(Int(2), 2 * n)) * phi_rat(q) /
                  (Rational(4) * Rational(pow_int(Int(q), 2 * n)) * nfact *
                   nfact);
  return make_pi_value(2 * n, pref * sum);
}

Rational liu_zhang_coeff(int m, int n, int l) {
  require(m >= 1 && n >= 1, "liu_zhang_coeff: m, n must be >= 1");
  require(l >= 1 && l <= m + n, "liu_zhang_coeff: l out of range");
  Rational outer = bernoulli_number(m + n - l);
  if (outer == 0) return Rational(0);
  Rational sum = 0;
  for (int j = 0; j <= m; ++j) {
    for (int k = 0; k <= n; ++k) {
      if (j + k < m + n - l) continue;
      sum += bernoulli_number(m - j) * bernoulli_number(n - k) *
             Rational(binomial(m, j) * binomial(n, k) *
                      binomial(j + k + 1, m + n - l)) /
             Rational(j + k + 1);
    }
  }
  return outer * sum;
}

PiValue liu_zhang(long long q, int m, int n) {
  require(m >= 1 && n >= 1, "liu_zhang: m, n must be >= 1");
  require(q >= 2, "liu_zhang: q must be >= 2");
  if (parity_mismatch(m, n)) return PiValue{};
  Rational sum = 0;
  for (int l = 1; l <= m + n; ++l)
    sum += liu_zhang_coeff(m, n, l) * jordan_rat(l, q);
  if (m == 1 && n == 1) sum -= phi_rat(q) / Rational(4);
  return make_pi_value(m + n, v2_prefactor(q, m, n) * sum);
}

namespace {

Rational a_term(int m1, int m2, int m3, long long a, long long b,
                long long c,
                const std::vector<std::pair<long long, int>>& divs) {
  Rational total = 0;
  for (int j = 1; j <= m2; ++j) {
    Rational jc = Rational(binomial(m2, j)) *
                  Rational(parity_sign(j) * j) / Rational(m2 + m3 - j);
    for (int j1 = 0; j1 <= m1; ++j1) {
      Rational j1c = Rational(binomial(m1, j1)) * Rational(parity_sign(j1)) *
                     Rational(pow_int(Int(a), m1 - j1)) /
                     Rational(m1 + j - j1);
      Rational inner = 0;
      for (long long l = 1; l <= c; ++l) {
        for (long long l1 = 1; l1 <= b; ++l1) {
          Rational outer =
              bernoulli_function(j1, Rational(a * l1, b) + Rational(a * l, c));
          if (outer == 0) continue;
          Rational dsum = 0;
          for (const auto& [d, mu] : divs) {
            Rational f1 = bernoulli_function(m2 + m3 - j, Rational(d * l, c));
            if (f1 == 0) continue;
            dsum += Rational(mu) * Rational(pow_int(Int(d), j1)) * f1 *
                    bernoulli_function(
                        m1 + j - j1,
                        Rational(d * l1, b) + Rational(d * l, c));
          }
          inner += outer * dsum;
        }
      }
      total += jc * j1c * inner;
    }
  }
  return Rational(m3) * Rational(pow_int(Int(b), m2 - 1)) *
         Rational(pow_int(Int(c), m3 - 1)) * total;
}

Rational b_term(int m1, int m2, int m3, long long a, long long b,
                long long c,
                const std::vector<std::pair<long long, int>>& divs) {
  Rational total = 0;
  for (int j = 1; j <= m3; ++j) {
    Rational jc = Rational(binomial(m3, j)) / Rational(m2 + m3 - j);
    for (int j1 = 0; j1 <= j; ++j1) {
      Rational j1c = Rational(binomial(j, j1)) * Rational(parity_sign(j1)) *
                     Rational(pow_int(Int(c), m3 - j1)) /
                     Rational(m1 + j - j1);
      Rational inner = 0;
      for (long long l = 1; l <= b; ++l) {
        for (long long l1 = 1; l1 <= a; ++l1) {
          Rational outer =
              bernoulli_function(j1, Rational(c * l1, a) + Rational(c * l, b));
          if (outer == 0) continue;
          Rational dsum = 0;
          for (const auto& [d, mu] : divs) {
            Rational f1 = bernoulli_function(m2 + m3 - j, Rational(d * l, b));
            if (f1 == 0) continue;
            dsum += Rational(mu) * Rational(pow_int(Int(d), j1)) * f1 *
                    bernoulli_function(m1 + j - j1, Rational(d * l1, a));
          }
          inner += outer * dsum;
        }
      }
      total += jc * j1c * inner;
    }
  }
  return Rational(m1 * m2) * Rational(pow_int(Int(a), m1 - 1)) *
         Rational(pow_int(Int(b), m2 - 1)) * total;
}

Rational c_term(int m1, int m2, int m3, long long a, long long b,
                long long c,
                const std::vector<std::pair<long long, int>>& divs) {
  long long g = gcd(a, c);
  long long ac_over_g = a / g * c;
  Rational total = 0;
  for (int j = 1; j <= m3; ++j) {
    Rational jc = Rational(binomial(m3, j)) * Rational(parity_sign(j)) *
                  Rational(pow_int(Int(g), j)) *
                  Rational(pow_int(Int(c), m3 - j)) * Rational(factorial(j)) /
                  (Rational(pow_int(Int(a), j)) * Rational(m2 + m3 - j) *
                   Rational(factorial(m1 + j)));
    Rational lsum = 0;
    for (long long l = 1; l <= b; ++l) {
      Rational outer = bernoulli_function(m1 + j, Rational(ac_over_g * l, b));
      if (outer == 0) continue;
      Rational dsum = 0;
      for (const auto& [d, mu] : divs) {
        dsum += Rational(mu) * Rational(pow_int(Int(d), m1 + j)) *
                bernoulli_function(m2 + m3 - j, Rational(d * l, b));
      }
      lsum += outer * dsum;
    }
    total += jc * lsum;
  }
  return -Rational(m2) * Rational(factorial(m1)) *
         Rational(pow_int(Int(b), m2 - 1)) * Rational(pow_int(Int(g), m1)) /
         Rational(pow_int(Int(c), m1)) * total;
}

Rational d_term(int m1, int m2, int m3, long long b, long long c,
                const std::vector<std::pair<long long, int>>& divs) {
  if (m1 != 1) return Rational(0);
  Rational total = 0;
  for (const auto& [d, mu] : divs) {
    Rational lsum = 0;
    for (long long l = 1; l <= b; ++l) {
      if ((c * l) % b != 0) continue;
      lsum += bernoulli_function(m2 + m3 - 1, Rational(d * l, b));
    }
    total += Rational(mu) * Rational(pow_int(Int(d), m1)) * lsum;
  }
  return Rational(m2 * m3) * Rational(pow_int(Int(b), m2 - 1)) *
         Rational(pow_int(Int(c), m3 - 1)) /
         (Rational(4) * Rational(m2 + m3 - 1)) * total;
}

Rational c2_term(int m1, int m2, int m3, long long q, long long a, long long b,
                 long long c) {
  int S = m1 + m2 + m3;
  long long gbc = gcd(b, c);
  long long g = gcd(a * gbc, b * c);
  return Rational(parity_sign(m1 + m2)) *
         Rational(factorial(m1) * factorial(m2) * factorial(m3)) *
         Rational(pow_int(Int(g), S)) * bernoulli_number(S) *
         jordan_rat(S, q) /
         (Rational(pow_int(Int(a), m2 + m3) * pow_int(Int(b), m1 + m3) *
                   pow_int(Int(c), m1 + m2)) *
          Rational(factorial(S)));
}

void require_v3_inputs(long long q, int m1, int m2, int m3, long long a,
                       long long b, long long c, const char* who) {
  require(q >= 2, "three-factor forms: q must be >= 2");
  require(m3 >= 2, "three-factor forms: m3 must be >= 2");
  require(m1 >= 1 && m2 >= 1, "three-factor forms: m1, m2 must be >= 1");
  require_coprime(a, q, who);
  require_coprime(b, q, who);
  require_coprime(c, q, who);
}

}  // namespace

Theorem24Terms thm24_terms(long long q, int m1, int m2, int m3, long long a,
                           long long b, long long c) {
  require_v3_inputs(q, m1, m2, m3, a, b, c,
                    "thm24_terms: a, b, c must be positive and coprime to q");
  auto divs = moebius_divisors(q);
  Theorem24Terms t;
  long long g = gcd(b, c);
  long long e = b / g * c;
  Rational rpref = Rational(parity_sign(m2 - 1)) *
                   Rational(factorial(m2) * factorial(m3)) *
                   Rational(pow_int(Int(g), m2 + m3)) /
                   (Rational(pow_int(Int(b), m3) * pow_int(Int(c), m2)) *
                    Rational(factorial(m2 + m3)));
  t.R_part = rpref * (r_term(m1, m2 + m3, q, a, e) +
                      r_term(m2 + m3, m1, q, e, a));
  t.A_bc = a_term(m1, m2, m3, a, b, c, divs);
  t.A_cb = a_term(m1, m3, m2, a, c, b, divs);
  t.B_bc = b_term(m1, m2, m3, a, b, c, divs);
  t.B_cb = b_term(m1, m3, m2, a, c, b, divs);
  t.C_bc = c_term(m1, m2, m3, a, b, c, divs);
  t.C_cb = c_term(m1, m3, m2, a, c, b, divs);
  t.D_bc = d_term(m1, m2, m3, b, c, divs);
  t.D_cb = d_term(m1, m3, m2, c, b, divs);
  t.C2 = c2_term(m1, m2, m3, q, a, b, c);
  return t;
}

Rational lemma33_rhs(const Theorem24Terms& t, int m1, int m2, int m3) {
  Rational s23 = Rational(parity_sign(m2 + m3));
  Rational s1 = Rational(parity_sign(m1));
  return t.R_part + t.A_bc + s23 * t.A_cb + t.B_bc + s23 * t.B_cb + t.C_bc +
         s1 * t.C_cb - t.D_bc + t.D_cb + t.C2;
}

PiValue v3_closed(long long q, int m1, int m2, int m3, long long a,
                  long long b, long long c) {
  require_v3_inputs(q, m1, m2, m3, a, b, c,
                    "v3_closed: a, b, c must be positive and coprime to q");
  require((m1 + m2 - m3) % 2 == 0, "v3_closed: m1 + m2 must equal m3 mod 2");
  int S = m1 + m2 + m3;
  long long g = gcd(b, c);
  long long e = b / g * c;
  Rational phi = phi_rat(q);
  Rational qS = Rational(pow_int(Int(q), S));
  Rational two_S = Rational(pow_int(Int(2), S));

  Rational first =
      Rational(parity_sign((m1 - m2 - m3) / 2)) * two_S *
      Rational(pow_int(Int(g), m2 + m3)) * phi * phi *
      (r_term(m1, m2 + m3, q, a, e) + r_term(m2 + m3, m1, q, e, a)) /
      (Rational(8) * qS * Rational(pow_int(Int(b), m3) * pow_int(Int(c), m2)) *
       Rational(factorial(m1) * factorial(m2 + m3)));

  Theorem24Terms t = thm24_terms(q, m1, m2, m3, a, b, c);
  Rational sw = Rational(parity_sign(m1));
  Rational combo = t.A_bc + sw * t.A_cb + t.B_bc + sw * t.B_cb + t.C_bc +
                   sw * t.C_cb - t.D_bc + t.D_cb + t.C2;
  Rational second =
      Rational(parity_sign((m1 + m2 - m3) / 2)) * two_S * phi * phi * combo /
      (Rational(8) * qS *
       Rational(factorial(m1) * factorial(m2) * factorial(m3)));

  return make_pi_value(S, first - second);
}

PiValue v3_lattice(long long q, int m1, int m2, int m3, long long a,
                   long long b, long long c) {
  require_v3_inputs(q, m1, m2, m3, a, b, c,
                    "v3_lattice: a, b, c must be positive and coprime to q");
  require((m1 + m2 - m3) % 2 == 0, "v3_lattice: m1 + m2 must equal m3 mod 2");
  int S = m1 + m2 + m3;
  Rational phi = phi_rat(q);
  Rational coeff = -Rational(parity_sign((m1 + m2 - m3) / 2)) *
                   Rational(pow_int(Int(2), S)) * phi * phi *
                   lattice3_core(q, m1, m2, m3, a, b, c) /
                   (Rational(8) * Rational(pow_int(Int(q), S)) *
                    Rational(factorial(m1) * factorial(m2) * factorial(m3)));
  return make_pi_value(S, coeff);
}

PiValue v3_cor25(long long q, int n) {
  require(q >= 2, "v3_cor25: q must be >= 2");
  require(n >= 2 && n % 2 == 0, "v3_cor25: n must be even and >= 2");
  Rational m_sum = 0;
  for (int j = 1; 2 * j <= n; ++j) {
    m_sum += Rational(2) * Rational(binomial(n, 2 * j)) *
             bernoulli_number(2 * j) * bernoulli_number(n + 2 - 2 * j) *
             jordan_rat(2 * j, q) /
             Rational((n + 2 - 2 * j) * (n + 1 - 2 * j));
  }
  for (int j = 3; j <= n - 1; ++j) {
    Rational outer = bernoulli_number(n + 1 - j);
    if (outer == 0) continue;
    Rational lsum = 0;
    for (int l = 2; l <= j - 1; ++l) {
      lsum += Rational(binomial(j, l)) * bernoulli_number(l) *
              bernoulli_number(j + 1 - l) * jordan_rat(l, q) /
              Rational(j + 1 - l);
    }
    m_sum += Rational(binomial(n, j)) * outer / Rational(n + 1 - j) * lsum;
  }
  m_sum += -bernoulli_number(2) * bernoulli_number(n) * jordan_rat(2, q) /
               Rational(2) +
           bernoulli_number(n + 2) * jordan_rat(n + 2, q) /
               Rational((n + 2) * (n + 1));
  Rational phi = phi_rat(q);
  Rational pref = Rational(parity_sign(n / 2)) *
                  Rational(pow_int(Int(2), n + 2)) * phi * phi /
                  (Rational(8) * Rational(pow_int(Int(q), n + 2)) *
                   Rational(factorial(n)));
  return make_pi_value(n + 2, pref * m_sum);
}

PiValue v3_cor26(long long q, int n) {
  require(q >= 2, "v3_cor26: q must be >= 2");
  require(n >= 3 && n % 2 == 1, "v3_cor26: n must be odd and >= 3");
  Rational n1 = 0;
  for (int j = 1; 2 * j <= n - 1; ++j) {
    n1 -= Rational(binomial(n, 2 * j)) * bernoulli_number(2 * j) *
          bernoulli_number(n + 3 - 2 * j) * jordan_rat(2 * j, q) /
          Rational((n + 3 - 2 * j) * (n + 2 - 2 * j));
  }
  Rational n2 = 0;
  for (int j = 3; j <= n; ++j) {
    Rational outer = bernoulli_number(n + 2 - j);
    if (outer == 0) continue;
    Rational lsum = 0;
    for (int l = 2; l <= j - 1; ++l) {
      lsum += Rational(binomial(j, l)) * bernoulli_number(l) *
              bernoulli_number(j + 1 - l) * jordan_rat(l, q) /
              Rational(j + 1 - l);
    }
    n2 += Rational(binomial(n, j)) * outer / Rational(n + 2 - j) * lsum;
  }
  Rational n3 = Rational(n) * bernoulli_number(2) * bernoulli_number(n + 1) *
                    jordan_rat(2, q) / Rational(2 * (n + 1)) +
                bernoulli_number(n + 3) * jordan_rat(n + 3, q) /
                    Rational((n + 3) * (n + 2) * (n + 1));
  Rational phi = phi_rat(q);
  Rational pref = Rational(parity_sign((n + 1) / 2)) *
                  Rational(pow_int(Int(2), n + 3)) * phi * phi /
                  (Rational(8) * Rational(pow_int(Int(q), n + 3)) *
                   Rational(factorial(n)));
  return make_pi_value(n + 3, pref * (n1 - n2 + n3));
}

}  // namespace lmean
