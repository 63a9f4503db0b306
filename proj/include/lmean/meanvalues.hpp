#pragma once

#include "lmean/pivalue.hpp"
#include "lmean/rational.hpp"

namespace lmean {

// Terms of the two-factor closed form: R(m,n,q;a,b), R(n,m,q;b,a), C1.
struct Theorem21Terms {
  Rational R_ab = 0;
  Rational R_ba = 0;
  Rational C1 = 0;
};

// Terms of the three-factor closed form. R_part carries the two R(...) terms
// together with their gcd-power prefactor (sign included); the A/B/C/D pairs
// are the (b,c) and swapped (c,b) argument orders; D terms vanish unless
// m1 = 1.
struct Theorem24Terms {
  Rational R_part = 0;
  Rational A_bc = 0;
  Rational A_cb = 0;
  Rational B_bc = 0;
  Rational B_cb = 0;
  Rational C_bc = 0;
  Rational C_cb = 0;
  Rational D_bc = 0;
  Rational D_cb = 0;
  Rational C2 = 0;
};

// R(m,n,q;a,b) = n b^(n-1) sum_{j=0}^{m} C(m,j) (-1)^j a^(m-j)/(m+n-j)
//   * sum_{l=1}^{b} Bbar_j(al/b) sum_{d|q} mu(q/d) d^j Bbar_{m+n-j}(dl/b).
// Requires gcd(a,q) = gcd(b,q) = 1.
Rational r_term(int m, int n, long long q, long long a, long long b);

// C1 = (-1)^(n-1) m! n! gcd(a,b)^(m+n) B_{m+n} J_{m+n}(q) / (a^n b^m (m+n)!)
//      - [m=1][n=1] phi(q)/4.
Rational c1_term(int m, int n, long long q, long long a, long long b);

Theorem21Terms thm21_terms(int m, int n, long long q, long long a,
                           long long b);

// sum_{d|q} mu(q/d) d^(m+n-1) sum_{j=0}^{d-1} Bbar_m(aj/d) Bbar_n(bj/d).
Rational lattice2_core(long long q, int m, int n, long long a, long long b);

// sum_{d|q} mu(q/d) d^(m1+m2+m3-2)
//   * sum_{s,t=0}^{d-1} Bbar_m1(as/d) Bbar_m2(bt/d) Bbar_m3(c(s+t)/d).
Rational lattice3_core(long long q, int m1, int m2, int m3, long long a,
                       long long b, long long c);

// Two-factor mean value, closed form: prefactor
// (-1)^((m-n)/2) 2^(m+n) phi(q) / (4 q^(m+n) m! n!) times
// (R_ab + R_ba + C1), as pi^(m+n) times an exact rational. Parity-mismatched
// (m, n) return exact zero: the defining character sum is empty.
PiValue v2_closed(long long q, int m, int n, long long a, long long b);

// Same prefactor times lattice2_core; the exact reference form.
PiValue v2_lattice(long long q, int m, int n, long long a, long long b);

// b = 1 specialization with the j-sums reduced mod q; requires q >= 2.
PiValue v2_cor22(long long q, int m, int n, long long a);

// m = n = 1 specialization of v2_cor22 with the explicit Bbar_1 correction
// sum; requires q >= 2.
PiValue v2_eq28(long long q, long long a);

// a = b = 1 specialization over even Bernoulli indices; requires q >= 2.
PiValue v2_cor23(long long q, int m, int n);

// m = n diagonal of v2_cor23, n >= 2, q >= 2.
PiValue v2_diag(long long q, int n);

// Coefficient r_{m,n,l} of J_l(q) in the single-sum form of the two-factor
// mean value at a = b = 1.
Rational liu_zhang_coeff(int m, int n, int l);

// Single-sum form: prefactor times (sum_l r_{m,n,l} J_l(q) - eps phi(q)/4),
// eps = 1 iff m = n = 1; requires q >= 2. Equals v2_cor23.
PiValue liu_zhang(long long q, int m, int n);

// Exact A/B/C/D/C2 terms of the three-factor closed form; q >= 2, m3 >= 2,
// a, b, c coprime to q. No parity restriction (the term identity holds
// regardless).
Theorem24Terms thm24_terms(long long q, int m1, int m2, int m3, long long a,
                           long long b, long long c);

// R_part + A_bc + (-1)^(m2+m3) A_cb + B_bc + (-1)^(m2+m3) B_cb
//        + C_bc + (-1)^m1 C_cb - D_bc + D_cb + C2.
// Equals lattice3_core exactly (parity-unrestricted identity).
Rational lemma33_rhs(const Theorem24Terms& t, int m1, int m2, int m3);

// Three-factor mean value, closed form, per the eq. structure:
// sign1 * 2^S gcd(b,c)^(m2+m3) phi^2 / (8 q^S b^m3 c^m2 m1! (m2+m3)!)
//   * (R(m1,m2+m3,q;a,bc/g) + R(m2+m3,m1,q;bc/g,a))
// - sign2 * 2^S phi^2 / (8 q^S m1! m2! m3!)
//   * (A_bc + (-1)^m1 A_cb + B_bc + (-1)^m1 B_cb + C_bc + (-1)^m1 C_cb
//      - D_bc + D_cb + C2),
// S = m1+m2+m3, sign1 = (-1)^((m1-m2-m3)/2), sign2 = (-1)^((m1+m2-m3)/2).
// Requires q >= 2, m3 >= 2, m1+m2 = m3 (mod 2); parity violation rejected.
PiValue v3_closed(long long q, int m1, int m2, int m3, long long a,
                  long long b, long long c);

// -sign2 * 2^S phi^2 / (8 q^S m1! m2! m3!) * lattice3_core.
PiValue v3_lattice(long long q, int m1, int m2, int m3, long long a,
                   long long b, long long c);

// (1,1,n) specialization, n even, q >= 2.
PiValue v3_cor25(long long q, int n);

// (1,2,n) specialization, n >= 3 odd, q >= 2.
PiValue v3_cor26(long long q, int n);

}  // namespace lmean
