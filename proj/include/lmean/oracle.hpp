#pragma once

#include <string>

#include "lmean/lvalues.hpp"
#include "lmean/pivalue.hpp"

namespace lmean {

struct V2Query {
  long long q = 1;
  int m = 1;
  int n = 1;
  long long a = 1;
  long long b = 1;
};

struct V3Query {
  long long q = 2;
  int m1 = 1;
  int m2 = 1;
  int m3 = 2;
  long long a = 1;
  long long b = 1;
  long long c = 1;
};

// verdict is pass iff closed == lattice exactly and the oracle deviation is
// within tolerance (relative when the exact value is nonzero, absolute when
// it is zero).
struct VerificationReport {
  std::string query;
  PiValue closed;
  PiValue lattice;
  ComplexApprox oracle;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  bool exact_match = false;
  bool pass = false;
  std::string notes;
};

// Direct character-group sum: over chi mod q with chi(-1) = (-1)^m = (-1)^n,
// chi(a) conj(chi(b)) L(m,chi) L(n,conj(chi)). Parity-mismatched (m,n) give
// the empty sum, exact 0. Requires gcd(a,q) = gcd(b,q) = 1.
ComplexApprox oracle_v2(long long q, int m, int n, long long a, long long b);

// Double sum over (chi1, chi2) with chi1(-1) = (-1)^m1, chi2(-1) = (-1)^m2:
// chi1(a) chi2(b) conj((chi1 chi2)(c)) L(m1,chi1) L(m2,chi2)
// L(m3, conj(chi1 chi2)). Requires q >= 2, m3 >= 2, coprimality.
ComplexApprox oracle_v3(long long q, int m1, int m2, int m3, long long a,
                        long long b, long long c);

// Comparison core: fills deviations and verdict from already-computed values.
// Exposed so harnesses can exercise the fail path with a corrupted input.
VerificationReport build_report(const std::string& query_echo,
                                const PiValue& closed, const PiValue& lattice,
                                const ComplexApprox& oracle, double tol);

VerificationReport verify(const V2Query& query, double tol);
VerificationReport verify(const V3Query& query, double tol);

}  // namespace lmean
