#include "lmean/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "lmean/arith.hpp"
#include "lmean/meanvalues.hpp"

namespace lmean {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// L-values repeat heavily across sweep cases; key is (q, m, character index).
ComplexApprox l_value_cached(int m, const DirichletCharacter& chi) {
  using Key = std::tuple<long long, int, std::size_t>;
  static std::map<Key, ComplexApprox> cache;
  static std::shared_mutex mtx;
  Key key{chi.group->q, m, chi.group->character_index(chi)};
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  ComplexApprox value = l_value(m, chi);
  std::unique_lock lock(mtx);
  return cache.emplace(key, value).first->second;
}

std::complex<double> to_c(const ComplexApprox& v) { return {v.re, v.im}; }

}  // namespace

ComplexApprox oracle_v2(long long q, int m, int n, long long a, long long b) {
  require(q >= 1, "oracle_v2: q must be >= 1");
  require(m >= 1 && n >= 1, "oracle_v2: m, n must be >= 1");
  require(a >= 1 && gcd(a, q) == 1, "oracle_v2: a must be coprime to q");
  require(b >= 1 && gcd(b, q) == 1, "oracle_v2: b must be coprime to q");
  if ((m - n) % 2 != 0) return {0.0, 0.0, 0.0};
  int want = m % 2 == 0 ? 1 : -1;
  auto group = character_group(q);
  std::complex<double> total{0.0, 0.0};
  double err = 0.0;
  for (std::size_t i = 0; i < group->size(); ++i) {
    DirichletCharacter chi = group->character(i);
    if (parity(chi) != want) continue;
    ComplexApprox l1 = l_value_cached(m, chi);
    ComplexApprox l2 = l_value_cached(n, conjugate(chi));
    std::complex<double> w =
        char_value(chi, a).to_complex() *
        std::conj(char_value(chi, b).to_complex());
    total += w * to_c(l1) * to_c(l2);
    err += std::abs(to_c(l1)) * l2.err + std::abs(to_c(l2)) * l1.err +
           l1.err * l2.err + 1e-15 * std::abs(to_c(l1) * to_c(l2));
  }
  return {total.real(), total.imag(), err + 1e-15};
}

ComplexApprox oracle_v3(long long q, int m1, int m2, int m3, long long a,
                        long long b, long long c) {
  require(q >= 2, "oracle_v3: q must be >= 2");
  require(m3 >= 2, "oracle_v3: m3 must be >= 2");
  require(m1 >= 1 && m2 >= 1, "oracle_v3: m1, m2 must be >= 1");
  require(a >= 1 && gcd(a, q) == 1, "oracle_v3: a must be coprime to q");
  require(b >= 1 && gcd(b, q) == 1, "oracle_v3: b must be coprime to q");
  require(c >= 1 && gcd(c, q) == 1, "oracle_v3: c must be coprime to q");
  int want1 = m1 % 2 == 0 ? 1 : -1;
  int want2 = m2 % 2 == 0 ? 1 : -1;
  auto group = character_group(q);
  std::complex<double> total{0.0, 0.0};
  double err = 0.0;
  for (std::size_t i = 0; i < group->size(); ++i) {
    DirichletCharacter chi1 = group->character(i);
    if (parity(chi1) != want1) continue;
    ComplexApprox l1 = l_value_cached(m1, chi1);
    for (std::size_t j = 0; j < group->size(); ++j) {
      DirichletCharacter chi2 = group->character(j);
      if (parity(chi2) != want2) continue;
      ComplexApprox l2 = l_value_cached(m2, chi2);
      DirichletCharacter prod = multiply(chi1, chi2);
      ComplexApprox l3 = l_value_cached(m3, conjugate(prod));
      std::complex<double> w = char_value(chi1, a).to_complex() *
                               char_value(chi2, b).to_complex() *
                               std::conj(char_value(prod, c).to_complex());
      std::complex<double> c1 = to_c(l1), c2 = to_c(l2), c3 = to_c(l3);
      total += w * c1 * c2 * c3;
      err += std::abs(c1 * c2) * l3.err + std::abs(c1 * c3) * l2.err +
             std::abs(c2 * c3) * l1.err + 1e-15 * std::abs(c1 * c2 * c3);
    }
  }
  return {total.real(), total.imag(), err + 1e-15};
}

VerificationReport build_report(const std::string& query_echo,
                                const PiValue& closed, const PiValue& lattice,
                                const ComplexApprox& oracle, double tol) {
  require(tol > 0, "build_report: tolerance must be positive");
  VerificationReport rep;
  rep.query = query_echo;
  rep.closed = closed;
  rep.lattice = lattice;
  rep.oracle = oracle;
  rep.exact_match = closed == lattice;
  // Deviations are taken against the exact value in 50-digit floats so the
  // pass decision is free of double-rounding artifacts.
  Float50 exact = to_float50(closed);
  Float50 dre = Float50(oracle.re) - exact;
  double abs_re = static_cast<double>(abs(dre));
  rep.abs_dev = std::max(abs_re, std::fabs(oracle.im));
  if (closed.coeff == 0) {
    rep.rel_dev = 0.0;
    rep.pass = rep.exact_match && rep.abs_dev <= tol;
  } else {
    rep.rel_dev =
        static_cast<double>(abs(dre / exact));
    rep.rel_dev = std::max(rep.rel_dev,
                           std::fabs(oracle.im) / std::fabs(to_double(closed)));
    rep.pass = rep.exact_match && rep.rel_dev <= tol;
  }
  if (!rep.exact_match) rep.notes = "closed and lattice forms differ";
  return rep;
}

VerificationReport verify(const V2Query& query, double tol) {
  std::ostringstream echo;
  echo << "v2 q=" << query.q << " m=" << query.m << " n=" << query.n
       << " a=" << query.a << " b=" << query.b;
  PiValue closed = v2_closed(query.q, query.m, query.n, query.a, query.b);
  PiValue lattice = v2_lattice(query.q, query.m, query.n, query.a, query.b);
  ComplexApprox oracle =
      oracle_v2(query.q, query.m, query.n, query.a, query.b);
  return build_report(echo.str(), closed, lattice, oracle, tol);
}

VerificationReport verify(const V3Query& query, double tol) {
  std::ostringstream echo;
  echo << "v3 q=" << query.q << " m1=" << query.m1 << " m2=" << query.m2
       << " m3=" << query.m3 << " a=" << query.a << " b=" << query.b
       << " c=" << query.c;
  PiValue closed = v3_closed(query.q, query.m1, query.m2, query.m3, query.a,
                             query.b, query.c);
  PiValue lattice = v3_lattice(query.q, query.m1, query.m2, query.m3, query.a,
                               query.b, query.c);
  ComplexApprox oracle = oracle_v3(query.q, query.m1, query.m2, query.m3,
                                   query.a, query.b, query.c);
  return build_report(echo.str(), closed, lattice, oracle, tol);
}

}  // namespace lmean
