#include "lmean/arith.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace lmean {

Int pow_int(const Int& base, int exp) {
  if (exp < 0) throw std::invalid_argument("pow_int: negative exponent");
  Int result = 1;
  Int b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Rational pow_rat(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw std::invalid_argument("pow_rat: 0 to negative power");
    Rational inv = 1 / base;
    return pow_rat(inv, -exp);
  }
  Rational result = 1;
  Rational b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Int floor_div(const Int& n, const Int& d) {
  if (d <= 0) throw std::invalid_argument("floor_div: d must be positive");
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  static std::vector<Int> table = {1};
  static std::shared_mutex mtx;
  {
    std::shared_lock lock(mtx);
    if (static_cast<std::size_t>(n) < table.size()) return table[n];
  }
  std::unique_lock lock(mtx);
  while (table.size() <= static_cast<std::size_t>(n)) {
    table.push_back(table.back() * static_cast<long long>(table.size()));
  }
  return table[n];
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Float50 to_float50(const Rational& x) {
  return Float50(numerator(x)) / Float50(denominator(x));
}

const Float50& pi50() {
  static const Float50 value = boost::math::constants::pi<Float50>();
  return value;
}

Factorization factorize(long long n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization f;
  f.n = n;
  long long rest = n;
  for (long long p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.emplace_back(p, e);
  }
  if (rest > 1) f.factors.emplace_back(rest, 1);
  return f;
}

int moebius(long long n) {
  Factorization f = factorize(n);
  for (const auto& [p, e] : f.factors) {
    (void)p;
    if (e > 1) return 0;
  }
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

long long euler_phi(long long n) {
  Factorization f = factorize(n);
  long long result = 1;
  for (const auto& [p, e] : f.factors) {
    long long pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= p;
    result *= pe * (p - 1);
  }
  return result;
}

Int jordan_totient(int k, long long q) {
  if (k < 0) throw std::invalid_argument("jordan_totient: negative k");
  if (q < 1) throw std::invalid_argument("jordan_totient: q must be positive");
  if (k == 0) return q == 1 ? 1 : 0;
  Factorization f = factorize(q);
  Int result = 1;
  for (const auto& [p, e] : f.factors) {
    Int pk = pow_int(Int(p), k);
    result *= pow_int(pk, e - 1) * (pk - 1);
  }
  return result;
}

std::vector<long long> divisors(long long n) {
  Factorization f = factorize(n);
  std::vector<long long> divs = {1};
  for (const auto& [p, e] : f.factors) {
    std::size_t old_size = divs.size();
    long long pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < old_size; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

long long gcd(long long a, long long b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0,0) undefined");
  return std::gcd(a, b);
}

}  // namespace lmean
