#include "lmean/bernoulli.hpp"

#include <cstdlib>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lmean/arith.hpp"

namespace lmean {

namespace {

// Bernoulli numbers via the defining recurrence
// B_n = -1/(n+1) sum_{k<n} C(n+1,k) B_k.
std::vector<Rational>& bernoulli_table() {
  static std::vector<Rational> table = {Rational(1), Rational(-1, 2)};
  return table;
}
std::shared_mutex bernoulli_mtx;

// Coefficient rows for B_n(x): row[k] = C(n,k) B_k, so
// B_n(x) = sum_k row[k] x^(n-k).
std::vector<std::vector<Rational>> poly_rows;
std::shared_mutex poly_mtx;

// Periodic values recur heavily in the lattice and theorem sums with tiny
// denominators; cache those and skip everything else so the map stays small.
constexpr int kCacheMaxN = 32;
constexpr long long kCacheMaxDen = 64;

std::unordered_map<long long, Rational> bf_cache;
std::shared_mutex bf_mtx;

long long bf_key(int n, long long num, long long den) {
  return (static_cast<long long>(n) << 14) | (num << 7) | den;
}

}  // namespace

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  {
    std::shared_lock lock(bernoulli_mtx);
    auto& table = bernoulli_table();
    if (static_cast<std::size_t>(n) < table.size()) return table[n];
  }
  std::unique_lock lock(bernoulli_mtx);
  auto& table = bernoulli_table();
  while (table.size() <= static_cast<std::size_t>(n)) {
    int k = static_cast<int>(table.size());
    if (k % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    Rational sum = 0;
    for (int i = 0; i < k; ++i) sum += Rational(binomial(k + 1, i)) * table[i];
    table.push_back(-sum / Rational(k + 1));
  }
  return table[n];
}

Rational bernoulli_poly(int n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative degree");
  std::vector<Rational> row;
  {
    std::shared_lock lock(poly_mtx);
    if (static_cast<std::size_t>(n) < poly_rows.size()) row = poly_rows[n];
  }
  if (row.empty()) {
    std::unique_lock lock(poly_mtx);
    while (poly_rows.size() <= static_cast<std::size_t>(n)) {
      int k = static_cast<int>(poly_rows.size());
      std::vector<Rational> r(k + 1);
      for (int i = 0; i <= k; ++i)
        r[i] = Rational(binomial(k, i)) * bernoulli_number(i);
      poly_rows.push_back(std::move(r));
    }
    row = poly_rows[n];
  }
  Rational result = row[0];
  for (int k = 1; k <= n; ++k) result = result * x + row[k];
  return result;
}

Rational frac(const Rational& x) {
  Int fl = floor_div(numerator(x), denominator(x));
  return x - Rational(fl);
}

Rational bernoulli_function(int n, const Rational& x) {
  if (n < 0) throw std::invalid_argument("bernoulli_function: negative index");
  Rational f = frac(x);
  if (n == 1 && f == 0) return Rational(0);
  const Int& num = numerator(f);
  const Int& den = denominator(f);
  bool cacheable = n <= kCacheMaxN && den <= kCacheMaxDen;
  long long key = 0;
  if (cacheable) {
    key = bf_key(n, num.convert_to<long long>(), den.convert_to<long long>());
    std::shared_lock lock(bf_mtx);
    auto it = bf_cache.find(key);
    if (it != bf_cache.end()) return it->second;
  }
  Rational value = bernoulli_poly(n, f);
  if (cacheable) {
    std::unique_lock lock(bf_mtx);
    bf_cache.emplace(key, value);
  }
  return value;
}

Rational raabe_sum(int n, long long a, long long d, const Rational& x) {
  if (n < 0) throw std::invalid_argument("raabe_sum: negative index");
  if (a < 1) throw std::invalid_argument("raabe_sum: a must be positive");
  if (d != 0 && gcd(a, std::abs(d)) != 1)
    throw std::invalid_argument("raabe_sum: a and d must be coprime");
  if (d == 0 && a != 1)
    throw std::invalid_argument("raabe_sum: a and d must be coprime");
  Rational sum = 0;
  for (long long l = 0; l < a; ++l)
    sum += bernoulli_function(n, x + Rational(d * l, a));
  return pow_rat(Rational(a), n - 1) * sum;
}

Rational product_expansion(int m, int n, long long a, long long b,
                           const Rational& x, const Rational& y,
                           const Rational& z) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("product_expansion: m, n must be >= 1");
  if (a == 0 || b == 0)
    throw std::invalid_argument("product_expansion: a, b must be nonzero");

  auto is_integer = [](const Rational& t) { return denominator(t) == 1; };
  int sgn_a = a > 0 ? 1 : -1;
  int sgn_b = b > 0 ? 1 : -1;
  long long abs_a = std::abs(a);
  long long abs_b = std::abs(b);
  long long g = gcd(abs_a, abs_b);

  Rational term1 = 0;
  for (int j = 0; j <= m; ++j) {
    Rational inner = 0;
    for (long long l = 1; l <= abs_b; ++l) {
      Rational lz = (Rational(l) + z) / Rational(b);
      inner += bernoulli_function(j, Rational(a) * lz - y) *
               bernoulli_function(m + n - j, x + lz);
    }
    term1 += Rational(binomial(m, j)) * Rational(parity_sign(j)) *
             pow_rat(Rational(a), m - j) / Rational(m + n - j) * inner;
  }
  term1 *= Rational(n) * pow_rat(Rational(b), n - 1) * Rational(sgn_b);

  Rational term2 = 0;
  for (int j = 0; j <= n; ++j) {
    Rational inner = 0;
    for (long long l = 1; l <= abs_a; ++l) {
      Rational ly = (Rational(l) + y) / Rational(a);
      inner += bernoulli_function(j, Rational(b) * ly - z) *
               bernoulli_function(m + n - j, x + ly);
    }
    term2 += Rational(binomial(n, j)) * Rational(parity_sign(j)) *
             pow_rat(Rational(b), n - j) / Rational(m + n - j) * inner;
  }
  term2 *= Rational(m) * pow_rat(Rational(a), m - 1) * Rational(sgn_a);

  Rational term3 = Rational(parity_sign(n - 1)) *
                   Rational(factorial(m) * factorial(n)) *
                   pow_rat(Rational(g), m + n) *
                   bernoulli_function(m + n, (Rational(b) * y - Rational(a) * z) / Rational(g)) /
                   (pow_rat(Rational(a), n) * pow_rat(Rational(b), m) *
                    Rational(factorial(m + n)));

  Rational term4 = 0;
  if (m == 1 && n == 1 && is_integer(Rational(a) * x + y) &&
      is_integer(Rational(b) * x + z)) {
    term4 = -Rational(sgn_a * sgn_b, 4);
  }

  return term1 + term2 + term3 + term4;
}

Float50 fourier_eval(int n, const Rational& x, long long K) {
  if (n < 1) throw std::invalid_argument("fourier_eval: n must be >= 1");
  if (K < 1) throw std::invalid_argument("fourier_eval: K must be >= 1");
  Rational f = frac(x);
  const Int num = numerator(f);
  const Int den = denominator(f);
  const Float50 two_pi = 2 * pi50();

  // The phase e^(2 pi i k x) only takes den distinct values; tabulating them
  // keeps the K-term loop free of 50-digit trig calls.
  if (den > 1000000)
    throw std::invalid_argument("fourier_eval: denominator of x too large");
  const long long den_ll = static_cast<long long>(den);
  const long long num_ll = static_cast<long long>(num);
  std::vector<Float50> cos_tab(den_ll), sin_tab(den_ll);
  for (long long j = 0; j < den_ll; ++j) {
    Float50 theta = two_pi * Float50(j) / Float50(den_ll);
    cos_tab[j] = cos(theta);
    sin_tab[j] = sin(theta);
  }

  Float50 sum_re = 0;
  Float50 sum_im = 0;
  for (long long k = K; k >= 1; --k) {
    long long jp = (k % den_ll) * num_ll % den_ll;
    long long jm = jp == 0 ? 0 : den_ll - jp;
    Float50 kp = Float50(k);
    for (int i = 1; i < n; ++i) kp *= Float50(k);
    Float50 km = n % 2 == 0 ? kp : -kp;
    sum_re += cos_tab[jp] / kp + cos_tab[jm] / km;
    sum_im += sin_tab[jp] / kp + sin_tab[jm] / km;
  }

  // Multiply by -n!/(2 pi i)^n = -n!/(2 pi)^n * i^(-n); the i^(-n) rotation
  // is applied on components.
  Float50 rot_re, rot_im;
  switch (n % 4) {
    case 0:
      rot_re = sum_re;
      rot_im = sum_im;
      break;
    case 1:
      rot_re = sum_im;
      rot_im = -sum_re;
      break;
    case 2:
      rot_re = -sum_re;
      rot_im = -sum_im;
      break;
    default:
      rot_re = -sum_im;
      rot_im = sum_re;
      break;
  }
  Float50 scale = -Float50(factorial(n)) / pow(two_pi, n);
  Float50 result_re = scale * rot_re;
  Float50 result_im = scale * rot_im;
  if (abs(result_im) >= 1e-12)
    throw std::logic_error("fourier_eval: imaginary part failed to cancel");
  return result_re;
}

}  // namespace lmean
