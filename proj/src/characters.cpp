#include "lmean/characters.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>

#include "lmean/arith.hpp"

namespace lmean {

namespace {

long long mulmod(long long a, long long b, long long mod) {
  return static_cast<long long>(static_cast<__int128>(a) * b % mod);
}

long long powmod(long long base, long long exp, long long mod) {
  if (mod == 1) return 0;
  long long result = 1;
  long long b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, b, mod);
    b = mulmod(b, b, mod);
    exp >>= 1;
  }
  return result;
}

// Inverse of a mod m for gcd(a, m) = 1, via extended Euclid.
long long invmod(long long a, long long m) {
  long long old_r = a % m, r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long quot = old_r / r;
    long long tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1 && old_r != -1)
    throw std::logic_error("invmod: arguments not coprime");
  long long inv = old_r == 1 ? old_s : -old_s;
  return ((inv % m) + m) % m;
}

bool has_full_order(long long g, long long mod, long long phi,
                    const Factorization& phi_factors) {
  if (powmod(g, phi, mod) != 1) return false;
  for (const auto& [p, e] : phi_factors.factors) {
    (void)e;
    if (powmod(g, phi / p, mod) == 1) return false;
  }
  return true;
}

long long primitive_root(long long pe) {
  long long phi = euler_phi(pe);
  Factorization phi_factors = factorize(phi);
  for (long long g = 2; g < pe; ++g) {
    if (std::gcd(g, pe) != 1) continue;
    if (has_full_order(g, pe, phi, phi_factors)) return g;
  }
  throw std::logic_error("primitive_root: search exhausted");
}

// Lift a residue g mod pe to the residue mod q that is g mod pe and 1 mod
// q/pe.
long long crt_lift(long long g, long long pe, long long q) {
  if (q == pe) return g % q;
  long long m = q / pe;
  long long x = mulmod(mulmod(g % q, m % q, q), invmod(m % pe, pe), q);
  long long y = mulmod(pe % q, invmod(pe % m, m), q);
  return (x + y) % q;
}

}  // namespace

std::complex<double> RootOfUnity::to_complex() const {
  if (zero) return {0.0, 0.0};
  double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(N);
  return {std::cos(angle), std::sin(angle)};
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  if (a.zero || b.zero) return a.zero == b.zero;
  long long ga = a.k == 0 ? a.N : std::gcd(a.k, a.N);
  long long gb = b.k == 0 ? b.N : std::gcd(b.k, b.N);
  return a.k / ga == b.k / gb && a.N / ga == b.N / gb;
}

DirichletCharacter CharacterGroup::character(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("character index");
  DirichletCharacter chi;
  chi.group = shared_from_this();
  chi.exponents.resize(components.size());
  // Mixed radix with the first component most significant, so indices
  // enumerate exponent vectors lexicographically.
  for (std::size_t i = components.size(); i-- > 0;) {
    long long ord = components[i].order;
    chi.exponents[i] = static_cast<long long>(index % ord);
    index /= ord;
  }
  return chi;
}

std::size_t CharacterGroup::character_index(
    const DirichletCharacter& chi) const {
  if (chi.exponents.size() != components.size())
    throw std::invalid_argument("character_index: wrong component count");
  std::size_t index = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    index = index * static_cast<std::size_t>(components[i].order) +
            static_cast<std::size_t>(chi.exponents[i]);
  }
  return index;
}

std::shared_ptr<const CharacterGroup> character_group(long long q) {
  if (q < 1) throw std::invalid_argument("character_group: q must be >= 1");
  static std::unordered_map<long long, std::shared_ptr<const CharacterGroup>>
      cache;
  static std::shared_mutex mtx;
  {
    std::shared_lock lock(mtx);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
  }

  auto group = std::make_shared<CharacterGroup>();
  group->q = q;
  group->phi = euler_phi(q);

  Factorization qf = factorize(q);
  for (const auto& [p, e] : qf.factors) {
    long long pe = 1;
    for (int i = 0; i < e; ++i) pe *= p;
    if (p == 2) {
      if (e == 1) continue;  // (Z/2)^x is trivial
      if (e == 2) {
        group->components.push_back({pe, crt_lift(3, pe, q), 2});
      } else {
        group->components.push_back({pe, crt_lift(pe - 1, pe, q), 2});
        group->components.push_back({pe, crt_lift(5, pe, q), pe / 4});
      }
    } else {
      group->components.push_back(
          {pe, crt_lift(primitive_root(pe), pe, q), euler_phi(pe)});
    }
  }

  group->N = 1;
  long long order_product = 1;
  for (const auto& comp : group->components) {
    if (powmod(comp.gen, comp.order, q) != 1)
      throw std::logic_error("character_group: generator order wrong");
    group->N = std::lcm(group->N, comp.order);
    order_product *= comp.order;
  }
  if (order_product != group->phi)
    throw std::logic_error("character_group: component orders do not fill");

  // For q = 1 this yields the single residue 0 (gcd(0, 1) = 1).
  for (long long r = 0; r < q; ++r)
    if (std::gcd(r, q) == 1) group->units.push_back(r);
  for (std::size_t i = 0; i < group->units.size(); ++i)
    group->unit_index.emplace(group->units[i], i);

  // Enumerate all exponent vectors odometer-style, keeping the running
  // residue prod gen_i^(e_i); gen^order = 1 makes digit wraps self-correct.
  // Every unit must be hit exactly once.
  group->dlog_vectors.assign(group->units.size(), {});
  std::vector<bool> seen(group->units.size(), false);
  std::size_t ncomp = group->components.size();
  std::vector<long long> exps(ncomp, 0);
  long long residue = 1 % q;
  std::size_t filled = 0;
  while (true) {
    auto it = group->unit_index.find(residue);
    if (it == group->unit_index.end() || seen[it->second])
      throw std::logic_error("character_group: residue map not bijective");
    seen[it->second] = true;
    group->dlog_vectors[it->second] = exps;
    ++filled;
    bool wrapped_all = true;
    for (std::size_t pos = ncomp; pos-- > 0;) {
      residue = mulmod(residue, group->components[pos].gen, q);
      if (++exps[pos] < group->components[pos].order) {
        wrapped_all = false;
        break;
      }
      exps[pos] = 0;
    }
    if (wrapped_all) break;
  }
  if (filled != group->units.size())
    throw std::logic_error("character_group: units not exhausted");

  std::shared_ptr<const CharacterGroup> result = group;
  std::unique_lock lock(mtx);
  auto [it, inserted] = cache.emplace(q, result);
  return it->second;
}

RootOfUnity char_value(const DirichletCharacter& chi, long long n) {
  const CharacterGroup& g = *chi.group;
  long long r = ((n % g.q) + g.q) % g.q;
  if (g.q > 1 && std::gcd(r, g.q) != 1) return {true, 0, g.N};
  const std::vector<long long>& dlog = g.dlog_vectors[g.unit_index.at(r)];
  long long k = 0;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    long long step = g.N / g.components[i].order;
    long long term = mulmod(mulmod(chi.exponents[i], step, g.N), dlog[i], g.N);
    k = (k + term) % g.N;
  }
  return {false, k, g.N};
}

int parity(const DirichletCharacter& chi) {
  RootOfUnity v = char_value(chi, -1);
  if (v.zero) throw std::logic_error("parity: -1 must be a unit");
  if (v.k == 0) return 1;
  if (2 * v.k == v.N) return -1;
  throw std::logic_error("parity: chi(-1) not +-1");
}

DirichletCharacter multiply(const DirichletCharacter& a,
                            const DirichletCharacter& b) {
  if (a.group->q != b.group->q)
    throw std::invalid_argument("multiply: modulus mismatch");
  DirichletCharacter out;
  out.group = a.group;
  out.exponents.resize(a.exponents.size());
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    long long ord = a.group->components[i].order;
    out.exponents[i] = (a.exponents[i] + b.exponents[i]) % ord;
  }
  return out;
}

DirichletCharacter conjugate(const DirichletCharacter& chi) {
  DirichletCharacter out;
  out.group = chi.group;
  out.exponents.resize(chi.exponents.size());
  for (std::size_t i = 0; i < chi.exponents.size(); ++i) {
    long long ord = chi.group->components[i].order;
    out.exponents[i] = (ord - chi.exponents[i]) % ord;
  }
  return out;
}

bool is_principal(const DirichletCharacter& chi) {
  for (long long e : chi.exponents)
    if (e != 0) return false;
  return true;
}

}  // namespace lmean
