#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace lmean {

// Exact N-th root of unity e^(2 pi i k / N), or zero. All character values
// live here; comparisons and orthogonality sums stay in integer arithmetic.
struct RootOfUnity {
  bool zero = false;
  long long k = 0;  // exponent, normalized to [0, N)
  long long N = 1;

  std::complex<double> to_complex() const;
  bool is_one() const { return !zero && k == 0; }
};

bool operator==(const RootOfUnity& a, const RootOfUnity& b);

// One cyclic factor of (Z/q)^x: gen has the stated multiplicative order mod q
// and is congruent to 1 modulo every other factor's prime power.
struct CyclicComponent {
  long long prime_power = 1;
  long long gen = 1;
  long long order = 1;
};

class CharacterGroup;

// Character = exponent vector against the group's fixed generators;
// exponents[i] is reduced mod components[i].order.
struct DirichletCharacter {
  std::shared_ptr<const CharacterGroup> group;
  std::vector<long long> exponents;
};

class CharacterGroup : public std::enable_shared_from_this<CharacterGroup> {
 public:
  long long q = 1;
  long long phi = 1;
  long long N = 1;  // lcm of component orders; all values are N-th roots
  std::vector<CyclicComponent> components;
  std::vector<long long> units;  // residues coprime to q, ascending
  // dlog_vectors[u][i]: discrete log of units[u] against components[i].gen
  std::vector<std::vector<long long>> dlog_vectors;
  std::unordered_map<long long, std::size_t> unit_index;

  std::size_t size() const { return static_cast<std::size_t>(phi); }

  // index runs over exponent vectors in lexicographic (mixed-radix) order;
  // index 0 is the principal character.
  DirichletCharacter character(std::size_t index) const;
  DirichletCharacter principal() const { return character(0); }
  std::size_t character_index(const DirichletCharacter& chi) const;
};

// Cached per q; the group is immutable once built.
std::shared_ptr<const CharacterGroup> character_group(long long q);

// chi(n): zero marker iff gcd(n, q) > 1, else the exact root-of-unity value.
RootOfUnity char_value(const DirichletCharacter& chi, long long n);

// chi(-1) as +1 or -1.
int parity(const DirichletCharacter& chi);

// Pointwise product / complex conjugate; moduli must match.
DirichletCharacter multiply(const DirichletCharacter& a,
                            const DirichletCharacter& b);
DirichletCharacter conjugate(const DirichletCharacter& chi);

bool is_principal(const DirichletCharacter& chi);

}  // namespace lmean
