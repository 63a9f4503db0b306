#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "lmean/arith.hpp"
#include "lmean/characters.hpp"

using namespace lmean;

namespace {

RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b, long long N) {
  if (a.zero || b.zero) return RootOfUnity{true, 0, N};
  return RootOfUnity{false, (a.k + b.k) % N, N};
}

}  // namespace

TEST_CASE("group structure for small moduli") {
  auto g1 = character_group(1);
  CHECK(g1->size() == 1);
  CHECK(g1->components.empty());

  auto g8 = character_group(8);
  REQUIRE(g8->components.size() == 2);
  CHECK(g8->components[0].order == 2);
  CHECK(g8->components[1].order == 2);
  CHECK(g8->phi == 4);

  auto g16 = character_group(16);
  REQUIRE(g16->components.size() == 2);
  CHECK(g16->components[0].order == 2);
  CHECK(g16->components[1].order == 4);

  auto g5 = character_group(5);
  REQUIRE(g5->components.size() == 1);
  CHECK(g5->components[0].order == 4);

  // Cached: repeated lookups return the same object.
  CHECK(character_group(8).get() == g8.get());
}

TEST_CASE("group order equals phi") {
  for (long long q = 1; q <= 100; ++q)
    CHECK(character_group(q)->size() ==
          static_cast<std::size_t>(euler_phi(q)));
}

TEST_CASE("frozen character values") {
  // Nontrivial character mod 3 at 2 is -1.
  auto g3 = character_group(3);
  DirichletCharacter chi3 = g3->character(1);
  RootOfUnity v = char_value(chi3, 2);
  CHECK(!v.zero);
  CHECK(v == RootOfUnity{false, 1, 2});
  CHECK(parity(chi3) == -1);

  // Order-4 character mod 5 maps the primitive root 2 to a primitive 4th
  // root of unity and is odd.
  auto g5 = character_group(5);
  DirichletCharacter chi5 = g5->character(1);
  RootOfUnity w = char_value(chi5, 2);
  CHECK(!w.zero);
  CHECK(w.N / gcd(w.k, w.N) == 4);
  CHECK(parity(chi5) == -1);

  // Zero off the unit group.
  CHECK(char_value(chi5, 10).zero);
  CHECK(char_value(chi3, -3).zero);
}

TEST_CASE("principal character and enumeration order") {
  for (long long q : {1LL, 2LL, 5LL, 8LL, 12LL, 40LL}) {
    auto g = character_group(q);
    DirichletCharacter chi0 = g->principal();
    CHECK(is_principal(chi0));
    for (long long u : g->units)
      CHECK(char_value(chi0, u).is_one());
    // index round-trip covers the whole dual group exactly once.
    for (std::size_t i = 0; i < g->size(); ++i)
      CHECK(g->character_index(g->character(i)) == i);
  }
  // Lexicographic order over exponent vectors for a cyclic group.
  auto g5 = character_group(5);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(g5->character(i).exponents[0] == static_cast<long long>(i));
}

TEST_CASE("orthogonality is exact") {
  // Exact evaluation of sum_chi chi(a) conj(chi(b)): with u = a b^(-1), the
  // sum factors over cyclic components as prod_i sum_e w^(e d_i), each factor
  // order_i when order_i | d_i and 0 otherwise.
  for (long long q = 1; q <= 50; ++q) {
    auto g = character_group(q);
    for (long long a : g->units)
      for (long long b : g->units) {
        // d = dlog(a) - dlog(b) componentwise.
        const auto& da = g->dlog_vectors[g->unit_index.at(a)];
        const auto& db = g->dlog_vectors[g->unit_index.at(b)];
        long long exact = 1;
        for (std::size_t i = 0; i < g->components.size(); ++i) {
          long long ord = g->components[i].order;
          long long d = ((da[i] - db[i]) % ord + ord) % ord;
          exact = d == 0 ? exact * ord : 0;
          if (exact == 0) break;
        }
        CHECK(exact == (a == b ? g->phi : 0));
      }
  }
  // Numeric cross-check at small moduli.
  for (long long q : {3LL, 4LL, 5LL, 8LL, 12LL}) {
    auto g = character_group(q);
    for (long long a : g->units)
      for (long long b : g->units) {
        std::complex<double> s = 0;
        for (std::size_t i = 0; i < g->size(); ++i) {
          DirichletCharacter chi = g->character(i);
          s += char_value(chi, a).to_complex() *
               std::conj(char_value(chi, b).to_complex());
        }
        double expected = a == b ? static_cast<double>(g->phi) : 0.0;
        CHECK(std::abs(s - expected) < 1e-9);
      }
  }
}

TEST_CASE("parity counts") {
  for (long long q = 1; q <= 50; ++q) {
    auto g = character_group(q);
    long long even = 0, odd = 0;
    for (std::size_t i = 0; i < g->size(); ++i)
      (parity(g->character(i)) == 1 ? even : odd) += 1;
    if (q <= 2) {
      CHECK(even == g->phi);
      CHECK(odd == 0);
    } else {
      CHECK(even == g->phi / 2);
      CHECK(odd == g->phi / 2);
    }
  }
}

TEST_CASE("complete multiplicativity") {
  for (long long q : {1LL, 2LL, 5LL, 8LL, 12LL, 16LL, 24LL, 36LL, 45LL, 49LL}) {
    auto g = character_group(q);
    for (std::size_t i = 0; i < g->size(); ++i) {
      DirichletCharacter chi = g->character(i);
      for (long long m = -10; m <= 20; ++m)
        for (long long n : {-7LL, 2LL, 3LL, 11LL, 25LL}) {
          RootOfUnity lhs = char_value(chi, m * n);
          RootOfUnity rhs =
              root_mul(char_value(chi, m), char_value(chi, n), g->N);
          CHECK(lhs == rhs);
        }
    }
  }
}

TEST_CASE("periodicity") {
  for (long long q : {5LL, 8LL, 12LL}) {
    auto g = character_group(q);
    for (std::size_t i = 0; i < g->size(); ++i) {
      DirichletCharacter chi = g->character(i);
      for (long long n = -q; n <= q; ++n) {
        CHECK(char_value(chi, n) == char_value(chi, n + q));
        CHECK(char_value(chi, n) == char_value(chi, n - 3 * q));
      }
    }
  }
}

TEST_CASE("multiply and conjugate") {
  auto g = character_group(12);
  for (std::size_t i = 0; i < g->size(); ++i) {
    DirichletCharacter a = g->character(i);
    CHECK(is_principal(multiply(a, conjugate(a))));
    CHECK(parity(conjugate(a)) == parity(a));
    for (std::size_t j = 0; j < g->size(); ++j) {
      DirichletCharacter b = g->character(j);
      DirichletCharacter ab = multiply(a, b);
      CHECK(parity(ab) == parity(a) * parity(b));
      for (long long u : g->units)
        CHECK(char_value(ab, u) ==
              root_mul(char_value(a, u), char_value(b, u), g->N));
    }
  }
  auto g5 = character_group(5);
  CHECK_THROWS_AS(multiply(g->character(0), g5->character(0)),
                  std::invalid_argument);
}

TEST_CASE("conjugate inverts values") {
  for (long long q : {5LL, 7LL, 16LL}) {
    auto g = character_group(q);
    for (std::size_t i = 0; i < g->size(); ++i) {
      DirichletCharacter chi = g->character(i);
      DirichletCharacter bar = conjugate(chi);
      for (long long u : g->units) {
        RootOfUnity prod =
            root_mul(char_value(chi, u), char_value(bar, u), g->N);
        CHECK(prod.is_one());
      }
    }
  }
}

TEST_CASE("bad modulus rejected") {
  CHECK_THROWS_AS(character_group(0), std::invalid_argument);
  CHECK_THROWS_AS(character_group(-4), std::invalid_argument);
}
