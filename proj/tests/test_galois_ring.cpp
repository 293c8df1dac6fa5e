#include "bracelab/galois_ring.hpp"

#include <numeric>

#include "bracelab/finite_ring.hpp"
#include "doctest.h"

using namespace bracelab;

namespace {

// Independent irreducibility oracle for degree <= 3: a monic polynomial of
// degree 2 or 3 over F_p is reducible iff it has a root.
bool oracle_irreducible(const std::vector<i64>& poly, i64 p) {
  const size_t d = poly.size() - 1;
  REQUIRE(d <= 3);
  if (d == 1) return true;
  for (i64 x = 0; x < p; ++x) {
    i64 v = 0;
    for (size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
    if (v == 0) return false;
  }
  return true;
}

std::vector<i64> oracle_first_irreducible(i64 p, int degree) {
  for (i64 k = 0;; ++k) {
    std::vector<i64> g(degree + 1, 0);
    i64 t = k;
    for (int i = 0; i < degree; ++i) {
      g[i] = t % p;
      t /= p;
    }
    g[degree] = 1;
    if (oracle_irreducible(g, p)) return g;
  }
}

}  // namespace

TEST_CASE("modulus selection is the lex-smallest irreducible") {
  CHECK(construct_galois_ring(2, 1, 3).modulus == std::vector<i64>{0, 1});
  CHECK(construct_galois_ring(2, 2, 1).modulus == oracle_first_irreducible(2, 2));
  CHECK(construct_galois_ring(2, 2, 1).modulus == std::vector<i64>{1, 1, 1});
  CHECK(construct_galois_ring(3, 2, 2).modulus == oracle_first_irreducible(3, 2));
  CHECK(construct_galois_ring(3, 2, 2).modulus == std::vector<i64>{1, 0, 1});
  CHECK(construct_galois_ring(2, 3, 1).modulus == oracle_first_irreducible(2, 3));
  CHECK_THROWS_AS(construct_galois_ring(4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_galois_ring(12, 2, 1), std::invalid_argument);
}

TEST_CASE("determinism and sizes") {
  GaloisRingSpec a = construct_galois_ring(3, 2, 2);
  GaloisRingSpec b = construct_galois_ring(3, 2, 2);
  CHECK(a == b);
  CHECK(a.size() == 81);
  CHECK(construct_galois_ring(2, 1, 3).size() == 8);
  CHECK(construct_galois_ring(2, 2, 2).size() == 16);
}

TEST_CASE("basic arithmetic examples") {
  GaloisRingSpec gr322 = construct_galois_ring(3, 2, 2);
  RingElement xi = ring_xi(gr322);
  RingElement sq = ring_mul(gr322, xi, xi);
  CHECK(sq == ring_from_int(gr322, 8));  // x^2 = -1 mod x^2+1

  GaloisRingSpec z8 = construct_galois_ring(2, 1, 3);
  CHECK(ring_mul(z8, ring_from_int(z8, 3), ring_from_int(z8, 5)) == ring_from_int(z8, 7));

  for (u64 i = 0; i < gr322.size(); ++i) {
    RingElement a = elem_at(gr322, i);
    CHECK(ring_add(gr322, a, ring_neg(gr322, a)) == ring_zero(gr322));
    CHECK(elem_index(gr322, a) == i);
  }
}

TEST_CASE("units and inverses") {
  GaloisRingSpec gr322 = construct_galois_ring(3, 2, 2);
  CHECK_FALSE(is_unit(gr322, ring_from_int(gr322, 3)));
  RingElement xi = ring_xi(gr322);
  RingElement inv = ring_inverse(gr322, xi);
  CHECK(inv == ring_neg(gr322, xi));  // x * (-x) = 1
  CHECK(ring_mul(gr322, xi, inv) == ring_one(gr322));

  GaloisRingSpec z8 = construct_galois_ring(2, 1, 3);
  CHECK(ring_inverse(z8, ring_from_int(z8, 3)) == ring_from_int(z8, 3));
  CHECK_THROWS_AS(ring_inverse(z8, ring_from_int(z8, 2)), std::invalid_argument);

  // Unit xor maximal ideal; non-units form an ideal.
  for (const GaloisRingSpec& spec : {gr322, construct_galois_ring(2, 2, 2)}) {
    std::vector<u64> nonunits;
    for (u64 i = 0; i < spec.size(); ++i) {
      RingElement a = elem_at(spec, i);
      bool in_p = true;
      for (i64 c : a.coeffs)
        if (c % spec.p != 0) in_p = false;
      CHECK(is_unit(spec, a) == !in_p);
      if (!is_unit(spec, a)) nonunits.push_back(i);
      if (is_unit(spec, a)) CHECK(ring_mul(spec, a, ring_inverse(spec, a)) == ring_one(spec));
    }
    for (u64 i : nonunits)
      for (u64 j = 0; j < spec.size(); ++j) {
        RingElement prod = ring_mul(spec, elem_at(spec, i), elem_at(spec, j));
        CHECK_FALSE(is_unit(spec, prod));
      }
  }
}

TEST_CASE("ring laws exhaustively on small rings") {
  for (const GaloisRingSpec& spec :
       {construct_galois_ring(2, 2, 2), construct_galois_ring(2, 1, 3),
        construct_galois_ring(3, 2, 1)}) {
    const u64 n = spec.size();
    for (u64 i = 0; i < n; ++i)
      for (u64 j = 0; j < n; ++j) {
        RingElement a = elem_at(spec, i), b = elem_at(spec, j);
        CHECK(ring_mul(spec, a, b) == ring_mul(spec, b, a));
        for (u64 k = 0; k < n; ++k) {
          RingElement c = elem_at(spec, k);
          CHECK(ring_mul(spec, ring_mul(spec, a, b), c) ==
                ring_mul(spec, a, ring_mul(spec, b, c)));
          CHECK(ring_mul(spec, a, ring_add(spec, b, c)) ==
                ring_add(spec, ring_mul(spec, a, b), ring_mul(spec, a, c)));
        }
      }
  }
}

TEST_CASE("lambda = 1 matches integer arithmetic mod p^c") {
  GaloisRingSpec z9 = construct_galois_ring(3, 1, 2);
  for (i64 a = 0; a < 9; ++a)
    for (i64 b = 0; b < 9; ++b) {
      CHECK(ring_add(z9, ring_from_int(z9, a), ring_from_int(z9, b)) ==
            ring_from_int(z9, (a + b) % 9));
      CHECK(ring_mul(z9, ring_from_int(z9, a), ring_from_int(z9, b)) ==
            ring_from_int(z9, (a * b) % 9));
    }
}

TEST_CASE("Hensel embedding into local rings") {
  GaloisRingSpec gr222 = construct_galois_ring(2, 2, 2);

  SUBCASE("already a root: x -> t") {
    FiniteCommRing S = quotient_polynomial_ring(4, {1, 1, 1});  // (Z/4)[t]/(t^2+t+1)
    RingEmbedding emb = embed_into_local_ring(gr222, S);
    CHECK(emb.generator_image == RingCoord{0, 1});
  }

  SUBCASE("one Hensel step: x -> t + 2") {
    FiniteCommRing S = quotient_polynomial_ring(4, {3, 1, 1});  // (Z/4)[t]/(t^2+t+3)
    // Oracle: g(t+2) = 0 in S for g = t^2 + t + 1.
    RingCoord t2 = {2, 1};
    RingCoord v = coord_add(S, coord_add(S, coord_mul(S, t2, t2), t2), S.unity);
    CHECK(coord_is_zero(S, v));

    RingEmbedding emb = embed_into_local_ring(gr222, S);
    CHECK(emb.generator_image == t2);

    // Unital ring homomorphism on all pairs.
    CHECK(emb.image[elem_index(gr222, ring_one(gr222))] == S.unity);
    for (u64 i = 0; i < gr222.size(); ++i)
      for (u64 j = 0; j < gr222.size(); ++j) {
        RingElement a = elem_at(gr222, i), b = elem_at(gr222, j);
        CHECK(emb.image[elem_index(gr222, ring_add(gr222, a, b))] ==
              coord_add(S, emb.image[i], emb.image[j]));
        CHECK(emb.image[elem_index(gr222, ring_mul(gr222, a, b))] ==
              coord_mul(S, emb.image[i], emb.image[j]));
      }
  }

  SUBCASE("residue degree mismatch errors") {
    FiniteCommRing S = quotient_polynomial_ring(4, {0, 0, 1});  // (Z/4)[t]/(t^2)
    CHECK_THROWS_AS(embed_into_local_ring(gr222, S), std::invalid_argument);
  }

  SUBCASE("non-local codomain errors") {
    FiniteCommRing S = cyclic_integer_ring(12);
    CHECK_THROWS_AS(embed_into_local_ring(construct_galois_ring(2, 1, 2), S),
                    std::invalid_argument);
  }

  SUBCASE("characteristic mismatch errors") {
    FiniteCommRing S = cyclic_integer_ring(8);
    CHECK_THROWS_AS(embed_into_local_ring(construct_galois_ring(2, 1, 2), S),
                    std::invalid_argument);
  }
}
