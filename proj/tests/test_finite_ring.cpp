#include "bracelab/finite_ring.hpp"

#include <numeric>
#include <set>

#include "doctest.h"

using namespace bracelab;

TEST_CASE("validation of structure constants") {
  CHECK(validate_ring(cyclic_integer_ring(12)).valid);
  CHECK(validate_ring(quotient_polynomial_ring(4, {3, 1, 1})).valid);

  // Square of an order-2 generator claimed to be an order-4 element.
  FiniteCommRing bad;
  bad.additive_orders = {2, 4};
  bad.unity = {1, 0};
  bad.mult_table = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}};
  bad.mult_table[0][0] = {0, 1};
  CHECK_FALSE(validate_ring(bad).valid);
}

TEST_CASE("idempotents") {
  SUBCASE("Z/12 has 4 and 9") {
    // Oracle: scan integers mod 12.
    std::set<i64> idem;
    for (i64 k = 0; k < 12; ++k)
      if (k * k % 12 == k) idem.insert(k);
    CHECK(idem == std::set<i64>{0, 1, 4, 9});

    FiniteCommRing A = cyclic_integer_ring(12);
    std::vector<RingCoord> prim = primitive_orthogonal_idempotents(A);
    REQUIRE(prim.size() == 2);
    CHECK(prim[0] == RingCoord{4});
    CHECK(prim[1] == RingCoord{9});
  }
  SUBCASE("local rings have only 1") {
    std::vector<RingCoord> prim = primitive_orthogonal_idempotents(cyclic_integer_ring(9));
    REQUIRE(prim.size() == 1);
    CHECK(prim[0] == RingCoord{1});
  }
  SUBCASE("product ring splits") {
    FiniteCommRing F2 = cyclic_integer_ring(2);
    FiniteCommRing F3 = cyclic_integer_ring(3);
    FiniteCommRing P = product_ring(F2, F3);
    std::vector<RingCoord> prim = primitive_orthogonal_idempotents(P);
    REQUIRE(prim.size() == 2);
    CHECK(prim[0] == RingCoord{1, 0});
    CHECK(prim[1] == RingCoord{0, 1});
  }
}

TEST_CASE("locality") {
  LocalityReport z9 = is_local(cyclic_integer_ring(9));
  CHECK(z9.local);
  CHECK(z9.maximal_ideal == std::vector<u64>{0, 3, 6});
  CHECK(z9.p == 3);
  CHECK(z9.lambda == 1);

  CHECK_FALSE(is_local(cyclic_integer_ring(12)).local);

  LocalityReport q = is_local(quotient_polynomial_ring(4, {1, 1, 1}));
  CHECK(q.local);
  CHECK(q.p == 2);
  CHECK(q.lambda == 2);

  // is_local(A) <=> the only primitive idempotent is 1.
  for (i64 m : {8, 9, 10, 12, 25, 30}) {
    FiniteCommRing A = cyclic_integer_ring(m);
    bool loc = is_local(A).local;
    bool single = primitive_orthogonal_idempotents(A).size() == 1;
    CHECK(loc == single);
  }
}

namespace {

// GR(3,2,2) acting on D/3D by reduction.
RingAction galois_residue_action() {
  GaloisRingSpec D = construct_galois_ring(3, 2, 2);
  RingAction a;
  a.ring = galois_ring_as_comm_ring(D);
  a.module_orders = {3, 3};
  a.table.assign(2, std::vector<RingCoord>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RingElement gi = ring_zero(D), gj = ring_zero(D);
      gi.coeffs[i] = 1;
      gj.coeffs[j] = 1;
      RingElement prod = ring_mul(D, gi, gj);
      a.table[i][j] = {prod.coeffs[0] % 3, prod.coeffs[1] % 3};
    }
  return a;
}

}  // namespace

TEST_CASE("annihilator quotients") {
  SUBCASE("Z/12 acting on Z/4") {
    RingAction a;
    a.ring = cyclic_integer_ring(12);
    a.module_orders = {4};
    a.table = {{{1}}};
    REQUIRE(validate_action(a).valid);
    AnnihilatorQuotient q = quotient_by_annihilator(a);
    CHECK(q.annihilator.size() == 3);  // {0,4,8}
    CHECK(q.quotient.additive_orders == std::vector<i64>{4});
    CHECK(validate_ring(q.quotient).valid);
  }
  SUBCASE("GR(3,2,2) on its residue module gives F_9") {
    RingAction a = galois_residue_action();
    REQUIRE(validate_action(a).valid);
    AnnihilatorQuotient q = quotient_by_annihilator(a);
    CHECK(ring_size(q.quotient) == 9);
    LocalityReport loc = is_local(q.quotient);
    CHECK(loc.local);
    CHECK(loc.p == 3);
    CHECK(loc.lambda == 2);
  }
}

TEST_CASE("Peirce module split") {
  SUBCASE("Z/12 on itself") {
    RingAction a = regular_action(cyclic_integer_ring(12));
    std::vector<PeirceSummand> split = peirce_module_split(a);
    REQUIRE(split.size() == 2);
    CHECK(split[0].idempotent == RingCoord{4});
    CHECK(split[0].module_elements == std::vector<u64>{0, 4, 8});
    CHECK(split[1].idempotent == RingCoord{9});
    CHECK(split[1].module_elements == std::vector<u64>{0, 3, 6, 9});
    CHECK(split[0].summand_ring.additive_orders == std::vector<i64>{3});
    CHECK(split[1].summand_ring.additive_orders == std::vector<i64>{4});
  }
  SUBCASE("local ring: single summand") {
    RingAction a = regular_action(cyclic_integer_ring(9));
    std::vector<PeirceSummand> split = peirce_module_split(a);
    REQUIRE(split.size() == 1);
    CHECK(split[0].module_elements.size() == 9);
  }
}

TEST_CASE("padic structure") {
  SUBCASE("order-12 module over Z/12") {
    RingAction a = regular_action(cyclic_integer_ring(12));
    PadicStructure ps = padic_structure(a);
    REQUIRE(ps.summands.size() == 2);
    std::set<std::pair<i64, int>> params;
    for (const PadicSummand& s : ps.summands) params.insert({s.p, s.lambda});
    CHECK(params == std::set<std::pair<i64, int>>{{2, 1}, {3, 1}});
    CHECK_FALSE(ps.common_prime);
    for (const PadicSummand& s : ps.summands) {
      CHECK(s.module_exponents.size() == 1);
      CHECK(s.galois.p == s.p);
    }
  }
  SUBCASE("F_4 x F_16: lambda gcd 2") {
    FiniteCommRing F4 = galois_ring_as_comm_ring(construct_galois_ring(2, 2, 1));
    FiniteCommRing F16 = galois_ring_as_comm_ring(construct_galois_ring(2, 4, 1));
    RingAction a = regular_action(product_ring(F4, F16));
    PadicStructure ps = padic_structure(a);
    REQUIRE(ps.summands.size() == 2);
    CHECK(ps.common_prime);
    CHECK(ps.p == 2);
    CHECK(ps.lambda_gcd == 2);
  }
  SUBCASE("already local Galois ring: single summand, lambda 2") {
    GaloisRingSpec D = construct_galois_ring(3, 2, 2);
    RingAction a = regular_action(galois_ring_as_comm_ring(D));
    PadicStructure ps = padic_structure(a);
    REQUIRE(ps.summands.size() == 1);
    CHECK(ps.common_prime);
    CHECK(ps.p == 3);
    CHECK(ps.lambda_gcd == 2);
    CHECK(ps.summands[0].cexp == 2);
    CHECK(ps.summands[0].module_exponents == std::vector<int>{2});
  }
}

TEST_CASE("prime-power module forces equal residue characteristics") {
  // Order 81 over GR(3,2,2): all p_i = 3.
  GaloisRingSpec D = construct_galois_ring(3, 2, 2);
  RingAction a = regular_action(galois_ring_as_comm_ring(D));
  PadicStructure ps = padic_structure(a);
  for (const PadicSummand& s : ps.summands) CHECK(s.p == 3);
}
