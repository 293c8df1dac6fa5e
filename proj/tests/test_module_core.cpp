#include "bracelab/module_core.hpp"

#include <numeric>
#include <set>

#include "doctest.h"

using namespace bracelab;

namespace {

ModuleShape z4z2() { return make_shape(construct_galois_ring(2, 1, 2), {2, 1}); }

}  // namespace

TEST_CASE("indexing round-trips") {
  for (const ModuleShape& s :
       {z4z2(), make_shape(construct_galois_ring(3, 2, 2), {2}),
        make_shape(construct_galois_ring(2, 1, 3), {3, 1})}) {
    for (u64 i = 0; i < shape_size(s); ++i) CHECK(elem_index(s, elem_at(s, i)) == i);
  }
}

TEST_CASE("element arithmetic") {
  ModuleShape s = make_shape(construct_galois_ring(3, 1, 2), {2, 1});
  ModuleElement x = elem_zero(s);
  x.components[0].coeffs[0] = 1;
  x.components[1].coeffs[0] = 1;
  ModuleElement y = int_mul(s, 3, x);
  CHECK(y.components[0].coeffs[0] == 3);
  CHECK(y.components[1].coeffs[0] == 0);  // second component lives mod 3

  for (u64 i = 0; i < shape_size(s); ++i) {
    ModuleElement a = elem_at(s, i);
    CHECK(elem_add(s, a, elem_neg(s, a)) == elem_zero(s));
    CHECK(scalar_mul(s, ring_one(s.ring), a) == a);
  }
}

TEST_CASE("hom condition and application") {
  ModuleShape s = z4z2();
  ModuleMap id = identity_map(s);
  CHECK(is_bijective(s, id));

  // Order-4 target fed from the order-2 source without the factor 2.
  ModuleMap bad = id;
  bad.entries[0 * 2 + 1] = ring_one(s.ring);
  CHECK_THROWS_AS(check_hom(s, bad), std::invalid_argument);

  // Multiplication by 3 on Z/4 + Z/2.
  ModuleMap three;
  three.entries.assign(4, ring_zero(s.ring));
  three.entries[0] = ring_from_int(s.ring, 3);
  three.entries[3] = ring_from_int(s.ring, 1);  // 3 = 1 mod 2
  CHECK(is_bijective(s, three));

  ModuleMap comp = compose_maps(s, three, three);
  std::vector<u64> t1 = action_table(s, three);
  std::vector<u64> t2 = action_table(s, comp);
  for (u64 x = 0; x < shape_size(s); ++x) CHECK(t2[x] == t1[t1[x]]);
}

TEST_CASE("automorphism enumeration counts") {
  CHECK(enumerate_automorphisms(make_shape(construct_galois_ring(2, 1, 2), {2}), Linearity::Z)
            .maps.size() == 2);
  CHECK(enumerate_automorphisms(make_shape(construct_galois_ring(2, 1, 1), {1, 1}), Linearity::Z)
            .maps.size() == 6);
  CHECK(enumerate_automorphisms(z4z2(), Linearity::Z).maps.size() == 8);
  CHECK(enumerate_automorphisms(make_shape(construct_galois_ring(2, 1, 2), {2, 2}), Linearity::Z)
            .maps.size() == 96);
  // Aut_D(D/9D) = units of GR(3,2,2): 81 - 9.
  CHECK(enumerate_automorphisms(make_shape(construct_galois_ring(3, 2, 2), {2}), Linearity::D)
            .maps.size() == 72);
}

TEST_CASE("D-automorphisms are a subset of Z-automorphisms") {
  ModuleShape s = make_shape(construct_galois_ring(3, 1, 2), {1});  // F_9
  AutomorphismList dauts = enumerate_automorphisms(s, Linearity::D);
  AutomorphismList zauts = enumerate_automorphisms(s, Linearity::Z);
  CHECK(dauts.maps.size() == 8);
  CHECK(zauts.maps.size() == 48);
  std::set<std::vector<u64>> zset(zauts.actions.begin(), zauts.actions.end());
  for (const auto& a : dauts.actions) CHECK(zset.count(a) == 1);
}

TEST_CASE("omega chain and p-image") {
  ModuleShape s = z4z2();
  CHECK(omega_subgroup(s, 0) == std::vector<u64>{0});
  CHECK(omega_subgroup(s, 1) == std::vector<u64>{0, 2, 4, 6});
  CHECK(omega_subgroup(s, 2).size() == shape_size(s));
  CHECK(times_p_image(s) == std::vector<u64>{0, 2});

  // Each omega term is closed under addition and scalars.
  ModuleShape t = make_shape(construct_galois_ring(3, 2, 2), {2, 1});
  for (int i = 0; i <= 2; ++i) {
    std::vector<u64> omega = omega_subgroup(t, i);
    std::set<u64> in(omega.begin(), omega.end());
    for (u64 a : omega) {
      for (u64 b : omega) CHECK(in.count(index_add(t, a, b)) == 1);
      CHECK(in.count(elem_index(t, scalar_mul(t, ring_xi(t.ring), elem_at(t, a)))) == 1);
    }
  }
}

TEST_CASE("rank accounting") {
  RankReport r1 = rank_accounting(make_shape(construct_galois_ring(3, 2, 2), {2}));
  CHECK(r1.rank_d == 1);
  CHECK(r1.rank_z == 2);
  CHECK(r1.rank_z_crosscheck == 2);

  RankReport r2 = rank_accounting(make_shape(construct_galois_ring(2, 1, 3), {3, 1}));
  CHECK(r2.rank_d == 2);
  CHECK(r2.rank_z == 2);
  CHECK(r2.rank_z_crosscheck == 2);

  // F_8 with two factors: underlying group (Z/2)^6.
  RankReport r3 = rank_accounting(make_shape(construct_galois_ring(2, 3, 1), {1, 1}));
  CHECK(r3.rank_d == 2);
  CHECK(r3.rank_z == 6);
  CHECK(r3.rank_z_crosscheck == 6);
}

TEST_CASE("order statistics") {
  ModuleShape z4 = make_shape(construct_galois_ring(2, 1, 2), {2});
  std::vector<u64> all(shape_size(z4));
  std::iota(all.begin(), all.end(), 0);
  std::map<i64, u64> st =
      order_statistics(all, [&z4](u64 a, u64 b) { return index_add(z4, a, b); });
  CHECK(st == std::map<i64, u64>{{1, 1}, {2, 1}, {4, 2}});

  ModuleShape z22 = make_shape(construct_galois_ring(2, 1, 1), {1, 1});
  std::vector<u64> all2(4);
  std::iota(all2.begin(), all2.end(), 0);
  std::map<i64, u64> st2 =
      order_statistics(all2, [&z22](u64 a, u64 b) { return index_add(z22, a, b); });
  CHECK(st2 == std::map<i64, u64>{{1, 1}, {2, 3}});

  // Not a group: an operation that escapes the set.
  CHECK_THROWS_AS(order_statistics({0, 1}, [](u64, u64) { return u64(5); }),
                  std::invalid_argument);
}

TEST_CASE("D-module decomposition recovers shapes") {
  for (const ModuleShape& s :
       {make_shape(construct_galois_ring(3, 2, 2), {2}), z4z2(),
        make_shape(construct_galois_ring(2, 2, 2), {2, 1})}) {
    std::vector<u64> all(shape_size(s));
    std::iota(all.begin(), all.end(), 0);
    DModuleDecomposition dec = dmodule_decompose(shape_view(s), all);
    CHECK(dec.exponents == s.exponents);
  }
}

TEST_CASE("carrier rebuild on a submodule") {
  ModuleShape s = z4z2();
  // Submodule 2N = {0, 2}.
  std::vector<u64> sub = times_p_image(s);
  CarrierRebuild cr = rebuild_carrier(
      s.ring, sub, [&s](u64 a, u64 b) { return index_add(s, a, b); },
      [&s](u64 a) { return index_neg(s, a); },
      [&s](const RingElement& d, u64 x) {
        return elem_index(s, scalar_mul(s, d, elem_at(s, x)));
      });
  CHECK(cr.shape.exponents == std::vector<int>{1});
  CHECK(cr.shape.ring.p == 2);
  CHECK(cr.to_view.size() == 2);
}
