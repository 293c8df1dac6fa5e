#include "bracelab/abelian.hpp"

#include <numeric>

#include "doctest.h"

using namespace bracelab;

namespace {

std::vector<u64> all_elements(const AbGroup& g) {
  std::vector<u64> v(g.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

AddFn adder(const AbGroup& g) {
  return [&g](u64 a, u64 b) { return g.add(a, b); };
}
NegFn negater(const AbGroup& g) {
  return [&g](u64 a) { return g.neg(a); };
}

}  // namespace

TEST_CASE("mixed-radix group basics") {
  AbGroup g{{4, 2}};
  CHECK(g.size() == 8);
  for (u64 i = 0; i < 8; ++i) CHECK(g.index(g.at(i)) == i);
  CHECK(g.order_of(g.index({1, 0})) == 4);
  CHECK(g.order_of(g.index({2, 1})) == 2);
  CHECK(g.order_of(0) == 1);
}

TEST_CASE("invariant factor decomposition") {
  SUBCASE("Z/12 stays cyclic") {
    AbGroup g{{4, 3}};
    CyclicDecomposition dec = decompose_abelian(all_elements(g), adder(g), negater(g));
    CHECK(dec.factors == std::vector<i64>{12});
    CHECK(primary_rank(dec.factors) == 2);
  }
  SUBCASE("Z/4 x Z/2") {
    AbGroup g{{4, 2}};
    CyclicDecomposition dec = decompose_abelian(all_elements(g), adder(g), negater(g));
    CHECK(dec.factors == std::vector<i64>{4, 2});
    CHECK(primary_rank(dec.factors) == 2);
  }
  SUBCASE("(Z/2)^3") {
    AbGroup g{{2, 2, 2}};
    CyclicDecomposition dec = decompose_abelian(all_elements(g), adder(g), negater(g));
    CHECK(dec.factors == std::vector<i64>{2, 2, 2});
  }
  SUBCASE("Z/6 x Z/4 has factors 12, 2") {
    AbGroup g{{6, 4}};
    CyclicDecomposition dec = decompose_abelian(all_elements(g), adder(g), negater(g));
    CHECK(dec.factors == std::vector<i64>{12, 2});
    CHECK(primary_rank(dec.factors) == 3);
  }
}

TEST_CASE("subgroup closure and enumeration") {
  AbGroup g{{4, 2}};
  std::vector<u64> h = subgroup_closure({g.index({2, 0})}, adder(g), negater(g));
  CHECK(h == std::vector<u64>{0, 2});

  std::vector<std::vector<u64>> subs = enumerate_subgroups(all_elements(g), adder(g), negater(g));
  CHECK(subs.size() == 8);  // subgroups of Z/4 x Z/2
  for (const auto& s : subs) {
    for (u64 a : s)
      for (u64 b : s) CHECK(std::binary_search(s.begin(), s.end(), g.add(a, b)));
  }
}

TEST_CASE("explicit isomorphism by invariant-factor matching") {
  AbGroup g1{{2, 4}};
  AbGroup g2{{4, 2}};
  std::vector<u64> elems = all_elements(g1);
  auto iso = find_abelian_isomorphism(elems, adder(g1), negater(g1), adder(g2), negater(g2));
  REQUIRE(iso.has_value());
  for (u64 x : elems)
    for (u64 y : elems) CHECK((*iso)[g1.add(x, y)] == g2.add((*iso)[x], (*iso)[y]));

  AbGroup g3{{8}};
  CHECK_FALSE(
      find_abelian_isomorphism(elems, adder(g1), negater(g1), adder(g3), negater(g3)).has_value());
}
