#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bracelab/galois_ring.hpp"

namespace bracelab {

/// Finite abelian group Z/d_1 x ... x Z/d_n with elements addressed by their
/// mixed-radix index (coordinate 0 fastest).
struct AbGroup {
  std::vector<i64> orders;

  u64 size() const;
  u64 index(const std::vector<i64>& coord) const;
  std::vector<i64> at(u64 idx) const;
  u64 add(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 scalar(i64 k, u64 a) const;
  i64 order_of(u64 a) const;
};

using AddFn = std::function<u64(u64, u64)>;
using NegFn = std::function<u64(u64)>;

/// Additive closure of a generator list; returns the subgroup as a sorted
/// index vector (always contains 0).
std::vector<u64> subgroup_closure(const std::vector<u64>& generators, const AddFn& add,
                                  const NegFn& neg);

/// Invariant-factor decomposition of a finite abelian group given as a sorted
/// element list closed under the operations. Generators g_j with orders
/// factors[j], factors[j+1] | factors[j], every element uniquely
/// sum c_j g_j; coords maps each element to its (c_j) tuple. The uniqueness
/// is verified during construction.
struct CyclicDecomposition {
  std::vector<u64> generators;
  std::vector<i64> factors;
  std::unordered_map<u64, std::vector<i64>> coords;
};

CyclicDecomposition decompose_abelian(const std::vector<u64>& elements, const AddFn& add,
                                      const NegFn& neg);

/// Number of indecomposable (prime-power) cyclic factors.
int primary_rank(const std::vector<i64>& invariant_factors);

/// All subgroups of the given group, each a sorted index vector. Throws if
/// the group is larger than `limit`.
std::vector<std::vector<u64>> enumerate_subgroups(const std::vector<u64>& elements,
                                                  const AddFn& add, const NegFn& neg,
                                                  u64 limit = 64);

/// Explicit isomorphism between two abelian group structures on the same
/// element set, by invariant-factor matching; verified elementwise. The
/// result is aligned with `elements`: f[i] is the image of elements[i], and
/// f(add1(x,y)) = add2(f(x),f(y)). Nothing when the factors differ.
std::optional<std::vector<u64>> find_abelian_isomorphism(const std::vector<u64>& elements,
                                                         const AddFn& add1, const NegFn& neg1,
                                                         const AddFn& add2, const NegFn& neg2);

}  // namespace bracelab
