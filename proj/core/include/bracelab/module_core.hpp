#pragma once

#include <functional>
#include <map>
#include <unordered_map>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/galois_ring.hpp"

namespace bracelab {

/// Finite module N = (+)_i D/p^{c_i}D over D = GR(p,c,lambda), exponents
/// non-increasing with c_1 = c. Elements are indexed mixed-radix over the
/// lambda * r coefficients (component 0, coefficient 0 fastest).
struct ModuleShape {
  GaloisRingSpec ring;
  std::vector<int> exponents;

  int rank() const { return static_cast<int>(exponents.size()); }
  bool operator==(const ModuleShape&) const = default;
};

/// Sorts the exponents non-increasing and validates them against the ring.
ModuleShape make_shape(GaloisRingSpec ring, std::vector<int> exponents);

u64 shape_size(const ModuleShape& s);

/// The underlying abelian group: lambda cyclic factors of order p^{c_i} per
/// component, in index order.
std::vector<i64> shape_ab_orders(const ModuleShape& s);

struct ModuleElement {
  std::vector<RingElement> components;  // component i reduced mod p^{c_i}
  bool operator==(const ModuleElement&) const = default;
};

u64 elem_index(const ModuleShape& s, const ModuleElement& x);
ModuleElement elem_at(const ModuleShape& s, u64 idx);
ModuleElement elem_zero(const ModuleShape& s);

ModuleElement elem_add(const ModuleShape& s, const ModuleElement& x, const ModuleElement& y);
ModuleElement elem_neg(const ModuleShape& s, const ModuleElement& x);
ModuleElement elem_sub(const ModuleShape& s, const ModuleElement& x, const ModuleElement& y);
ModuleElement scalar_mul(const ModuleShape& s, const RingElement& d, const ModuleElement& x);
ModuleElement int_mul(const ModuleShape& s, i64 k, const ModuleElement& x);

u64 index_add(const ModuleShape& s, u64 x, u64 y);
u64 index_neg(const ModuleShape& s, u64 x);

i64 additive_order(const ModuleShape& s, u64 idx);

/// Omega_i(N,+) = { x : p^i x = 0 }, sorted indices.
std::vector<u64> omega_subgroup(const ModuleShape& s, int i);
/// pN as a sorted index set.
std::vector<u64> times_p_image(const ModuleShape& s);

/// D-linear endomorphism as an r x r matrix; entry (i,j) multiplies source
/// component j into target component i, reduced mod p^{c_i}, and must be
/// divisible by p^{max(c_i - c_j, 0)} for the map to be well defined.
struct ModuleMap {
  std::vector<RingElement> entries;  // row-major, size r*r
  bool operator==(const ModuleMap&) const = default;
};

void check_hom(const ModuleShape& s, const ModuleMap& m);  // throws on violation
ModuleMap identity_map(const ModuleShape& s);
ModuleElement apply_map(const ModuleShape& s, const ModuleMap& m, const ModuleElement& x);
std::vector<u64> action_table(const ModuleShape& s, const ModuleMap& m);
ModuleMap compose_maps(const ModuleShape& s, const ModuleMap& a, const ModuleMap& b);

/// Mod-p invertibility over the residue field as a fast pre-filter (prime
/// base), confirmed by an image-size check.
bool is_bijective(const ModuleShape& s, const ModuleMap& m);

/// Builds the matrix of an additive map given on indices; throws if the
/// table is not the action of any matrix (i.e. not additive/D-linear).
ModuleMap matrix_from_action(const ModuleShape& s, const std::vector<u64>& table);

enum class Linearity { Z, D };

/// The same additive group re-expressed over GR(p,c,1): each exponent is
/// repeated lambda times. Element indices coincide.
ModuleShape z_reshape(const ModuleShape& s);

struct AutomorphismList {
  ModuleShape shape;  // the shape the matrices are over (z_reshape for Z mode)
  std::vector<ModuleMap> maps;
  std::vector<std::vector<u64>> actions;
};

/// All additive (Z) or D-linear (D) automorphisms in canonical scan order.
AutomorphismList enumerate_automorphisms(const ModuleShape& s, Linearity mode,
                                         u64 max_candidates = u64(1) << 22);

struct RankReport {
  int rank_d = 0;
  int rank_z = 0;
  int rank_z_crosscheck = 0;  // from the invariant-factor decomposition
};

RankReport rank_accounting(const ModuleShape& s);

/// Histogram order -> count for a finite group given by its element list and
/// operation on indices (identity must be index 0). Throws if some element
/// never reaches the identity.
std::map<i64, u64> order_statistics(const std::vector<u64>& elements,
                                    const std::function<u64(u64, u64)>& op);

/// Order of a permutation given as a table.
u64 permutation_order(const std::vector<u64>& table);

// --- D-module decomposition over an abstract scalar action -------------------

struct DModuleView {
  GaloisRingSpec ring;
  AddFn add;
  NegFn neg;
  std::function<u64(const RingElement&, u64)> scalar;
};

struct DModuleDecomposition {
  std::vector<u64> generators;
  std::vector<int> exponents;  // non-increasing
  std::unordered_map<u64, std::vector<RingElement>> coords;
};

/// Greedy splitting of a finite module over a prime-base Galois ring into
/// cyclic summands D/p^{k}D; verifies unique recomposition.
DModuleDecomposition dmodule_decompose(const DModuleView& view, const std::vector<u64>& elements);

DModuleView shape_view(const ModuleShape& s);

// --- canonical carriers for derived modules ----------------------------------

/// Shape for the given invariant factors: prime-power factors over a common
/// prime, or all-equal composite factors (cyclic base). Throws when the group
/// is not representable over a single base.
ModuleShape shape_from_factors(const std::vector<i64>& factors);

/// A canonical shape plus index maps for a module presented through ambient
/// operations (a submodule or a quotient).
struct CarrierRebuild {
  ModuleShape shape;
  std::vector<u64> to_view;      // new index -> ambient value
  std::map<u64, u64> from_view;  // ambient value -> new index
};

CarrierRebuild rebuild_carrier(const GaloisRingSpec& ring, const std::vector<u64>& elems,
                               const AddFn& add, const NegFn& neg,
                               const std::function<u64(const RingElement&, u64)>& scalar);

}  // namespace bracelab
