#pragma once

// Shared constructions used across the test suites.

#include <numeric>
#include <vector>

#include "bracelab/brace_core.hpp"
#include "bracelab/finite_ring.hpp"
#include "bracelab/module_core.hpp"
#include "bracelab/radical_ring.hpp"

namespace bracelab::testing {

// The ring 2Z/8Z transported to a Z/4 carrier: k corresponds to 2k, with
// product k * l = 2kl mod 4.
inline NilpotentRing two_z8z_ring() {
  NilpotentRing n;
  n.additive_orders = {4};
  n.mult_table = {{{2}}};
  return n;
}

// Its adjoint brace: k o l = k + l + 2kl on Z/4.
inline Brace two_z8z_brace() {
  ModuleShape shape = make_shape(construct_galois_ring(2, 1, 2), {2});
  std::vector<std::vector<u64>> table(4, std::vector<u64>(4));
  for (u64 x = 0; x < 4; ++x)
    for (u64 y = 0; y < 4; ++y) table[x][y] = (x + y + 2 * x * y) % 4;
  return brace_from_circle(shape, table);
}

// Z[i]/4 as (Z/4)[t]/(t^2+1).
inline FiniteCommRing gaussian_scalars() { return quotient_polynomial_ring(4, {1, 0, 1}); }

// The (Z[i]/4)^2 carrier: coordinates (a0, a1, b0, b1) for (a0+a1 i, b0+b1 i).
inline ModuleShape gaussian_shape() {
  return make_shape(construct_galois_ring(2, 1, 2), {2, 2, 2, 2});
}

// gamma_(alpha,beta) = (-1)^(Re alpha) id.
inline Brace gaussian_brace() {
  ModuleShape shape = gaussian_shape();
  const u64 n = shape_size(shape);
  GammaFunction gf;
  gf.registry.shape = shape;
  std::uint32_t id = gf.registry.identity_index();
  std::vector<u64> neg(n);
  for (u64 x = 0; x < n; ++x) neg[x] = index_neg(shape, x);
  std::uint32_t negidx = gf.registry.add_action(neg);
  gf.assignment.assign(n, id);
  for (u64 x = 0; x < n; ++x) {
    ModuleElement e = elem_at(shape, x);
    if (e.components[0].coeffs[0] % 2 == 1) gf.assignment[x] = negidx;
  }
  return make_brace(shape, std::move(gf));
}

// The componentwise action of Z[i]/4 on (Z[i]/4)^2.
inline RingAction gaussian_action() {
  FiniteCommRing S = gaussian_scalars();
  RingAction a;
  a.ring = S;
  a.module_orders = {4, 4, 4, 4};
  a.table.assign(2, std::vector<RingCoord>(4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) {
      RingCoord gi(2, 0), bj(2, 0);
      gi[i] = 1;
      bj[j % 2] = 1;
      RingCoord prod = coord_mul(S, gi, bj);
      RingCoord entry(4, 0);
      entry[(j / 2) * 2] = prod[0];
      entry[(j / 2) * 2 + 1] = prod[1];
      a.table[i][j] = entry;
    }
  return a;
}

// N = GR(3,2,2) with the nilpotent product a * b = 3ab; the carrier is the
// ring's own element indexing (the direct construction, isomorphic to
// 3 GR(3,3,2) / (27)).
inline NilpotentRing galois_gain_ring() {
  GaloisRingSpec D = construct_galois_ring(3, 2, 2);
  NilpotentRing n;
  n.additive_orders = {9, 9};
  n.mult_table.assign(2, std::vector<RingCoord>(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      RingElement gi = ring_zero(D), gj = ring_zero(D);
      gi.coeffs[i] = 1;
      gj.coeffs[j] = 1;
      RingElement prod = int_mul(D, 3, ring_mul(D, gi, gj));
      n.mult_table[i][j] = prod.coeffs;
    }
  return n;
}

// Scalar action of GR(3,2,2) on the galois_gain_ring carrier.
inline std::function<u64(const RingElement&, u64)> galois_gain_scalar() {
  GaloisRingSpec D = construct_galois_ring(3, 2, 2);
  return [D](const RingElement& d, u64 x) {
    return elem_index(D, ring_mul(D, d, elem_at(D, x)));
  };
}

inline std::vector<u64> all_indices(u64 n) {
  std::vector<u64> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace bracelab::testing
