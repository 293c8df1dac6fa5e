#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/brace_core.hpp"
#include "bracelab/finite_ring.hpp"
#include "bracelab/galois_ring.hpp"

namespace bracelab {

/// Finite nilpotent associative ring by structure constants (no unity).
struct NilpotentRing {
  std::vector<i64> additive_orders;
  std::vector<std::vector<RingCoord>> mult_table;

  AbGroup group() const { return AbGroup{additive_orders}; }
};

struct NilpotentRingReport {
  bool valid = true;
  std::vector<std::string> violations;
  bool nilpotent = false;
  int index = 0;  // smallest k with N^k = 0
  bool commutative = false;
};

/// Bilinearity, associativity on generator triples, commutativity, and the
/// nilpotency index via iterated product spans.
NilpotentRingReport validate_nilpotent_ring(const NilpotentRing& n);

RingCoord nilpotent_mul(const NilpotentRing& n, const RingCoord& x, const RingCoord& y);
u64 nilpotent_mul_index(const NilpotentRing& n, u64 x, u64 y);

/// x o y = x + y + x y on element indices.
u64 adjoint_circle(const NilpotentRing& n, u64 x, u64 y);

/// The adjoint inverse -x + x^2 - x^3 + ... (terminates by nilpotency).
u64 quasi_inverse(const NilpotentRing& n, u64 x);

/// The (non-unital) subring of R on the given additively-closed,
/// multiplicatively-closed element set, re-expressed by structure constants
/// on its own cyclic decomposition.
struct SubringExtract {
  NilpotentRing ring;
  std::vector<u64> to_parent;      // subring index -> index in R
  std::map<u64, u64> from_parent;  // index in R -> subring index
};
SubringExtract subring_from_elements(const FiniteCommRing& R, const std::vector<u64>& elems);

/// The brace of a radical ring: gamma_x(y) = y + x y, circle = adjoint.
/// Carries the index maps between the ring and the brace carrier.
struct RadicalBrace {
  Brace brace;
  std::vector<u64> to_ring;    // carrier index -> ring element index
  std::vector<u64> from_ring;  // ring element index -> carrier index
};
RadicalBrace brace_from_radical_ring(const NilpotentRing& n);

struct CorollaryRadringReport {
  i64 p = 0;
  int rank_d = 0;
  int rank_z = 0;
  bool hypothesis = false;  // rank_d < p - 1
  std::map<i64, u64> additive_stats;
  std::map<i64, u64> adjoint_stats;
  bool stats_equal = false;
  bool adjoint_abelian = false;
  bool isomorphism_found = false;
};

/// Hypothesis and conclusion of the 1 + N ~ N criterion for a commutative
/// nilpotent ring of p-power order with a supplied D-module structure
/// (scalar acts on ring element indices).
CorollaryRadringReport corollary_radring_check(
    const NilpotentRing& n, const GaloisRingSpec& D,
    const std::function<u64(const RingElement&, u64)>& scalar);

}  // namespace bracelab
