#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bracelab/abelian.hpp"
#include "bracelab/galois_ring.hpp"

namespace bracelab {

/// Finite commutative unital ring by structure constants: the additive group
/// is Z/d_1 x ... x Z/d_n on generators g_1..g_n, and mult_table[i][j] holds
/// the coordinates of g_i * g_j.
struct FiniteCommRing {
  std::vector<i64> additive_orders;
  std::vector<std::vector<RingCoord>> mult_table;
  RingCoord unity;

  AbGroup group() const { return AbGroup{additive_orders}; }
};

u64 ring_size(const FiniteCommRing& A);
RingCoord coord_zero(const FiniteCommRing& A);
RingCoord coord_at(const FiniteCommRing& A, u64 idx);
u64 coord_index(const FiniteCommRing& A, const RingCoord& x);
bool coord_is_zero(const FiniteCommRing& A, const RingCoord& x);
RingCoord coord_add(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y);
RingCoord coord_sub(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y);
RingCoord coord_neg(const FiniteCommRing& A, const RingCoord& x);
RingCoord coord_int_mul(const FiniteCommRing& A, i64 k, const RingCoord& x);
RingCoord coord_mul(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y);
i64 coord_order(const FiniteCommRing& A, const RingCoord& x);

/// Brute-force unit detection (finite commutative ring: unit iff some y has
/// x*y = 1). The mask caches one scan over all pairs.
bool coord_is_unit(const FiniteCommRing& A, const RingCoord& x);
RingCoord coord_inverse(const FiniteCommRing& A, const RingCoord& x);
std::vector<bool> unit_mask(const FiniteCommRing& A);

/// Z/m with its standard tables.
FiniteCommRing cyclic_integer_ring(i64 m);

/// (Z/q)[t]/(f) for a monic f given low-to-high; the generators are the
/// classes of 1, t, ..., t^(deg-1).
FiniteCommRing quotient_polynomial_ring(i64 q, const std::vector<i64>& monic_modulus);

/// Direct product with the componentwise operations.
FiniteCommRing product_ring(const FiniteCommRing& A, const FiniteCommRing& B);

/// A Galois ring spec materialized as a structure-constant ring (generators
/// 1, xi, ..., xi^(lambda-1)).
FiniteCommRing galois_ring_as_comm_ring(const GaloisRingSpec& spec);

struct RingValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Checks bilinearity well-definedness, commutativity, associativity on
/// generator triples and the unity law.
RingValidationReport validate_ring(const FiniteCommRing& A);

/// Complete set of primitive orthogonal idempotents, canonically ordered by
/// element index. Brute-force scan of e*e = e; primitivity decided by
/// scanning idempotents below e.
std::vector<RingCoord> primitive_orthogonal_idempotents(const FiniteCommRing& A,
                                                        u64 bound = u64(1) << 16);

struct LocalityReport {
  bool local = false;
  std::vector<u64> maximal_ideal;  // element indices, sorted
  i64 p = 0;
  int lambda = 0;
};

/// Local iff the non-units form an additive subgroup; then they are the
/// unique maximal ideal and |A/m| = p^lambda.
LocalityReport is_local(const FiniteCommRing& A, u64 bound = u64(1) << 16);

/// Bilinear action of a ring on a finite abelian module, tabulated on
/// generator pairs.
struct RingAction {
  FiniteCommRing ring;
  std::vector<i64> module_orders;
  std::vector<std::vector<RingCoord>> table;  // [ring gen][module gen] -> module coords

  AbGroup module() const { return AbGroup{module_orders}; }
};

/// r . x through bilinear expansion.
RingCoord act(const RingAction& act, const RingCoord& r, const RingCoord& x);
u64 act_index(const RingAction& act, const RingCoord& r, u64 x_idx);

RingValidationReport validate_action(const RingAction& a);

/// Identity action of a ring on its own additive group.
RingAction regular_action(const FiniteCommRing& A);

struct AnnihilatorQuotient {
  FiniteCommRing quotient;           // A = R / Ann_R(N)
  RingAction action;                 // induced faithful action
  std::vector<u64> annihilator;      // indices in R, sorted
  std::vector<RingCoord> generator_lifts;  // lift in R of each quotient generator
};

AnnihilatorQuotient quotient_by_annihilator(const RingAction& a);

/// One Peirce summand N_i = e_i N with the induced action of A_i = e_i A.
struct PeirceSummand {
  RingCoord idempotent;
  FiniteCommRing summand_ring;              // A_i, unity e_i
  std::vector<RingCoord> ring_generator_reps;   // A_i generators inside A
  std::vector<u64> module_elements;         // N_i as sorted ambient indices
  RingAction induced_action;                // A_i on N_i in its own coordinates
  std::vector<u64> module_generator_reps;   // N_i generators as ambient indices
};

/// Direct-sum split N = sum e_i N; verifies unique recomposition and that
/// A_j annihilates N_i for j != i.
std::vector<PeirceSummand> peirce_module_split(const RingAction& a);

struct PadicSummand {
  PeirceSummand peirce;
  i64 p = 0;
  int lambda = 0;
  int cexp = 0;                     // p-exponent of the additive order of e_i
  GaloisRingSpec galois;            // GR(p, cexp, lambda)
  RingEmbedding embedding;          // into A_i
  std::vector<int> module_exponents;  // shape of N_i as a GR-module
};

struct PadicStructure {
  std::vector<PadicSummand> summands;
  bool common_prime = false;
  i64 p = 0;
  int lambda_gcd = 0;               // gcd of the residue degrees when common_prime
};

/// Localizes the action: Peirce split, per-summand locality and Galois-ring
/// embedding, and the induced GR-module shape of each N_i.
PadicStructure padic_structure(const RingAction& a);

}  // namespace bracelab
