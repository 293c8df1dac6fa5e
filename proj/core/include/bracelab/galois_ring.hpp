#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bracelab {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Coordinate vector of an element of a structure-constant ring (see
// finite_ring.hpp); declared here so embeddings can be typed without a
// circular include.
using RingCoord = std::vector<i64>;
struct FiniteCommRing;

/// The finite local ring GR(p,c,lambda) = (Z/p^c)[x]/(g(x)) with g monic of
/// degree lambda and irreducible mod p: the truncation of the ring of
/// integers of the unramified degree-lambda extension of Q_p.
///
/// A composite base is tolerated only with lambda == 1 (the ring is then
/// plain Z/base^c, used as a carrier for non-p-power abelian groups).
/// Residue-field machinery requires a prime base.
struct GaloisRingSpec {
  i64 p = 0;
  int lambda = 0;
  int c = 0;
  std::vector<i64> modulus;  // low-to-high, size lambda+1, monic

  i64 coeff_modulus() const;  // p^c
  u64 size() const;           // p^(c*lambda)
  bool prime_base() const;
  bool operator==(const GaloisRingSpec&) const = default;
};

/// Element of GR(p,c,lambda): coordinates in the basis 1, xi, ..., xi^(lambda-1),
/// each coefficient reduced into [0, p^c).
struct RingElement {
  std::vector<i64> coeffs;
  bool operator==(const RingElement&) const = default;
};

bool is_prime(i64 n);
i64 ipow(i64 base, int exp);

/// Modulus is the lex-smallest monic degree-lambda polynomial over F_p that
/// is irreducible mod p (scanned by canonical coefficient index, constant
/// term fastest), lifted verbatim. Throws on non-prime p.
GaloisRingSpec construct_galois_ring(i64 p, int lambda, int c);

/// Z/m as a lambda == 1 spec; m may be composite.
GaloisRingSpec cyclic_ring_spec(i64 m);

/// Same base and modulus (coefficients re-reduced), lower precision.
GaloisRingSpec truncate_spec(const GaloisRingSpec& spec, int new_c);

/// Full invariant check; throws std::invalid_argument on violation.
void validate_spec(const GaloisRingSpec& spec);

bool is_irreducible_mod_p(const std::vector<i64>& monic_poly, i64 p);

RingElement ring_zero(const GaloisRingSpec& spec);
RingElement ring_one(const GaloisRingSpec& spec);
RingElement ring_xi(const GaloisRingSpec& spec);
RingElement ring_from_int(const GaloisRingSpec& spec, i64 n);

u64 elem_index(const GaloisRingSpec& spec, const RingElement& a);
RingElement elem_at(const GaloisRingSpec& spec, u64 index);

RingElement ring_add(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b);
RingElement ring_sub(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b);
RingElement ring_neg(const GaloisRingSpec& spec, const RingElement& a);
RingElement ring_mul(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b);
RingElement int_mul(const GaloisRingSpec& spec, i64 k, const RingElement& a);
RingElement ring_pow(const GaloisRingSpec& spec, RingElement base, u64 e);

/// Units are exactly the elements outside the maximal ideal (p).
bool is_unit(const GaloisRingSpec& spec, const RingElement& a);

/// Inverse by residue-field inversion followed by Newton lifting
/// b <- b(2 - ab). Throws on non-units.
RingElement ring_inverse(const GaloisRingSpec& spec, const RingElement& a);

// --- residue field F_{p^lambda} (prime base only) ---------------------------

RingElement field_reduce(const GaloisRingSpec& spec, const RingElement& a);
bool field_is_zero(const GaloisRingSpec& spec, const RingElement& a);
RingElement field_add(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b);
RingElement field_mul(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b);
RingElement field_inverse(const GaloisRingSpec& spec, const RingElement& a);

// --- Hensel embedding into a finite local ring -------------------------------

/// A unital ring homomorphism GR(p,c,lambda) -> S, tabulated on every
/// domain element.
struct RingEmbedding {
  GaloisRingSpec domain;
  RingCoord generator_image;     // image of xi
  std::vector<RingCoord> image;  // indexed by domain element index
};

/// Finds xi in S whose residue is a root of the modulus mod p (scan by
/// canonical element index, first match wins), Newton-iterates
/// xi <- xi - g(xi)/g'(xi) to an exact root, and extends to a homomorphism.
/// Requires S local with residue field F_{p^lambda_S}, lambda | lambda_S,
/// and char(S) = p^c.
RingEmbedding embed_into_local_ring(const GaloisRingSpec& spec, const FiniteCommRing& S);

}  // namespace bracelab
