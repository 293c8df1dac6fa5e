#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bracelab/finite_ring.hpp"
#include "bracelab/module_core.hpp"

namespace bracelab {

struct NilpotentRing;  // radical_ring.hpp

/// Deduplicated store of additive automorphisms of one shape, keyed by their
/// action on element indices.
struct AutRegistry {
  ModuleShape shape;
  std::vector<std::vector<u64>> actions;
  std::vector<ModuleMap> maps;  // parallel to actions

  std::uint32_t add(const ModuleMap& m);
  std::uint32_t add_action(const std::vector<u64>& table);
  std::optional<std::uint32_t> find(const std::vector<u64>& table) const;
  std::uint32_t identity_index();

 private:
  std::map<std::vector<u64>, std::uint32_t> by_action_;
};

/// x -> gamma_x as indices into a registry.
struct GammaFunction {
  AutRegistry registry;
  std::vector<std::uint32_t> assignment;  // per element index
};

enum class GammaClass { NotGamma, ZBrace, DBrace };

struct VerifyResult {
  GammaClass cls = GammaClass::NotGamma;
  std::string detail;
  std::optional<std::pair<u64, u64>> counterexample;

  bool at_least_z() const { return cls != GammaClass::NotGamma; }
};

/// Checks that every assigned table is an additive automorphism, gamma_0 = id,
/// the gamma functional equation on all pairs, and finally D-linearity of
/// every value. Returns the strongest class that holds, with a counterexample
/// pair on failure.
VerifyResult verify_gamma(const ModuleShape& shape, const GammaFunction& gf);

struct Brace {
  ModuleShape shape;
  GammaFunction gamma;
  std::vector<std::vector<u64>> circle;  // cached x o y
  std::vector<u64> circle_inv;
  bool z_brace = false;
  bool d_brace = false;

  u64 size() const { return circle.size(); }
};

/// Validates and caches; throws on NotGamma.
Brace make_brace(ModuleShape shape, GammaFunction gf);
Brace trivial_brace(const ModuleShape& shape);

u64 circle(const Brace& b, u64 x, u64 y);
u64 circle_inverse(const Brace& b, u64 x);
u64 star(const Brace& b, u64 x, u64 y);
u64 gamma_apply(const Brace& b, u64 x, u64 y);  // gamma_x(y)

std::map<i64, u64> additive_stats(const Brace& b);
std::map<i64, u64> circle_stats(const Brace& b);

/// Derives gamma_x(y) = -x + x o y from a circle table and validates it.
/// Throws if the table is not a group with identity 0 or the derived gamma
/// fails verification.
Brace brace_from_circle(const ModuleShape& shape, const std::vector<std::vector<u64>>& table);

/// Componentwise gamma on the merged shape; requires matching base rings
/// (same p, lambda and compatible modulus; precisions may differ).
Brace direct_product(const Brace& a, const Brace& b);

struct SubsetClassification {
  bool contains_zero = false;
  bool add_subgroup = false;
  bool subbrace = false;
  bool left_ideal = false;
  bool ideal = false;
  bool r_submodule = false;
};

SubsetClassification classify_subset(const Brace& b, const std::vector<u64>& subset);

/// Standalone brace on a subbrace, with the index maps into the parent.
struct SubBrace {
  Brace brace;
  std::vector<u64> parent_of;  // sub index -> parent index
  std::map<u64, u64> sub_of;   // parent index -> sub index
};

SubBrace extract_subbrace(const Brace& b, const std::vector<u64>& subset);

struct QuotientBrace {
  Brace brace;
  std::vector<u64> proj;  // parent index -> quotient index
  std::vector<u64> lift;  // quotient index -> canonical representative
};

/// Coset brace modulo an (R-)ideal; canonical least-index representatives.
QuotientBrace quotient_brace(const Brace& b, const std::vector<u64>& ideal);

enum class IsoMode { Brace, RBrace };

/// Brute-force search over additive (Brace) or D-linear (RBrace)
/// isomorphisms; deterministic first match, pruned by order-statistics
/// fingerprints.
std::optional<std::vector<u64>> find_isomorphism(const Brace& a, const Brace& b, IsoMode mode);

/// Right brace axiom on all triples.
bool two_sided_check(const Brace& b);

/// x . y = x * y assembled into a validated nilpotent ring; throws if the
/// brace is not two-sided.
NilpotentRing brace_to_radical_ring(const Brace& b);

/// gamma commutes with each of the given additive endomorphism tables
/// (used for S-linearity of module braces and restriction of scalars).
bool gamma_commutes_with(const Brace& b, const std::vector<std::vector<u64>>& scalar_tables,
                         std::string* detail = nullptr);

/// Scalar action tables of the ring generators of a RingAction whose module
/// is the brace carrier.
std::vector<std::vector<u64>> action_generator_tables(const Brace& b, const RingAction& action);

struct PeirceBraceSummand {
  RingCoord idempotent;
  std::vector<u64> elements;
  bool is_left_ideal = false;
  bool is_ideal = false;
};

struct PeirceBraceReport {
  std::vector<PeirceBraceSummand> summands;
  bool all_ideals = false;
  // Prop-style equivalent conditions, each checked independently.
  bool componentwise_circle = false;  // (i)
  bool gamma_splits = false;          // (iii)
  bool star_splits = false;           // (iv)
  std::vector<SubBrace> product_decomposition;  // filled when all_ideals
};

/// Peirce split of a module brace along the primitive idempotents of the
/// acting ring; each summand is always a left ideal, and when all are ideals
/// the four splitting conditions are verified to co-occur.
PeirceBraceReport peirce_split_brace(const Brace& b, const RingAction& action);

}  // namespace bracelab
