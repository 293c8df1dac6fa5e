#include "bracelab/brace_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bracelab/radical_ring.hpp"

namespace bracelab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

std::vector<bool> make_mask(u64 n, const std::vector<u64>& subset) {
  std::vector<bool> mask(n, false);
  for (u64 x : subset) mask[x] = true;
  return mask;
}

// Indices of the unit coefficient vectors: the lambda*r additive generators.
std::vector<u64> flat_generators(const ModuleShape& s) {
  std::vector<u64> gens;
  u64 stride = 1;
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    u64 radix = static_cast<u64>(ipow(s.ring.p, s.exponents[i]));
    for (int k = 0; k < s.ring.lambda; ++k) {
      gens.push_back(stride);
      stride *= radix;
    }
  }
  return gens;
}

}  // namespace

std::uint32_t AutRegistry::add_action(const std::vector<u64>& table) {
  auto it = by_action_.find(table);
  if (it != by_action_.end()) return it->second;
  std::uint32_t idx = static_cast<std::uint32_t>(actions.size());
  actions.push_back(table);
  by_action_.emplace(table, idx);
  return idx;
}

std::uint32_t AutRegistry::add(const ModuleMap& m) { return add_action(action_table(shape, m)); }

std::optional<std::uint32_t> AutRegistry::find(const std::vector<u64>& table) const {
  auto it = by_action_.find(table);
  if (it == by_action_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t AutRegistry::identity_index() {
  std::vector<u64> id(shape_size(shape));
  std::iota(id.begin(), id.end(), 0);
  return add_action(id);
}

VerifyResult verify_gamma(const ModuleShape& shape, const GammaFunction& gf) {
  VerifyResult res;
  const u64 n = shape_size(shape);
  if (gf.assignment.size() != n) {
    res.detail = "gamma table does not cover the module";
    return res;
  }
  for (std::uint32_t idx : gf.assignment)
    if (idx >= gf.registry.actions.size()) {
      res.detail = "gamma index out of registry range";
      return res;
    }

  // Per-action sanity: permutation + additivity on generator increments.
  std::vector<u64> gens = flat_generators(shape);
  std::set<std::uint32_t> used(gf.assignment.begin(), gf.assignment.end());
  for (std::uint32_t idx : used) {
    const std::vector<u64>& a = gf.registry.actions[idx];
    if (a.size() != n) {
      res.detail = "action table size mismatch";
      return res;
    }
    std::vector<bool> hit(n, false);
    for (u64 v : a) {
      if (v >= n || hit[v]) {
        res.detail = "gamma value is not a permutation";
        return res;
      }
      hit[v] = true;
    }
    if (a[0] != 0) {
      res.detail = "gamma value does not fix 0";
      return res;
    }
    for (u64 g : gens)
      for (u64 y = 0; y < n; ++y)
        if (a[index_add(shape, y, g)] != index_add(shape, a[y], a[g])) {
          res.detail = "gamma value is not additive";
          res.counterexample = {y, g};
          return res;
        }
  }

  const std::vector<u64>& id0 = gf.registry.actions[gf.assignment[0]];
  for (u64 w = 0; w < n; ++w)
    if (id0[w] != w) {
      res.detail = "gamma_0 is not the identity";
      return res;
    }

  // Gamma functional equation on all pairs.
  for (u64 x = 0; x < n; ++x) {
    const std::vector<u64>& ax = gf.registry.actions[gf.assignment[x]];
    for (u64 y = 0; y < n; ++y) {
      const std::vector<u64>& ay = gf.registry.actions[gf.assignment[y]];
      u64 z = index_add(shape, x, ax[y]);
      const std::vector<u64>& az = gf.registry.actions[gf.assignment[z]];
      for (u64 w = 0; w < n; ++w)
        if (az[w] != ax[ay[w]]) {
          res.detail = "gamma functional equation fails";
          res.counterexample = {x, y};
          return res;
        }
    }
  }
  res.cls = GammaClass::ZBrace;

  // D-linearity: commuting with the xi scalar (lambda == 1 scalars are
  // integers, so additivity already decides).
  if (shape.ring.lambda > 1) {
    std::vector<u64> xi_table(n);
    RingElement xi = ring_xi(shape.ring);
    for (u64 x = 0; x < n; ++x)
      xi_table[x] = elem_index(shape, scalar_mul(shape, xi, elem_at(shape, x)));
    for (u64 x = 0; x < n; ++x) {
      const std::vector<u64>& ax = gf.registry.actions[gf.assignment[x]];
      for (u64 y = 0; y < n; ++y)
        if (ax[xi_table[y]] != xi_table[ax[y]]) {
          res.detail = "gamma value is additive but not D-linear";
          res.counterexample = {x, y};
          return res;
        }
    }
  }
  res.cls = GammaClass::DBrace;
  return res;
}

Brace make_brace(ModuleShape shape, GammaFunction gf) {
  VerifyResult v = verify_gamma(shape, gf);
  if (!v.at_least_z()) throw std::invalid_argument("not a gamma function: " + v.detail);
  Brace b;
  b.shape = std::move(shape);
  b.gamma = std::move(gf);
  b.z_brace = true;
  b.d_brace = v.cls == GammaClass::DBrace;
  const u64 n = shape_size(b.shape);
  b.circle.assign(n, std::vector<u64>(n));
  b.circle_inv.assign(n, 0);
  for (u64 x = 0; x < n; ++x) {
    const std::vector<u64>& ax = b.gamma.registry.actions[b.gamma.assignment[x]];
    for (u64 y = 0; y < n; ++y) {
      u64 z = index_add(b.shape, x, ax[y]);
      b.circle[x][y] = z;
      if (z == 0) b.circle_inv[x] = y;
    }
  }
  return b;
}

Brace trivial_brace(const ModuleShape& shape) {
  GammaFunction gf;
  gf.registry.shape = shape;
  std::uint32_t id = gf.registry.identity_index();
  gf.assignment.assign(shape_size(shape), id);
  return make_brace(shape, gf);
}

u64 circle(const Brace& b, u64 x, u64 y) { return b.circle[x][y]; }
u64 circle_inverse(const Brace& b, u64 x) { return b.circle_inv[x]; }

u64 gamma_apply(const Brace& b, u64 x, u64 y) {
  return b.gamma.registry.actions[b.gamma.assignment[x]][y];
}

u64 star(const Brace& b, u64 x, u64 y) {
  return index_add(b.shape, gamma_apply(b, x, y), index_neg(b.shape, y));
}

std::map<i64, u64> additive_stats(const Brace& b) {
  std::vector<u64> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  const ModuleShape& s = b.shape;
  return order_statistics(all, [&s](u64 x, u64 y) { return index_add(s, x, y); });
}

std::map<i64, u64> circle_stats(const Brace& b) {
  std::vector<u64> all(b.size());
  std::iota(all.begin(), all.end(), 0);
  return order_statistics(all, [&b](u64 x, u64 y) { return b.circle[x][y]; });
}

Brace brace_from_circle(const ModuleShape& shape, const std::vector<std::vector<u64>>& table) {
  const u64 n = shape_size(shape);
  require(table.size() == n, "circle table has wrong size");
  for (const auto& row : table) require(row.size() == n, "circle table row has wrong size");
  for (u64 x = 0; x < n; ++x) {
    require(table[x][0] == x, "0 is not a right identity for the circle table");
    require(table[0][x] == x, "0 is not a left identity for the circle table");
  }
  GammaFunction gf;
  gf.registry.shape = shape;
  gf.assignment.assign(n, 0);
  for (u64 x = 0; x < n; ++x) {
    std::vector<u64> a(n);
    u64 negx = index_neg(shape, x);
    for (u64 y = 0; y < n; ++y) a[y] = index_add(shape, negx, table[x][y]);
    gf.assignment[x] = gf.registry.add_action(a);
  }
  Brace b = make_brace(shape, std::move(gf));  // throws when not a brace
  if (b.circle != table) throw std::logic_error("circle round-trip mismatch");
  return b;
}

Brace direct_product(const Brace& a, const Brace& b) {
  const ModuleShape& s1 = a.shape;
  const ModuleShape& s2 = b.shape;
  require(s1.ring.p == s2.ring.p && s1.ring.lambda == s2.ring.lambda,
          "direct product requires the same base ring");
  GaloisRingSpec ring = s1.ring.c >= s2.ring.c ? s1.ring : s2.ring;
  const GaloisRingSpec& small = s1.ring.c >= s2.ring.c ? s2.ring : s1.ring;
  require(truncate_spec(ring, small.c) == small, "base ring moduli are incompatible");

  // Stable merge of the sorted exponent lists, larger first, factor a first.
  struct Slot {
    int src;
    size_t comp;
  };
  std::vector<Slot> slots;
  std::vector<int> exps;
  size_t i = 0, j = 0;
  while (i < s1.exponents.size() || j < s2.exponents.size()) {
    bool take1 = j >= s2.exponents.size() ||
                 (i < s1.exponents.size() && s1.exponents[i] >= s2.exponents[j]);
    if (take1) {
      slots.push_back({1, i});
      exps.push_back(s1.exponents[i]);
      ++i;
    } else {
      slots.push_back({2, j});
      exps.push_back(s2.exponents[j]);
      ++j;
    }
  }
  ModuleShape shape = make_shape(ring, exps);

  const u64 n1 = a.size(), n2 = b.size();
  std::vector<u64> pair_index(n1 * n2);
  for (u64 x1 = 0; x1 < n1; ++x1) {
    ModuleElement e1 = elem_at(s1, x1);
    for (u64 x2 = 0; x2 < n2; ++x2) {
      ModuleElement e2 = elem_at(s2, x2);
      ModuleElement e = elem_zero(shape);
      for (size_t k = 0; k < slots.size(); ++k)
        e.components[k] = slots[k].src == 1 ? e1.components[slots[k].comp]
                                            : e2.components[slots[k].comp];
      pair_index[x1 * n2 + x2] = elem_index(shape, e);
    }
  }

  GammaFunction gf;
  gf.registry.shape = shape;
  gf.assignment.assign(n1 * n2, 0);
  std::vector<u64> act(n1 * n2);
  for (u64 x1 = 0; x1 < n1; ++x1)
    for (u64 x2 = 0; x2 < n2; ++x2) {
      for (u64 y1 = 0; y1 < n1; ++y1)
        for (u64 y2 = 0; y2 < n2; ++y2)
          act[pair_index[y1 * n2 + y2]] =
              pair_index[gamma_apply(a, x1, y1) * n2 + gamma_apply(b, x2, y2)];
      gf.assignment[pair_index[x1 * n2 + x2]] = gf.registry.add_action(act);
    }
  return make_brace(shape, std::move(gf));
}

SubsetClassification classify_subset(const Brace& b, const std::vector<u64>& subset) {
  SubsetClassification out;
  const u64 n = b.size();
  std::vector<bool> mask = make_mask(n, subset);
  out.contains_zero = !subset.empty() && mask[0];
  if (!out.contains_zero) return out;

  out.add_subgroup = true;
  for (u64 x : subset) {
    for (u64 y : subset)
      if (!mask[index_add(b.shape, x, y)]) {
        out.add_subgroup = false;
        break;
      }
    if (!out.add_subgroup) break;
  }
  if (!out.add_subgroup) return out;

  bool circle_closed = true;
  for (u64 x : subset)
    for (u64 y : subset)
      if (!mask[b.circle[x][y]]) {
        circle_closed = false;
        break;
      }
  out.subbrace = circle_closed;

  bool gamma_invariant = true;
  for (u64 x = 0; x < n && gamma_invariant; ++x) {
    const std::vector<u64>& ax = b.gamma.registry.actions[b.gamma.assignment[x]];
    for (u64 s : subset)
      if (!mask[ax[s]]) {
        gamma_invariant = false;
        break;
      }
  }
  out.left_ideal = out.add_subgroup && gamma_invariant;

  if (out.left_ideal) {
    bool normal = true;
    for (u64 z = 0; z < n && normal; ++z) {
      u64 zinv = b.circle_inv[z];
      for (u64 s : subset)
        if (!mask[b.circle[b.circle[z][s]][zinv]]) {
          normal = false;
          break;
        }
    }
    out.ideal = normal;
  }

  bool scalar_closed = true;
  if (b.shape.ring.lambda > 1) {
    RingElement xi = ring_xi(b.shape.ring);
    for (u64 s : subset)
      if (!mask[elem_index(b.shape, scalar_mul(b.shape, xi, elem_at(b.shape, s)))]) {
        scalar_closed = false;
        break;
      }
  }
  out.r_submodule = out.add_subgroup && scalar_closed;

  // ideal => left ideal => subbrace
  if (out.ideal && !out.left_ideal) throw std::logic_error("classification order violated");
  if (out.left_ideal && !out.subbrace) throw std::logic_error("classification order violated");
  return out;
}

SubBrace extract_subbrace(const Brace& b, const std::vector<u64>& subset) {
  SubsetClassification cls = classify_subset(b, subset);
  require(cls.subbrace, "subset is not a subbrace");
  if (b.shape.ring.lambda > 1)
    require(cls.r_submodule, "subset is not an R-submodule");
  const ModuleShape& s = b.shape;
  AddFn add = [&s](u64 x, u64 y) { return index_add(s, x, y); };
  NegFn neg = [&s](u64 x) { return index_neg(s, x); };
  auto scalar = [&s](const RingElement& d, u64 x) {
    return elem_index(s, scalar_mul(s, d, elem_at(s, x)));
  };
  CarrierRebuild cr = rebuild_carrier(s.ring, subset, add, neg, scalar);

  GammaFunction gf;
  gf.registry.shape = cr.shape;
  const u64 m = subset.size();
  gf.assignment.assign(m, 0);
  std::vector<u64> act(m);
  for (u64 xi = 0; xi < m; ++xi) {
    u64 x = cr.to_view[xi];
    for (u64 yi = 0; yi < m; ++yi) act[yi] = cr.from_view.at(gamma_apply(b, x, cr.to_view[yi]));
    gf.assignment[xi] = gf.registry.add_action(act);
  }
  SubBrace out{make_brace(cr.shape, std::move(gf)), cr.to_view, {}};
  for (u64 xi = 0; xi < m; ++xi) out.sub_of[cr.to_view[xi]] = xi;
  return out;
}

QuotientBrace quotient_brace(const Brace& b, const std::vector<u64>& ideal) {
  SubsetClassification cls = classify_subset(b, ideal);
  require(cls.ideal, "subset is not an ideal");
  if (b.shape.ring.lambda > 1) require(cls.r_submodule, "subset is not an R-ideal");

  const ModuleShape& s = b.shape;
  const u64 n = b.size();
  QuotientBrace out;
  out.proj.assign(n, 0);

  // Canonical least-index representative per coset.
  std::vector<u64> rep(n, n);
  std::vector<u64> reps;
  for (u64 x = 0; x < n; ++x) {
    if (rep[x] != n) continue;
    u64 best = x;
    std::vector<u64> coset;
    for (u64 i : ideal) coset.push_back(index_add(s, x, i));
    for (u64 y : coset) best = std::min(best, y);
    for (u64 y : coset) rep[y] = best;
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end());

  AddFn qadd = [&s, &rep](u64 x, u64 y) { return rep[index_add(s, x, y)]; };
  NegFn qneg = [&s, &rep](u64 x) { return rep[index_neg(s, x)]; };
  auto qscalar = [&s, &rep](const RingElement& d, u64 x) {
    return rep[elem_index(s, scalar_mul(s, d, elem_at(s, x)))];
  };
  CarrierRebuild cr = rebuild_carrier(s.ring, reps, qadd, qneg, qscalar);

  GammaFunction gf;
  gf.registry.shape = cr.shape;
  const u64 m = reps.size();
  gf.assignment.assign(m, 0);
  std::vector<u64> act(m);
  for (u64 xi = 0; xi < m; ++xi) {
    u64 x = cr.to_view[xi];
    for (u64 yi = 0; yi < m; ++yi)
      act[yi] = cr.from_view.at(rep[gamma_apply(b, x, cr.to_view[yi])]);
    gf.assignment[xi] = gf.registry.add_action(act);
  }
  out.brace = make_brace(cr.shape, std::move(gf));
  out.lift.assign(m, 0);
  for (u64 xi = 0; xi < m; ++xi) out.lift[xi] = cr.to_view[xi];
  for (u64 x = 0; x < n; ++x) out.proj[x] = cr.from_view.at(rep[x]);
  return out;
}

std::optional<std::vector<u64>> find_isomorphism(const Brace& a, const Brace& b, IsoMode mode) {
  if (a.size() != b.size()) return std::nullopt;
  if (additive_stats(a) != additive_stats(b)) return std::nullopt;
  if (circle_stats(a) != circle_stats(b)) return std::nullopt;

  const ModuleShape& s1 = a.shape;
  const ModuleShape& s2 = b.shape;
  const u64 n = a.size();

  // Base additive (or D-linear) isomorphism from matching decompositions.
  std::vector<u64> f0(n);
  if (s1 == s2) {
    std::iota(f0.begin(), f0.end(), 0);
  } else {
    std::vector<u64> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (mode == IsoMode::RBrace) {
      if (!(s1.ring == s2.ring)) return std::nullopt;
      DModuleDecomposition d1 = dmodule_decompose(shape_view(s1), all);
      DModuleDecomposition d2 = dmodule_decompose(shape_view(s2), all);
      if (d1.exponents != d2.exponents) return std::nullopt;
      for (u64 x = 0; x < n; ++x) {
        const std::vector<RingElement>& coords = d1.coords.at(x);
        ModuleElement acc = elem_zero(s2);
        for (size_t j = 0; j < coords.size(); ++j)
          acc = elem_add(s2, acc,
                         scalar_mul(s2, coords[j], elem_at(s2, d2.generators[j])));
        f0[x] = elem_index(s2, acc);
      }
    } else {
      AbGroup g1{shape_ab_orders(s1)}, g2{shape_ab_orders(s2)};
      CyclicDecomposition d1 = decompose_abelian(
          all, [&g1](u64 x, u64 y) { return g1.add(x, y); }, [&g1](u64 x) { return g1.neg(x); });
      CyclicDecomposition d2 = decompose_abelian(
          all, [&g2](u64 x, u64 y) { return g2.add(x, y); }, [&g2](u64 x) { return g2.neg(x); });
      if (d1.factors != d2.factors) return std::nullopt;
      for (u64 x = 0; x < n; ++x) {
        const std::vector<i64>& coords = d1.coords.at(x);
        u64 acc = 0;
        for (size_t j = 0; j < coords.size(); ++j)
          acc = g2.add(acc, g2.scalar(coords[j], d2.generators[j]));
        f0[x] = acc;
      }
    }
  }

  AutomorphismList auts =
      enumerate_automorphisms(s1, mode == IsoMode::RBrace ? Linearity::D : Linearity::Z);
  std::vector<u64> f(n);
  for (const std::vector<u64>& alpha : auts.actions) {
    for (u64 x = 0; x < n; ++x) f[x] = f0[alpha[x]];
    bool ok = true;
    for (u64 x = 0; x < n && ok; ++x)
      for (u64 y = 0; y < n; ++y)
        if (f[a.circle[x][y]] != b.circle[f[x]][f[y]]) {
          ok = false;
          break;
        }
    if (ok) return f;
  }
  return std::nullopt;
}

bool two_sided_check(const Brace& b) {
  const u64 n = b.size();
  const ModuleShape& s = b.shape;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 xy = index_add(s, x, y);
      for (u64 z = 0; z < n; ++z) {
        u64 lhs = b.circle[xy][z];
        u64 rhs = index_add(s, index_add(s, b.circle[x][z], index_neg(s, z)), b.circle[y][z]);
        if (lhs != rhs) return false;
      }
    }
  return true;
}

NilpotentRing brace_to_radical_ring(const Brace& b) {
  require(two_sided_check(b), "brace is not two-sided");
  const ModuleShape& s = b.shape;
  std::vector<i64> orders = shape_ab_orders(s);
  std::vector<u64> gens = flat_generators(s);
  const size_t ng = gens.size();
  AbGroup g{orders};

  NilpotentRing ring;
  ring.additive_orders = orders;
  ring.mult_table.assign(ng, std::vector<RingCoord>(ng));
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < ng; ++j) ring.mult_table[i][j] = g.at(star(b, gens[i], gens[j]));

  NilpotentRingReport rep = validate_nilpotent_ring(ring);
  if (!rep.valid || !rep.nilpotent)
    throw std::logic_error("two-sided brace star product failed nilpotent-ring validation");

  // The structure constants must reproduce star exactly.
  const u64 n = b.size();
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y)
      if (nilpotent_mul_index(ring, x, y) != star(b, x, y))
        throw std::logic_error("star product is not bilinear over the generators");
  return ring;
}

bool gamma_commutes_with(const Brace& b, const std::vector<std::vector<u64>>& scalar_tables,
                         std::string* detail) {
  const u64 n = b.size();
  for (const auto& sigma : scalar_tables) {
    require(sigma.size() == n, "scalar table has wrong size");
    for (u64 x = 0; x < n; ++x) {
      const std::vector<u64>& ax = b.gamma.registry.actions[b.gamma.assignment[x]];
      for (u64 y = 0; y < n; ++y)
        if (ax[sigma[y]] != sigma[ax[y]]) {
          if (detail)
            *detail = "gamma_" + std::to_string(x) + " does not commute at y=" + std::to_string(y);
          return false;
        }
    }
  }
  return true;
}

std::vector<std::vector<u64>> action_generator_tables(const Brace& b, const RingAction& action) {
  require(action.module_orders == shape_ab_orders(b.shape),
          "action module does not match the brace carrier");
  AbGroup m = action.module();
  const size_t nr = action.ring.additive_orders.size();
  const u64 n = b.size();
  std::vector<std::vector<u64>> tables;
  for (size_t i = 0; i < nr; ++i) {
    RingCoord r(nr, 0);
    r[i] = 1;
    std::vector<u64> t(n);
    for (u64 x = 0; x < n; ++x) t[x] = m.index(act(action, r, m.at(x)));
    tables.push_back(std::move(t));
  }
  return tables;
}

PeirceBraceReport peirce_split_brace(const Brace& b, const RingAction& action) {
  require(action.module_orders == shape_ab_orders(b.shape),
          "action module does not match the brace carrier");
  PeirceBraceReport rep;
  std::vector<RingCoord> idem = primitive_orthogonal_idempotents(action.ring);
  AbGroup m = action.module();
  const u64 n = b.size();

  std::vector<std::vector<u64>> proj;  // e_j projection on indices
  for (const RingCoord& e : idem) {
    PeirceBraceSummand sum;
    sum.idempotent = e;
    std::set<u64> elems;
    std::vector<u64> table(n);
    for (u64 x = 0; x < n; ++x) {
      table[x] = m.index(act(action, e, m.at(x)));
      elems.insert(table[x]);
    }
    proj.push_back(std::move(table));
    sum.elements.assign(elems.begin(), elems.end());
    SubsetClassification cls = classify_subset(b, sum.elements);
    sum.is_left_ideal = cls.left_ideal;
    sum.is_ideal = cls.ideal;
    if (!cls.left_ideal)
      throw std::logic_error("Peirce summand of a module brace must be a left ideal");
    rep.summands.push_back(std::move(sum));
  }

  rep.all_ideals = std::all_of(rep.summands.begin(), rep.summands.end(),
                               [](const PeirceBraceSummand& s) { return s.is_ideal; });

  // The splitting conditions, each checked on all pairs.
  const ModuleShape& s = b.shape;
  rep.componentwise_circle = true;
  rep.gamma_splits = true;
  rep.star_splits = true;
  for (u64 x = 0; x < n; ++x)
    for (u64 y = 0; y < n; ++y) {
      u64 gamma_sum = 0, star_sum = 0;
      bool comp_circle = true;
      for (size_t j = 0; j < idem.size(); ++j) {
        u64 xj = proj[j][x], yj = proj[j][y];
        gamma_sum = index_add(s, gamma_sum, gamma_apply(b, xj, yj));
        star_sum = index_add(s, star_sum, star(b, xj, yj));
        if (proj[j][b.circle[x][y]] != b.circle[xj][yj]) comp_circle = false;
      }
      if (gamma_apply(b, x, y) != gamma_sum) rep.gamma_splits = false;
      if (star(b, x, y) != star_sum) rep.star_splits = false;
      if (!comp_circle) rep.componentwise_circle = false;
    }

  if (rep.all_ideals)
    for (const PeirceBraceSummand& sum : rep.summands)
      rep.product_decomposition.push_back(extract_subbrace(b, sum.elements));
  return rep;
}

}  // namespace bracelab
