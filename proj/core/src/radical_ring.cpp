#include "bracelab/radical_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bracelab/brace_core.hpp"
#include "bracelab/module_core.hpp"

namespace bracelab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

RingCoord nilpotent_mul(const NilpotentRing& n, const RingCoord& x, const RingCoord& y) {
  const size_t ng = n.additive_orders.size();
  RingCoord acc(ng, 0);
  for (size_t i = 0; i < ng; ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < ng; ++j) {
      if (y[j] == 0) continue;
      const RingCoord& t = n.mult_table[i][j];
      for (size_t k = 0; k < ng; ++k)
        acc[k] = mod(acc[k] + mod(x[i] * y[j], n.additive_orders[k]) * t[k],
                     n.additive_orders[k]);
    }
  }
  return acc;
}

u64 nilpotent_mul_index(const NilpotentRing& n, u64 x, u64 y) {
  AbGroup g = n.group();
  return g.index(nilpotent_mul(n, g.at(x), g.at(y)));
}

u64 adjoint_circle(const NilpotentRing& n, u64 x, u64 y) {
  AbGroup g = n.group();
  return g.add(g.add(x, y), nilpotent_mul_index(n, x, y));
}

u64 quasi_inverse(const NilpotentRing& n, u64 x) {
  AbGroup g = n.group();
  u64 acc = g.neg(x);
  u64 power = x;
  i64 sign = 1;  // next term is +x^2
  for (int k = 2; k <= 128; ++k) {
    power = nilpotent_mul_index(n, power, x);
    if (power == 0) {
      u64 check = adjoint_circle(n, x, acc);
      if (check != 0) throw std::logic_error("quasi-inverse failed");
      return acc;
    }
    acc = g.add(acc, sign > 0 ? power : g.neg(power));
    sign = -sign;
  }
  throw std::invalid_argument("quasi-inverse did not terminate: ring not nilpotent");
}

NilpotentRingReport validate_nilpotent_ring(const NilpotentRing& n) {
  NilpotentRingReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  const size_t ng = n.additive_orders.size();
  if (n.mult_table.size() != ng) {
    fail("mult table has wrong shape");
    return rep;
  }
  for (size_t i = 0; i < ng; ++i) {
    if (n.mult_table[i].size() != ng) {
      fail("mult table row has wrong shape");
      return rep;
    }
    for (size_t j = 0; j < ng; ++j)
      if (n.mult_table[i][j].size() != ng) {
        fail("mult table entry has wrong shape");
        return rep;
      }
  }
  AbGroup g = n.group();
  auto gen = [&](size_t i) {
    RingCoord c(ng, 0);
    c[i] = 1;
    return c;
  };
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < ng; ++j) {
      RingCoord scaled(ng);
      for (size_t k = 0; k < ng; ++k)
        scaled[k] = mod(n.mult_table[i][j][k] * n.additive_orders[i], n.additive_orders[k]);
      if (!std::all_of(scaled.begin(), scaled.end(), [](i64 v) { return v == 0; }))
        fail("bilinearity ill-defined in the left argument at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
      for (size_t k = 0; k < ng; ++k)
        scaled[k] = mod(n.mult_table[i][j][k] * n.additive_orders[j], n.additive_orders[k]);
      if (!std::all_of(scaled.begin(), scaled.end(), [](i64 v) { return v == 0; }))
        fail("bilinearity ill-defined in the right argument at (" + std::to_string(i) + "," +
             std::to_string(j) + ")");
    }
  if (!rep.valid) return rep;
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < ng; ++j)
      for (size_t k = 0; k < ng; ++k) {
        RingCoord lhs = nilpotent_mul(n, nilpotent_mul(n, gen(i), gen(j)), gen(k));
        RingCoord rhs = nilpotent_mul(n, gen(i), nilpotent_mul(n, gen(j), gen(k)));
        if (lhs != rhs)
          fail("not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")");
      }
  if (!rep.valid) return rep;

  rep.commutative = true;
  for (size_t i = 0; i < ng && rep.commutative; ++i)
    for (size_t j = 0; j < ng; ++j)
      if (n.mult_table[i][j] != n.mult_table[j][i]) {
        rep.commutative = false;
        break;
      }

  // Nilpotency by iterated product spans: S_1 = N, S_{k+1} = <S_k . N>.
  const u64 size = g.size();
  std::vector<u64> all(size);
  std::iota(all.begin(), all.end(), 0);
  AddFn add = [&g](u64 a, u64 b) { return g.add(a, b); };
  NegFn neg = [&g](u64 a) { return g.neg(a); };
  std::vector<u64> span = all;
  int index = 1;
  while (span.size() > 1) {
    std::set<u64> products;
    for (u64 x : span)
      for (u64 y : all) products.insert(nilpotent_mul_index(n, x, y));
    std::vector<u64> next =
        subgroup_closure(std::vector<u64>(products.begin(), products.end()), add, neg);
    ++index;
    if (next == span) {
      rep.nilpotent = false;
      rep.index = 0;
      return rep;
    }
    span = next;
    if (index > 64) {
      rep.nilpotent = false;
      rep.index = 0;
      return rep;
    }
  }
  rep.nilpotent = true;
  rep.index = index;
  return rep;
}

SubringExtract subring_from_elements(const FiniteCommRing& R, const std::vector<u64>& elems) {
  AbGroup g = R.group();
  std::vector<bool> mask(g.size(), false);
  for (u64 x : elems) mask[x] = true;
  for (u64 x : elems) {
    for (u64 y : elems) {
      require(mask[g.add(x, y)], "element set not additively closed");
      require(mask[coord_index(R, coord_mul(R, coord_at(R, x), coord_at(R, y)))],
              "element set not multiplicatively closed");
    }
  }
  AddFn add = [&g](u64 a, u64 b) { return g.add(a, b); };
  NegFn neg = [&g](u64 a) { return g.neg(a); };
  CyclicDecomposition dec = decompose_abelian(elems, add, neg);

  SubringExtract out;
  out.ring.additive_orders = dec.factors;
  const size_t ng = dec.factors.size();
  out.ring.mult_table.assign(ng, std::vector<RingCoord>(ng));
  for (size_t i = 0; i < ng; ++i)
    for (size_t j = 0; j < ng; ++j) {
      u64 prod = coord_index(
          R, coord_mul(R, coord_at(R, dec.generators[i]), coord_at(R, dec.generators[j])));
      std::vector<i64> coords = dec.coords.at(prod);
      out.ring.mult_table[i][j] = coords;
    }

  AbGroup sg = out.ring.group();
  out.to_parent.assign(elems.size(), 0);
  for (u64 v : elems) {
    u64 idx = sg.index(dec.coords.at(v));
    out.to_parent[idx] = v;
    out.from_parent[v] = idx;
  }
  return out;
}

RadicalBrace brace_from_radical_ring(const NilpotentRing& n) {
  NilpotentRingReport rep = validate_nilpotent_ring(n);
  require(rep.valid, "structure constants do not define a ring");
  require(rep.nilpotent, "adjoint operation of a non-nilpotent ring is not a group");

  AbGroup g = n.group();
  const u64 size = g.size();
  std::vector<u64> all(size);
  std::iota(all.begin(), all.end(), 0);
  AddFn add = [&g](u64 a, u64 b) { return g.add(a, b); };
  NegFn neg = [&g](u64 a) { return g.neg(a); };
  CyclicDecomposition dec = decompose_abelian(all, add, neg);
  ModuleShape shape = shape_from_factors(dec.factors);

  RadicalBrace out;
  out.to_ring.assign(size, 0);
  out.from_ring.assign(size, 0);
  for (u64 v = 0; v < size; ++v) {
    const std::vector<i64>& coords = dec.coords.at(v);
    ModuleElement e = elem_zero(shape);
    for (size_t j = 0; j < coords.size(); ++j) e.components[j].coeffs[0] = coords[j];
    u64 idx = elem_index(shape, e);
    out.to_ring[idx] = v;
    out.from_ring[v] = idx;
  }

  GammaFunction gf;
  gf.registry.shape = shape;
  gf.assignment.assign(size, 0);
  std::vector<u64> act(size);
  for (u64 xi = 0; xi < size; ++xi) {
    u64 x = out.to_ring[xi];
    for (u64 yi = 0; yi < size; ++yi) {
      u64 y = out.to_ring[yi];
      act[yi] = out.from_ring[g.add(y, nilpotent_mul_index(n, x, y))];
    }
    gf.assignment[xi] = gf.registry.add_action(act);
  }
  out.brace = make_brace(shape, std::move(gf));
  return out;
}

CorollaryRadringReport corollary_radring_check(
    const NilpotentRing& n, const GaloisRingSpec& D,
    const std::function<u64(const RingElement&, u64)>& scalar) {
  NilpotentRingReport vrep = validate_nilpotent_ring(n);
  require(vrep.valid && vrep.nilpotent, "input is not a nilpotent ring");
  require(vrep.commutative, "the corollary requires a commutative ring");
  require(D.prime_base(), "the corollary requires a prime-base coefficient ring");

  AbGroup g = n.group();
  const u64 size = g.size();
  u64 t = size;
  while (t > 1) {
    require(t % static_cast<u64>(D.p) == 0, "ring order is not a power of p");
    t /= static_cast<u64>(D.p);
  }

  CorollaryRadringReport rep;
  rep.p = D.p;

  std::vector<u64> all(size);
  std::iota(all.begin(), all.end(), 0);
  AddFn add = [&g](u64 a, u64 b) { return g.add(a, b); };
  NegFn neg = [&g](u64 a) { return g.neg(a); };

  DModuleView view{D, add, neg, scalar};
  DModuleDecomposition ddec = dmodule_decompose(view, all);
  rep.rank_d = static_cast<int>(ddec.exponents.size());
  CyclicDecomposition zdec = decompose_abelian(all, add, neg);
  rep.rank_z = primary_rank(zdec.factors);
  rep.hypothesis = rep.rank_d < rep.p - 1;

  rep.additive_stats = order_statistics(all, add);
  rep.adjoint_stats =
      order_statistics(all, [&n](u64 x, u64 y) { return adjoint_circle(n, x, y); });
  rep.stats_equal = rep.additive_stats == rep.adjoint_stats;
  rep.adjoint_abelian = vrep.commutative;

  if (rep.adjoint_abelian && rep.stats_equal) {
    auto iso = find_abelian_isomorphism(
        all, add, neg, [&n](u64 x, u64 y) { return adjoint_circle(n, x, y); },
        [&n](u64 x) { return quasi_inverse(n, x); });
    rep.isomorphism_found = iso.has_value();
  }
  return rep;
}

}  // namespace bracelab
