#include "bracelab/finite_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

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

void check_coord(const FiniteCommRing& A, const RingCoord& x) {
  require(x.size() == A.additive_orders.size(), "coordinate shape mismatch");
}

}  // namespace

u64 ring_size(const FiniteCommRing& A) { return A.group().size(); }

RingCoord coord_zero(const FiniteCommRing& A) {
  return RingCoord(A.additive_orders.size(), 0);
}

RingCoord coord_at(const FiniteCommRing& A, u64 idx) { return A.group().at(idx); }

u64 coord_index(const FiniteCommRing& A, const RingCoord& x) {
  check_coord(A, x);
  return A.group().index(x);
}

bool coord_is_zero(const FiniteCommRing& A, const RingCoord& x) {
  for (size_t i = 0; i < x.size(); ++i)
    if (mod(x[i], A.additive_orders[i]) != 0) return false;
  return true;
}

RingCoord coord_add(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y) {
  check_coord(A, x);
  check_coord(A, y);
  RingCoord out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = mod(x[i] + y[i], A.additive_orders[i]);
  return out;
}

RingCoord coord_neg(const FiniteCommRing& A, const RingCoord& x) {
  check_coord(A, x);
  RingCoord out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = mod(-x[i], A.additive_orders[i]);
  return out;
}

RingCoord coord_sub(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y) {
  return coord_add(A, x, coord_neg(A, y));
}

RingCoord coord_int_mul(const FiniteCommRing& A, i64 k, const RingCoord& x) {
  check_coord(A, x);
  RingCoord out(x.size());
  for (size_t i = 0; i < x.size(); ++i)
    out[i] = mod(mod(k, A.additive_orders[i]) * x[i], A.additive_orders[i]);
  return out;
}

RingCoord coord_mul(const FiniteCommRing& A, const RingCoord& x, const RingCoord& y) {
  check_coord(A, x);
  check_coord(A, y);
  RingCoord acc = coord_zero(A);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) {
      if (y[j] == 0) continue;
      acc = coord_add(A, acc, coord_int_mul(A, x[i] * y[j], A.mult_table[i][j]));
    }
  }
  return acc;
}

i64 coord_order(const FiniteCommRing& A, const RingCoord& x) {
  return A.group().order_of(coord_index(A, x));
}

bool coord_is_unit(const FiniteCommRing& A, const RingCoord& x) {
  const u64 n = ring_size(A);
  for (u64 i = 0; i < n; ++i)
    if (coord_mul(A, x, coord_at(A, i)) == A.unity) return true;
  return false;
}

RingCoord coord_inverse(const FiniteCommRing& A, const RingCoord& x) {
  const u64 n = ring_size(A);
  for (u64 i = 0; i < n; ++i) {
    RingCoord y = coord_at(A, i);
    if (coord_mul(A, x, y) == A.unity) return y;
  }
  throw std::invalid_argument("coord_inverse of a non-unit");
}

std::vector<bool> unit_mask(const FiniteCommRing& A) {
  const u64 n = ring_size(A);
  std::vector<bool> mask(n, false);
  for (u64 i = 0; i < n; ++i) {
    if (mask[i]) continue;
    RingCoord x = coord_at(A, i);
    for (u64 j = i; j < n; ++j) {
      if (coord_mul(A, x, coord_at(A, j)) == A.unity) {
        mask[i] = true;
        mask[j] = true;
        break;
      }
    }
  }
  return mask;
}

FiniteCommRing cyclic_integer_ring(i64 m) {
  require(m >= 2, "modulus must be >= 2");
  FiniteCommRing A;
  A.additive_orders = {m};
  A.mult_table = {{RingCoord{1}}};
  A.unity = {1};
  return A;
}

FiniteCommRing quotient_polynomial_ring(i64 q, const std::vector<i64>& monic_modulus) {
  require(q >= 2, "coefficient modulus must be >= 2");
  require(monic_modulus.size() >= 2 && monic_modulus.back() == 1, "modulus must be monic");
  const int n = static_cast<int>(monic_modulus.size()) - 1;
  FiniteCommRing A;
  A.additive_orders.assign(n, q);
  A.unity.assign(n, 0);
  A.unity[0] = 1;
  A.mult_table.assign(n, std::vector<RingCoord>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // t^(i+j) reduced by the modulus
      std::vector<i64> poly(i + j + 1, 0);
      poly[i + j] = 1;
      while (poly.size() > static_cast<size_t>(n)) {
        i64 lead = mod(poly.back(), q);
        size_t shift = poly.size() - 1 - n;
        if (lead != 0)
          for (int k = 0; k <= n; ++k)
            poly[shift + k] = mod(poly[shift + k] - lead * monic_modulus[k], q);
        poly.pop_back();
      }
      poly.resize(n, 0);
      for (auto& x : poly) x = mod(x, q);
      A.mult_table[i][j] = poly;
    }
  return A;
}

FiniteCommRing product_ring(const FiniteCommRing& A, const FiniteCommRing& B) {
  FiniteCommRing P;
  const size_t na = A.additive_orders.size(), nb = B.additive_orders.size();
  P.additive_orders = A.additive_orders;
  P.additive_orders.insert(P.additive_orders.end(), B.additive_orders.begin(),
                           B.additive_orders.end());
  P.unity = A.unity;
  P.unity.insert(P.unity.end(), B.unity.begin(), B.unity.end());
  P.mult_table.assign(na + nb, std::vector<RingCoord>(na + nb, RingCoord(na + nb, 0)));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j)
      for (size_t k = 0; k < na; ++k) P.mult_table[i][j][k] = A.mult_table[i][j][k];
  for (size_t i = 0; i < nb; ++i)
    for (size_t j = 0; j < nb; ++j)
      for (size_t k = 0; k < nb; ++k) P.mult_table[na + i][na + j][na + k] = B.mult_table[i][j][k];
  return P;
}

FiniteCommRing galois_ring_as_comm_ring(const GaloisRingSpec& spec) {
  FiniteCommRing A;
  const i64 q = spec.coeff_modulus();
  A.additive_orders.assign(spec.lambda, q);
  RingElement one = ring_one(spec);
  A.unity = one.coeffs;
  A.mult_table.assign(spec.lambda, std::vector<RingCoord>(spec.lambda));
  for (int i = 0; i < spec.lambda; ++i)
    for (int j = 0; j < spec.lambda; ++j) {
      RingElement a = ring_zero(spec), b = ring_zero(spec);
      a.coeffs[i] = 1;
      b.coeffs[j] = 1;
      A.mult_table[i][j] = ring_mul(spec, a, b).coeffs;
    }
  return A;
}

RingValidationReport validate_ring(const FiniteCommRing& A) {
  RingValidationReport rep;
  auto fail = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  const size_t n = A.additive_orders.size();
  if (A.unity.size() != n) {
    fail("unity has wrong shape");
    return rep;
  }
  if (A.mult_table.size() != n) {
    fail("mult table has wrong shape");
    return rep;
  }
  for (size_t i = 0; i < n; ++i) {
    if (A.additive_orders[i] < 1) fail("additive order < 1 at generator " + std::to_string(i));
    if (A.mult_table[i].size() != n) {
      fail("mult table row has wrong shape");
      return rep;
    }
  }
  // Bilinearity well-defined: d_i (g_i g_j) = 0.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (A.mult_table[i][j].size() != n) {
        fail("mult table entry has wrong shape");
        return rep;
      }
      if (!coord_is_zero(A, coord_int_mul(A, A.additive_orders[i], A.mult_table[i][j])))
        fail("bilinearity violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (!coord_is_zero(A, coord_int_mul(A, A.additive_orders[j], A.mult_table[i][j])))
        fail("bilinearity violated at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  if (!rep.valid) return rep;
  // Commutativity and associativity on generators extend bilinearly.
  auto gen = [&](size_t i) {
    RingCoord g(n, 0);
    g[i] = 1;
    return g;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (coord_mul(A, gen(i), gen(j)) != coord_mul(A, gen(j), gen(i)))
        fail("not commutative at (" + std::to_string(i) + "," + std::to_string(j) + ")");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        RingCoord lhs = coord_mul(A, coord_mul(A, gen(i), gen(j)), gen(k));
        RingCoord rhs = coord_mul(A, gen(i), coord_mul(A, gen(j), gen(k)));
        if (lhs != rhs)
          fail("not associative at (" + std::to_string(i) + "," + std::to_string(j) + "," +
               std::to_string(k) + ")");
      }
  for (size_t i = 0; i < n; ++i)
    if (coord_mul(A, A.unity, gen(i)) != gen(i))
      fail("unity fails on generator " + std::to_string(i));
  return rep;
}

std::vector<RingCoord> primitive_orthogonal_idempotents(const FiniteCommRing& A, u64 bound) {
  const u64 n = ring_size(A);
  require(n <= bound, "ring too large for idempotent scan");
  std::vector<RingCoord> idem;
  for (u64 i = 0; i < n; ++i) {
    RingCoord e = coord_at(A, i);
    if (coord_mul(A, e, e) == e) idem.push_back(e);
  }
  std::vector<RingCoord> prim;
  for (const RingCoord& e : idem) {
    if (coord_is_zero(A, e)) continue;
    bool primitive = true;
    for (const RingCoord& f : idem) {
      if (coord_is_zero(A, f) || f == e) continue;
      if (coord_mul(A, e, f) == f) {
        primitive = false;
        break;
      }
    }
    if (primitive) prim.push_back(e);
  }
  // Completeness: pairwise orthogonal, summing to 1.
  RingCoord sum = coord_zero(A);
  for (size_t a = 0; a < prim.size(); ++a) {
    sum = coord_add(A, sum, prim[a]);
    for (size_t b = 0; b < prim.size(); ++b)
      if (a != b && !coord_is_zero(A, coord_mul(A, prim[a], prim[b])))
        throw std::logic_error("primitive idempotents not orthogonal");
  }
  if (sum != A.unity) throw std::logic_error("primitive idempotents do not sum to 1");
  return prim;
}

LocalityReport is_local(const FiniteCommRing& A, u64 bound) {
  const u64 n = ring_size(A);
  require(n <= bound, "ring too large for locality scan");
  LocalityReport rep;
  std::vector<bool> units = unit_mask(A);
  std::vector<u64> nonunits;
  for (u64 i = 0; i < n; ++i)
    if (!units[i]) nonunits.push_back(i);
  AbGroup g = A.group();
  for (u64 a : nonunits)
    for (u64 b : nonunits)
      if (units[g.add(a, b)]) return rep;  // not closed: not local
  rep.local = true;
  rep.maximal_ideal = nonunits;
  u64 q = n / nonunits.size();
  i64 p = 0;
  for (i64 d = 2; d <= static_cast<i64>(q); ++d)
    if (static_cast<i64>(q) % d == 0) {
      p = d;
      break;
    }
  int lam = 0;
  u64 t = q;
  while (t > 1) {
    if (t % static_cast<u64>(p) != 0) throw std::logic_error("residue size not a prime power");
    t /= static_cast<u64>(p);
    ++lam;
  }
  rep.p = p;
  rep.lambda = lam;
  return rep;
}

RingCoord act(const RingAction& a, const RingCoord& r, const RingCoord& x) {
  require(r.size() == a.ring.additive_orders.size(), "action: ring coordinate mismatch");
  require(x.size() == a.module_orders.size(), "action: module coordinate mismatch");
  AbGroup m = a.module();
  std::vector<i64> acc(a.module_orders.size(), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    for (size_t j = 0; j < x.size(); ++j) {
      if (x[j] == 0) continue;
      const RingCoord& t = a.table[i][j];
      for (size_t k = 0; k < acc.size(); ++k)
        acc[k] = mod(acc[k] + mod(r[i] * x[j], a.module_orders[k]) * t[k], a.module_orders[k]);
    }
  }
  return acc;
}

u64 act_index(const RingAction& a, const RingCoord& r, u64 x_idx) {
  return a.module().index(act(a, r, a.module().at(x_idx)));
}

RingValidationReport validate_action(const RingAction& a) {
  RingValidationReport rep = validate_ring(a.ring);
  auto fail = [&rep](const std::string& msg) {
    rep.valid = false;
    rep.violations.push_back(msg);
  };
  const size_t nr = a.ring.additive_orders.size();
  const size_t nm = a.module_orders.size();
  if (a.table.size() != nr) {
    fail("action table has wrong shape");
    return rep;
  }
  for (size_t i = 0; i < nr; ++i) {
    if (a.table[i].size() != nm) {
      fail("action table row has wrong shape");
      return rep;
    }
    for (size_t j = 0; j < nm; ++j) {
      if (a.table[i][j].size() != nm) {
        fail("action table entry has wrong shape");
        return rep;
      }
      AbGroup m = a.module();
      if (m.index(m.at(m.index(a.table[i][j]))) != m.index(a.table[i][j]))
        fail("action entry out of range");
      // Well-definedness on both sides.
      RingCoord scaled = a.table[i][j];
      for (size_t k = 0; k < nm; ++k)
        scaled[k] = mod(scaled[k] * a.ring.additive_orders[i], a.module_orders[k]);
      if (!std::all_of(scaled.begin(), scaled.end(), [](i64 v) { return v == 0; }))
        fail("action not well-defined in the ring argument");
      scaled = a.table[i][j];
      for (size_t k = 0; k < nm; ++k)
        scaled[k] = mod(scaled[k] * a.module_orders[j], a.module_orders[k]);
      if (!std::all_of(scaled.begin(), scaled.end(), [](i64 v) { return v == 0; }))
        fail("action not well-defined in the module argument");
    }
  }
  if (!rep.valid) return rep;
  auto mgen = [&](size_t j) {
    RingCoord g(nm, 0);
    g[j] = 1;
    return g;
  };
  auto rgen = [&](size_t i) {
    RingCoord g(nr, 0);
    g[i] = 1;
    return g;
  };
  for (size_t j = 0; j < nm; ++j)
    if (act(a, a.ring.unity, mgen(j)) != mgen(j))
      fail("unity does not act as identity on module generator " + std::to_string(j));
  for (size_t i = 0; i < nr; ++i)
    for (size_t k = 0; k < nr; ++k)
      for (size_t j = 0; j < nm; ++j) {
        RingCoord lhs = act(a, coord_mul(a.ring, rgen(i), rgen(k)), mgen(j));
        RingCoord rhs = act(a, rgen(i), act(a, rgen(k), mgen(j)));
        if (lhs != rhs)
          fail("action not associative at (" + std::to_string(i) + "," + std::to_string(k) + "," +
               std::to_string(j) + ")");
      }
  return rep;
}

RingAction regular_action(const FiniteCommRing& A) {
  RingAction a;
  a.ring = A;
  a.module_orders = A.additive_orders;
  a.table = A.mult_table;
  return a;
}

AnnihilatorQuotient quotient_by_annihilator(const RingAction& a) {
  AbGroup rg = a.ring.group();
  AbGroup mg = a.module();
  const u64 nr = rg.size();
  const size_t nm = a.module_orders.size();
  auto mgen = [&](size_t j) {
    RingCoord g(nm, 0);
    g[j] = 1;
    return g;
  };

  std::vector<u64> ann;
  for (u64 i = 0; i < nr; ++i) {
    RingCoord r = rg.at(i);
    bool kills = true;
    for (size_t j = 0; j < nm && kills; ++j)
      if (!std::all_of(act(a, r, mgen(j)).begin(), act(a, r, mgen(j)).end(),
                       [](i64 v) { return v == 0; }))
        kills = false;
    if (kills) ann.push_back(i);
  }

  // Cosets of Ann in (R,+), canonical representative = least index.
  std::vector<u64> rep(nr);
  std::vector<bool> done(nr, false);
  std::vector<u64> qelems;
  for (u64 i = 0; i < nr; ++i) {
    if (done[i]) continue;
    u64 best = i;
    std::vector<u64> coset;
    for (u64 s : ann) {
      u64 y = rg.add(i, s);
      coset.push_back(y);
      best = std::min(best, y);
    }
    for (u64 y : coset) {
      rep[y] = best;
      done[y] = true;
    }
    qelems.push_back(best);
  }
  std::sort(qelems.begin(), qelems.end());

  AddFn qadd = [&](u64 x, u64 y) { return rep[rg.add(x, y)]; };
  NegFn qneg = [&](u64 x) { return rep[rg.neg(x)]; };
  CyclicDecomposition dec = decompose_abelian(qelems, qadd, qneg);

  AnnihilatorQuotient out;
  out.annihilator = ann;
  FiniteCommRing& Q = out.quotient;
  Q.additive_orders = dec.factors;
  const size_t nq = dec.factors.size();
  Q.mult_table.assign(nq, std::vector<RingCoord>(nq));
  for (size_t i = 0; i < nq; ++i) {
    out.generator_lifts.push_back(rg.at(dec.generators[i]));
    for (size_t j = 0; j < nq; ++j) {
      u64 prod = coord_index(a.ring, coord_mul(a.ring, rg.at(dec.generators[i]),
                                               rg.at(dec.generators[j])));
      Q.mult_table[i][j] = dec.coords.at(rep[prod]);
    }
  }
  Q.unity = dec.coords.at(rep[coord_index(a.ring, a.ring.unity)]);

  RingAction& qa = out.action;
  qa.ring = Q;
  qa.module_orders = a.module_orders;
  qa.table.assign(nq, std::vector<RingCoord>(nm));
  for (size_t i = 0; i < nq; ++i)
    for (size_t j = 0; j < nm; ++j) qa.table[i][j] = act(a, rg.at(dec.generators[i]), mgen(j));

  // Faithfulness.
  AbGroup qg = Q.group();
  for (u64 i = 1; i < qg.size(); ++i) {
    RingCoord r = qg.at(i);
    bool kills = true;
    for (size_t j = 0; j < nm && kills; ++j)
      if (!std::all_of(act(qa, r, mgen(j)).begin(), act(qa, r, mgen(j)).end(),
                       [](i64 v) { return v == 0; }))
        kills = false;
    if (kills) throw std::logic_error("annihilator quotient is not faithful");
  }
  return out;
}

std::vector<PeirceSummand> peirce_module_split(const RingAction& a) {
  std::vector<RingCoord> idem = primitive_orthogonal_idempotents(a.ring);
  AbGroup rg = a.ring.group();
  AbGroup mg = a.module();
  const u64 nm = mg.size();
  const u64 nr = rg.size();

  std::vector<PeirceSummand> out;
  for (const RingCoord& e : idem) {
    PeirceSummand s;
    s.idempotent = e;

    // A_i = e A as a ring with unity e.
    std::set<u64> ring_elems_set;
    for (u64 i = 0; i < nr; ++i)
      ring_elems_set.insert(coord_index(a.ring, coord_mul(a.ring, e, rg.at(i))));
    std::vector<u64> relems(ring_elems_set.begin(), ring_elems_set.end());
    AddFn radd = [&](u64 x, u64 y) { return rg.add(x, y); };
    NegFn rneg = [&](u64 x) { return rg.neg(x); };
    CyclicDecomposition rdec = decompose_abelian(relems, radd, rneg);
    FiniteCommRing& Ai = s.summand_ring;
    Ai.additive_orders = rdec.factors;
    const size_t nq = rdec.factors.size();
    Ai.mult_table.assign(nq, std::vector<RingCoord>(nq));
    for (size_t i = 0; i < nq; ++i) {
      s.ring_generator_reps.push_back(rg.at(rdec.generators[i]));
      for (size_t j = 0; j < nq; ++j) {
        u64 prod = coord_index(a.ring, coord_mul(a.ring, rg.at(rdec.generators[i]),
                                                 rg.at(rdec.generators[j])));
        Ai.mult_table[i][j] = rdec.coords.at(prod);
      }
    }
    Ai.unity = rdec.coords.at(coord_index(a.ring, e));

    // N_i = e N.
    std::set<u64> mod_set;
    for (u64 x = 0; x < nm; ++x) mod_set.insert(act_index(a, e, x));
    s.module_elements.assign(mod_set.begin(), mod_set.end());
    AddFn madd = [&](u64 x, u64 y) { return mg.add(x, y); };
    NegFn mneg = [&](u64 x) { return mg.neg(x); };
    CyclicDecomposition mdec = decompose_abelian(s.module_elements, madd, mneg);

    RingAction& ia = s.induced_action;
    ia.ring = Ai;
    ia.module_orders = mdec.factors;
    ia.table.assign(nq, std::vector<RingCoord>(mdec.factors.size()));
    for (size_t i = 0; i < nq; ++i)
      for (size_t j = 0; j < mdec.factors.size(); ++j) {
        u64 y = act_index(a, rg.at(rdec.generators[i]), mdec.generators[j]);
        ia.table[i][j] = mdec.coords.at(y);
      }
    for (u64 g : mdec.generators) s.module_generator_reps.push_back(g);
    out.push_back(std::move(s));
  }

  // Direct sum: unique recomposition and annihilation across summands.
  u64 prod_sizes = 1;
  for (const auto& s : out) prod_sizes *= s.module_elements.size();
  if (prod_sizes != nm) throw std::logic_error("Peirce split sizes do not multiply up");
  for (u64 x = 0; x < nm; ++x) {
    u64 acc = mg.index(std::vector<i64>(a.module_orders.size(), 0));
    for (const auto& s : out) acc = mg.add(acc, act_index(a, s.idempotent, x));
    if (acc != x) throw std::logic_error("Peirce split does not recompose");
  }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) {
      if (i == j) continue;
      for (u64 rj = 0; rj < nr; ++rj) {
        RingCoord aj = coord_mul(a.ring, out[j].idempotent, rg.at(rj));
        for (u64 x : out[i].module_elements)
          if (act_index(a, aj, x) != 0)
            throw std::logic_error("cross-summand action does not annihilate");
      }
    }
  return out;
}

PadicStructure padic_structure(const RingAction& a) {
  PadicStructure out;
  std::vector<PeirceSummand> split = peirce_module_split(a);
  bool all_prime_equal = true;
  i64 common_p = 0;
  int lam_gcd = 0;
  for (PeirceSummand& s : split) {
    PadicSummand ps;
    LocalityReport loc = is_local(s.summand_ring);
    if (!loc.local) throw std::logic_error("Peirce summand ring is not local");
    ps.p = loc.p;
    ps.lambda = loc.lambda;
    i64 char_i = coord_order(s.summand_ring, s.summand_ring.unity);
    int cexp = 0;
    i64 t = char_i;
    while (t > 1) {
      if (t % loc.p != 0) throw std::logic_error("summand characteristic not a p-power");
      t /= loc.p;
      ++cexp;
    }
    ps.cexp = cexp;
    ps.galois = construct_galois_ring(loc.p, loc.lambda, cexp);
    ps.embedding = embed_into_local_ring(ps.galois, s.summand_ring);

    // N_i as a module over GR(p, cexp, lambda) through the embedding.
    AbGroup ig = s.induced_action.module();
    const RingAction& ia = s.induced_action;
    const GaloisRingSpec gspec = ps.galois;
    const RingEmbedding& emb = ps.embedding;
    DModuleView view;
    view.ring = gspec;
    view.add = [ig](u64 x, u64 y) { return ig.add(x, y); };
    view.neg = [ig](u64 x) { return ig.neg(x); };
    view.scalar = [gspec, emb, ia, ig](const RingElement& d, u64 x) {
      return ig.index(act(ia, emb.image[elem_index(gspec, d)], ig.at(x)));
    };
    std::vector<u64> elems(ig.size());
    for (u64 i = 0; i < ig.size(); ++i) elems[i] = i;
    DModuleDecomposition dec = dmodule_decompose(view, elems);
    ps.module_exponents = dec.exponents;

    if (common_p == 0) common_p = loc.p;
    if (loc.p != common_p) all_prime_equal = false;
    lam_gcd = lam_gcd == 0 ? loc.lambda : std::gcd(lam_gcd, loc.lambda);

    ps.peirce = std::move(s);
    out.summands.push_back(std::move(ps));
  }
  out.common_prime = all_prime_equal && common_p != 0;
  if (out.common_prime) {
    out.p = common_p;
    out.lambda_gcd = lam_gcd;
  }
  return out;
}

}  // namespace bracelab
