#include "bracelab/module_core.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bracelab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

RingElement reduce_mod(const RingElement& a, i64 m) {
  RingElement out = a;
  for (auto& x : out.coeffs) x = mod(x, m);
  return out;
}

bool divisible_by(const RingElement& a, i64 d) {
  for (i64 x : a.coeffs)
    if (x % d != 0) return false;
  return true;
}

}  // namespace

ModuleShape make_shape(GaloisRingSpec ring, std::vector<int> exponents) {
  validate_spec(ring);
  std::sort(exponents.begin(), exponents.end(), std::greater<int>());
  for (int e : exponents) require(e >= 1 && e <= ring.c, "exponent out of range");
  if (!exponents.empty())
    require(exponents.front() == ring.c, "ring precision must equal the largest exponent");
  return ModuleShape{std::move(ring), std::move(exponents)};
}

u64 shape_size(const ModuleShape& s) {
  u64 total = 1;
  for (int e : s.exponents) {
    u64 comp = 1;
    for (int i = 0; i < s.ring.lambda; ++i) comp *= static_cast<u64>(ipow(s.ring.p, e));
    total *= comp;
  }
  return total;
}

std::vector<i64> shape_ab_orders(const ModuleShape& s) {
  std::vector<i64> orders;
  for (int e : s.exponents)
    for (int i = 0; i < s.ring.lambda; ++i) orders.push_back(ipow(s.ring.p, e));
  return orders;
}

ModuleElement elem_zero(const ModuleShape& s) {
  ModuleElement x;
  x.components.assign(s.exponents.size(), ring_zero(s.ring));
  return x;
}

u64 elem_index(const ModuleShape& s, const ModuleElement& x) {
  require(x.components.size() == s.exponents.size(), "module element shape mismatch");
  u64 idx = 0;
  for (size_t i = s.exponents.size(); i-- > 0;) {
    u64 radix = static_cast<u64>(ipow(s.ring.p, s.exponents[i]));
    const auto& coeffs = x.components[i].coeffs;
    for (size_t k = coeffs.size(); k-- > 0;) idx = idx * radix + static_cast<u64>(coeffs[k]);
  }
  return idx;
}

ModuleElement elem_at(const ModuleShape& s, u64 idx) {
  ModuleElement x = elem_zero(s);
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    u64 radix = static_cast<u64>(ipow(s.ring.p, s.exponents[i]));
    for (int k = 0; k < s.ring.lambda; ++k) {
      x.components[i].coeffs[k] = static_cast<i64>(idx % radix);
      idx /= radix;
    }
  }
  return x;
}

ModuleElement elem_add(const ModuleShape& s, const ModuleElement& x, const ModuleElement& y) {
  ModuleElement out = x;
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    i64 m = ipow(s.ring.p, s.exponents[i]);
    for (int k = 0; k < s.ring.lambda; ++k)
      out.components[i].coeffs[k] = mod(out.components[i].coeffs[k] + y.components[i].coeffs[k], m);
  }
  return out;
}

ModuleElement elem_neg(const ModuleShape& s, const ModuleElement& x) {
  ModuleElement out = x;
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    i64 m = ipow(s.ring.p, s.exponents[i]);
    for (int k = 0; k < s.ring.lambda; ++k)
      out.components[i].coeffs[k] = mod(-out.components[i].coeffs[k], m);
  }
  return out;
}

ModuleElement elem_sub(const ModuleShape& s, const ModuleElement& x, const ModuleElement& y) {
  return elem_add(s, x, elem_neg(s, y));
}

ModuleElement scalar_mul(const ModuleShape& s, const RingElement& d, const ModuleElement& x) {
  ModuleElement out = elem_zero(s);
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    RingElement prod = ring_mul(s.ring, d, x.components[i]);
    out.components[i] = reduce_mod(prod, ipow(s.ring.p, s.exponents[i]));
  }
  return out;
}

ModuleElement int_mul(const ModuleShape& s, i64 k, const ModuleElement& x) {
  ModuleElement out = x;
  for (size_t i = 0; i < s.exponents.size(); ++i) {
    i64 m = ipow(s.ring.p, s.exponents[i]);
    for (int j = 0; j < s.ring.lambda; ++j)
      out.components[i].coeffs[j] = mod(mod(k, m) * out.components[i].coeffs[j], m);
  }
  return out;
}

u64 index_add(const ModuleShape& s, u64 x, u64 y) {
  return elem_index(s, elem_add(s, elem_at(s, x), elem_at(s, y)));
}

u64 index_neg(const ModuleShape& s, u64 x) {
  return elem_index(s, elem_neg(s, elem_at(s, x)));
}

i64 additive_order(const ModuleShape& s, u64 idx) {
  return AbGroup{shape_ab_orders(s)}.order_of(idx);
}

std::vector<u64> omega_subgroup(const ModuleShape& s, int i) {
  require(i >= 0, "omega index must be >= 0");
  i64 pk = 1;
  for (int k = 0; k < i; ++k) pk *= s.ring.p;
  std::vector<u64> out;
  const u64 n = shape_size(s);
  for (u64 x = 0; x < n; ++x)
    if (elem_index(s, int_mul(s, pk, elem_at(s, x))) == 0) out.push_back(x);
  return out;
}

std::vector<u64> times_p_image(const ModuleShape& s) {
  std::set<u64> out;
  const u64 n = shape_size(s);
  for (u64 x = 0; x < n; ++x) out.insert(elem_index(s, int_mul(s, s.ring.p, elem_at(s, x))));
  return std::vector<u64>(out.begin(), out.end());
}

void check_hom(const ModuleShape& s, const ModuleMap& m) {
  const size_t r = s.exponents.size();
  require(m.entries.size() == r * r, "matrix shape mismatch");
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      const RingElement& e = m.entries[i * r + j];
      require(e.coeffs.size() == static_cast<size_t>(s.ring.lambda), "matrix entry shape mismatch");
      i64 mi = ipow(s.ring.p, s.exponents[i]);
      for (i64 x : e.coeffs) require(x >= 0 && x < mi, "matrix entry not reduced");
      int gap = std::max(s.exponents[i] - s.exponents[j], 0);
      if (gap > 0)
        require(divisible_by(e, ipow(s.ring.p, gap)),
                "matrix entry violates the divisibility condition");
    }
}

ModuleMap identity_map(const ModuleShape& s) {
  const size_t r = s.exponents.size();
  ModuleMap m;
  m.entries.assign(r * r, ring_zero(s.ring));
  for (size_t i = 0; i < r; ++i) {
    m.entries[i * r + i] = ring_one(s.ring);
    m.entries[i * r + i] = reduce_mod(m.entries[i * r + i], ipow(s.ring.p, s.exponents[i]));
  }
  return m;
}

ModuleElement apply_map(const ModuleShape& s, const ModuleMap& m, const ModuleElement& x) {
  const size_t r = s.exponents.size();
  ModuleElement out = elem_zero(s);
  for (size_t i = 0; i < r; ++i) {
    RingElement acc = ring_zero(s.ring);
    for (size_t j = 0; j < r; ++j) {
      // Lift the source component to the full ring before multiplying.
      acc = ring_add(s.ring, acc, ring_mul(s.ring, m.entries[i * r + j], x.components[j]));
    }
    out.components[i] = reduce_mod(acc, ipow(s.ring.p, s.exponents[i]));
  }
  return out;
}

std::vector<u64> action_table(const ModuleShape& s, const ModuleMap& m) {
  const u64 n = shape_size(s);
  std::vector<u64> table(n);
  for (u64 x = 0; x < n; ++x) table[x] = elem_index(s, apply_map(s, m, elem_at(s, x)));
  return table;
}

ModuleMap compose_maps(const ModuleShape& s, const ModuleMap& a, const ModuleMap& b) {
  const size_t r = s.exponents.size();
  ModuleMap out;
  out.entries.assign(r * r, ring_zero(s.ring));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      RingElement acc = ring_zero(s.ring);
      for (size_t k = 0; k < r; ++k)
        acc = ring_add(s.ring, acc, ring_mul(s.ring, a.entries[i * r + k], b.entries[k * r + j]));
      out.entries[i * r + j] = reduce_mod(acc, ipow(s.ring.p, s.exponents[i]));
    }
  return out;
}

namespace {

// Determinant-free invertibility of the residue matrix over F_{p^lambda}
// by Gaussian elimination.
bool residue_matrix_invertible(const ModuleShape& s, const ModuleMap& m) {
  const size_t r = s.exponents.size();
  std::vector<RingElement> a;
  a.reserve(r * r);
  for (const RingElement& e : m.entries) a.push_back(field_reduce(s.ring, e));
  for (size_t col = 0; col < r; ++col) {
    size_t pivot = r;
    for (size_t row = col; row < r; ++row)
      if (!field_is_zero(s.ring, a[row * r + col])) {
        pivot = row;
        break;
      }
    if (pivot == r) return false;
    if (pivot != col)
      for (size_t j = 0; j < r; ++j) std::swap(a[pivot * r + j], a[col * r + j]);
    RingElement inv = field_inverse(s.ring, a[col * r + col]);
    for (size_t row = col + 1; row < r; ++row) {
      if (field_is_zero(s.ring, a[row * r + col])) continue;
      RingElement factor = field_mul(s.ring, a[row * r + col], inv);
      for (size_t j = col; j < r; ++j) {
        RingElement sub = field_mul(s.ring, factor, a[col * r + j]);
        // subtraction in the field
        for (int k = 0; k < s.ring.lambda; ++k)
          sub.coeffs[k] = mod(a[row * r + j].coeffs[k] - sub.coeffs[k], s.ring.p);
        a[row * r + j] = sub;
      }
    }
  }
  return true;
}

}  // namespace

bool is_bijective(const ModuleShape& s, const ModuleMap& m) {
  check_hom(s, m);
  if (s.ring.prime_base() && !residue_matrix_invertible(s, m)) return false;
  // Confirm by image size.
  const u64 n = shape_size(s);
  std::vector<bool> hit(n, false);
  u64 count = 0;
  for (u64 x = 0; x < n; ++x) {
    u64 y = elem_index(s, apply_map(s, m, elem_at(s, x)));
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == n;
}

ModuleMap matrix_from_action(const ModuleShape& s, const std::vector<u64>& table) {
  const size_t r = s.exponents.size();
  require(table.size() == shape_size(s), "action table has wrong size");
  ModuleMap m;
  m.entries.assign(r * r, ring_zero(s.ring));
  for (size_t j = 0; j < r; ++j) {
    ModuleElement gen = elem_zero(s);
    gen.components[j].coeffs[0] = 1;
    ModuleElement img = elem_at(s, table[elem_index(s, gen)]);
    for (size_t i = 0; i < r; ++i) m.entries[i * r + j] = img.components[i];
  }
  check_hom(s, m);
  if (action_table(s, m) != table)
    throw std::invalid_argument("table is not the action of a module matrix");
  return m;
}

ModuleShape z_reshape(const ModuleShape& s) {
  if (s.ring.lambda == 1) return s;
  GaloisRingSpec ring;
  ring.p = s.ring.p;
  ring.lambda = 1;
  ring.c = s.ring.c;
  ring.modulus = {0, 1};
  std::vector<int> exps;
  for (int e : s.exponents)
    for (int i = 0; i < s.ring.lambda; ++i) exps.push_back(e);
  return ModuleShape{std::move(ring), std::move(exps)};
}

AutomorphismList enumerate_automorphisms(const ModuleShape& s, Linearity mode,
                                         u64 max_candidates) {
  ModuleShape shape = (mode == Linearity::Z) ? z_reshape(s) : s;
  const size_t r = shape.exponents.size();
  const int lambda = shape.ring.lambda;

  // Choice radix per (entry, coefficient): p^(c_i - gap).
  struct Slot {
    size_t entry;
    int coeff;
    i64 radix;
    i64 step;  // p^gap
  };
  std::vector<Slot> slots;
  u64 total = 1;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      int gap = std::max(shape.exponents[i] - shape.exponents[j], 0);
      i64 step = ipow(shape.ring.p, gap);
      i64 radix = ipow(shape.ring.p, shape.exponents[i] - gap);
      for (int k = 0; k < lambda; ++k) {
        slots.push_back({i * r + j, k, radix, step});
        total *= static_cast<u64>(radix);
        if (total > max_candidates)
          throw std::invalid_argument("automorphism candidate space too large");
      }
    }

  AutomorphismList out;
  out.shape = shape;
  ModuleMap m;
  m.entries.assign(r * r, ring_zero(shape.ring));
  std::vector<i64> choice(slots.size(), 0);
  for (u64 cand = 0; cand < total; ++cand) {
    u64 t = cand;
    for (size_t k = 0; k < slots.size(); ++k) {
      choice[k] = static_cast<i64>(t % static_cast<u64>(slots[k].radix));
      t /= static_cast<u64>(slots[k].radix);
      m.entries[slots[k].entry].coeffs[slots[k].coeff] = choice[k] * slots[k].step;
    }
    if (shape.ring.prime_base() && !residue_matrix_invertible(shape, m)) continue;
    if (!is_bijective(shape, m)) continue;
    out.maps.push_back(m);
    out.actions.push_back(action_table(shape, m));
  }
  return out;
}

RankReport rank_accounting(const ModuleShape& s) {
  RankReport rep;
  rep.rank_d = static_cast<int>(s.exponents.size());
  rep.rank_z = s.ring.lambda * rep.rank_d;
  AbGroup g{shape_ab_orders(s)};
  std::vector<u64> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  CyclicDecomposition dec = decompose_abelian(
      all, [&g](u64 a, u64 b) { return g.add(a, b); }, [&g](u64 a) { return g.neg(a); });
  rep.rank_z_crosscheck = primary_rank(dec.factors);
  return rep;
}

std::map<i64, u64> order_statistics(const std::vector<u64>& elements,
                                    const std::function<u64(u64, u64)>& op) {
  std::set<u64> in_set(elements.begin(), elements.end());
  require(in_set.count(0) == 1, "identity (index 0) must belong to the set");
  std::map<i64, u64> hist;
  for (u64 x : elements) {
    u64 acc = x;
    i64 ord = 1;
    while (acc != 0) {
      require(in_set.count(acc) == 1, "operation leaves the set: not a group");
      acc = op(acc, x);
      ++ord;
      if (ord > static_cast<i64>(elements.size()) + 1)
        throw std::invalid_argument("element order exceeds group size: not a group");
    }
    ++hist[ord];
  }
  return hist;
}

u64 permutation_order(const std::vector<u64>& table) {
  const u64 n = table.size();
  std::vector<bool> seen(n, false);
  u64 order = 1;
  for (u64 i = 0; i < n; ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    u64 j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = table[j];
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

DModuleDecomposition dmodule_decompose(const DModuleView& view, const std::vector<u64>& elements) {
  require(view.ring.prime_base(), "D-module decomposition requires a prime base");
  const GaloisRingSpec& D = view.ring;
  const i64 p = D.p;

  u64 zero =
      elements.empty() ? 0 : view.add(elements[0], view.neg(elements[0]));

  DModuleDecomposition dec;

  std::function<void(const std::vector<u64>&, const std::function<u64(u64)>&)> recurse =
      [&](const std::vector<u64>& elems, const std::function<u64(u64)>& canon) {
        if (elems.size() <= 1) return;
        // Element of maximal p-exponent; orders are measured in the ambient
        // module (the canon map preserves the quotient structure).
        auto qadd = [&](u64 a, u64 b) { return canon(view.add(a, b)); };
        auto qscal = [&](const RingElement& d, u64 x) { return canon(view.scalar(d, x)); };
        auto q_exponent = [&](u64 x) {
          int k = 0;
          u64 acc = x;
          RingElement pscal = ring_from_int(D, p);
          while (acc != canon(zero)) {
            acc = qscal(pscal, acc);
            ++k;
            if (k > 64) throw std::logic_error("p-exponent diverged");
          }
          return k;
        };

        u64 g = elems[0];
        int kmax = -1;
        for (u64 x : elems) {
          int k = q_exponent(x);
          if (k > kmax) {
            kmax = k;
            g = x;
          }
        }
        dec.generators.push_back(g);
        dec.exponents.push_back(kmax);

        // Cyclic submodule D g in the current quotient.
        std::set<u64> cyc;
        for (u64 d = 0; d < D.size(); ++d) cyc.insert(qscal(elem_at(D, d), g));

        // Cosets with canonical (least) representatives.
        std::unordered_map<u64, u64> rep;
        for (u64 x : elems) {
          if (rep.count(x)) continue;
          u64 best = x;
          std::vector<u64> coset;
          for (u64 c : cyc) {
            u64 y = qadd(x, c);
            coset.push_back(y);
            best = std::min(best, y);
          }
          for (u64 y : coset) rep[y] = best;
        }
        std::vector<u64> qelems;
        for (auto& [x, rx] : rep)
          if (x == rx) qelems.push_back(x);
        std::sort(qelems.begin(), qelems.end());

        std::function<u64(u64)> canon2 = [&rep, canon](u64 x) { return rep.at(canon(x)); };

        size_t before = dec.generators.size();
        recurse(qelems, canon2);

        // Lift: each generator q coming back from the quotient has
        // p^k q in D g here; subtracting the matching d g restores the
        // exact order. The correcting scalar is found by scanning D.
        for (size_t t = before; t < dec.generators.size(); ++t) {
          u64 q = dec.generators[t];
          int k = dec.exponents[t];
          RingElement pke = ring_from_int(D, ipow(p, k));
          u64 target = qscal(pke, q);
          bool lifted = false;
          for (u64 d = 0; d < D.size(); ++d) {
            RingElement de = elem_at(D, d);
            if (qscal(pke, qscal(de, g)) == target) {
              u64 adjusted = qadd(q, canon(view.neg(view.scalar(de, g))));
              if (q_exponent(adjusted) == k) {
                dec.generators[t] = adjusted;
                lifted = true;
                break;
              }
            }
          }
          if (!lifted) throw std::logic_error("D-module lift failed");
        }
      };

  std::function<u64(u64)> identity_canon = [](u64 x) { return x; };
  recurse(elements, identity_canon);

  // Verify: unique recomposition over canonical scalar tuples.
  u64 expected = 1;
  for (int e : dec.exponents) {
    u64 comp = 1;
    for (int i = 0; i < D.lambda; ++i) comp *= static_cast<u64>(ipow(p, e));
    expected *= comp;
  }
  if (expected != elements.size()) throw std::logic_error("D-decomposition size mismatch");

  // Enumerate scalar tuples d_j with coefficients < p^{e_j}.
  std::vector<std::vector<RingElement>> scalars(dec.exponents.size());
  for (size_t j = 0; j < dec.exponents.size(); ++j) {
    i64 m = ipow(p, dec.exponents[j]);
    u64 count = 1;
    for (int i = 0; i < D.lambda; ++i) count *= static_cast<u64>(m);
    for (u64 t = 0; t < count; ++t) {
      RingElement d = ring_zero(D);
      u64 rest = t;
      for (int i = 0; i < D.lambda; ++i) {
        d.coeffs[i] = static_cast<i64>(rest % static_cast<u64>(m));
        rest /= static_cast<u64>(m);
      }
      scalars[j].push_back(d);
    }
  }
  for (u64 combo = 0; combo < expected; ++combo) {
    u64 rest = combo;
    u64 x = zero;
    std::vector<RingElement> tuple;
    for (size_t j = 0; j < dec.exponents.size(); ++j) {
      size_t cj = static_cast<size_t>(rest % scalars[j].size());
      rest /= scalars[j].size();
      tuple.push_back(scalars[j][cj]);
      x = view.add(x, view.scalar(scalars[j][cj], dec.generators[j]));
    }
    if (!dec.coords.emplace(x, std::move(tuple)).second)
      throw std::logic_error("D-decomposition tuples collide");
  }

  // Canonical ordering: exponents non-increasing.
  for (size_t i = 1; i < dec.exponents.size(); ++i)
    if (dec.exponents[i] > dec.exponents[i - 1])
      throw std::logic_error("D-decomposition exponents out of order");
  return dec;
}

DModuleView shape_view(const ModuleShape& s) {
  DModuleView v;
  v.ring = s.ring;
  v.add = [s](u64 a, u64 b) { return index_add(s, a, b); };
  v.neg = [s](u64 a) { return index_neg(s, a); };
  v.scalar = [s](const RingElement& d, u64 x) {
    return elem_index(s, scalar_mul(s, d, elem_at(s, x)));
  };
  return v;
}

ModuleShape shape_from_factors(const std::vector<i64>& factors) {
  if (factors.empty()) {
    ModuleShape s;
    s.ring = cyclic_ring_spec(2);
    return s;  // trivial module
  }
  i64 p = 0;
  bool prime_power = true;
  std::vector<int> exps;
  for (i64 f : factors) {
    i64 q = 0;
    for (i64 d = 2; d * d <= f; ++d)
      if (f % d == 0) {
        q = d;
        break;
      }
    if (q == 0) q = f;  // f prime
    i64 t = f;
    int e = 0;
    while (t % q == 0) {
      t /= q;
      ++e;
    }
    if (t != 1) {
      prime_power = false;
      break;
    }
    if (p == 0) p = q;
    if (q != p) {
      prime_power = false;
      break;
    }
    exps.push_back(e);
  }
  if (prime_power) {
    GaloisRingSpec ring = construct_galois_ring(p, 1, *std::max_element(exps.begin(), exps.end()));
    return make_shape(ring, exps);
  }
  bool all_equal = std::all_of(factors.begin(), factors.end(),
                               [&factors](i64 f) { return f == factors.front(); });
  if (all_equal) {
    GaloisRingSpec ring = cyclic_ring_spec(factors.front());
    return make_shape(ring, std::vector<int>(factors.size(), 1));
  }
  throw std::invalid_argument("carrier group is not representable over a single base");
}

CarrierRebuild rebuild_carrier(const GaloisRingSpec& ring, const std::vector<u64>& elems,
                               const AddFn& add, const NegFn& neg,
                               const std::function<u64(const RingElement&, u64)>& scalar) {
  CarrierRebuild out;
  if (elems.size() == 1) {
    out.shape.ring = ring;
    out.to_view = {elems[0]};
    out.from_view[elems[0]] = 0;
    return out;
  }
  if (ring.prime_base()) {
    DModuleView view{ring, add, neg, scalar};
    DModuleDecomposition dec = dmodule_decompose(view, elems);
    GaloisRingSpec r2 = truncate_spec(ring, dec.exponents.front());
    out.shape = make_shape(r2, dec.exponents);
    out.to_view.assign(elems.size(), 0);
    for (u64 v : elems) {
      const std::vector<RingElement>& coords = dec.coords.at(v);
      ModuleElement e = elem_zero(out.shape);
      for (size_t j = 0; j < coords.size(); ++j) e.components[j] = coords[j];
      u64 idx = elem_index(out.shape, e);
      out.to_view[idx] = v;
      out.from_view[v] = idx;
    }
    return out;
  }
  CyclicDecomposition dec = decompose_abelian(elems, add, neg);
  out.shape = shape_from_factors(dec.factors);
  out.to_view.assign(elems.size(), 0);
  for (u64 v : elems) {
    const std::vector<i64>& coords = dec.coords.at(v);
    ModuleElement e = elem_zero(out.shape);
    for (size_t j = 0; j < coords.size(); ++j) e.components[j].coeffs[0] = coords[j];
    u64 idx = elem_index(out.shape, e);
    out.to_view[idx] = v;
    out.from_view[v] = idx;
  }
  return out;
}

}  // namespace bracelab
