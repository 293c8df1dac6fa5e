#include "bracelab/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bracelab {

namespace {

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

u64 AbGroup::size() const {
  u64 s = 1;
  for (i64 d : orders) s *= static_cast<u64>(d);
  return s;
}

u64 AbGroup::index(const std::vector<i64>& coord) const {
  u64 idx = 0;
  for (size_t i = orders.size(); i-- > 0;)
    idx = idx * static_cast<u64>(orders[i]) + static_cast<u64>(mod(coord[i], orders[i]));
  return idx;
}

std::vector<i64> AbGroup::at(u64 idx) const {
  std::vector<i64> coord(orders.size());
  for (size_t i = 0; i < orders.size(); ++i) {
    coord[i] = static_cast<i64>(idx % static_cast<u64>(orders[i]));
    idx /= static_cast<u64>(orders[i]);
  }
  return coord;
}

u64 AbGroup::add(u64 a, u64 b) const {
  std::vector<i64> ca = at(a), cb = at(b);
  for (size_t i = 0; i < orders.size(); ++i) ca[i] = mod(ca[i] + cb[i], orders[i]);
  return index(ca);
}

u64 AbGroup::neg(u64 a) const {
  std::vector<i64> ca = at(a);
  for (size_t i = 0; i < orders.size(); ++i) ca[i] = mod(-ca[i], orders[i]);
  return index(ca);
}

u64 AbGroup::scalar(i64 k, u64 a) const {
  std::vector<i64> ca = at(a);
  for (size_t i = 0; i < orders.size(); ++i) ca[i] = mod(k % orders[i] * ca[i], orders[i]);
  return index(ca);
}

i64 AbGroup::order_of(u64 a) const {
  std::vector<i64> ca = at(a);
  i64 ord = 1;
  for (size_t i = 0; i < orders.size(); ++i) {
    i64 d = orders[i] / std::gcd(ca[i], orders[i]);
    ord = std::lcm(ord, d);
  }
  return ord;
}

std::vector<u64> subgroup_closure(const std::vector<u64>& generators, const AddFn& add,
                                  const NegFn& neg) {
  std::set<u64> seen;
  std::vector<u64> work;
  u64 zero = generators.empty() ? 0 : add(generators[0], neg(generators[0]));
  seen.insert(zero);
  work.push_back(zero);
  for (u64 g : generators)
    if (seen.insert(g).second) work.push_back(g);
  for (size_t k = 0; k < work.size(); ++k) {
    u64 x = work[k];
    for (u64 g : generators) {
      u64 y = add(x, g);
      if (seen.insert(y).second) work.push_back(y);
      u64 z = add(x, neg(g));
      if (seen.insert(z).second) work.push_back(z);
    }
  }
  return std::vector<u64>(seen.begin(), seen.end());
}

namespace {

i64 element_order(u64 x, const AddFn& add, u64 zero) {
  i64 ord = 1;
  u64 acc = x;
  while (acc != zero) {
    acc = add(acc, x);
    ++ord;
    if (ord > (1 << 26)) throw std::logic_error("element order diverged");
  }
  return ord;
}

// Recursive greedy: split off a maximal-order cyclic, recurse on the
// quotient, lift quotient generators with the order-preserving adjustment.
void decompose_rec(const std::vector<u64>& elements, const AddFn& add, const NegFn& neg,
                   std::vector<u64>& gens, std::vector<i64>& factors) {
  if (elements.size() <= 1) return;
  u64 zero = add(elements[0], neg(elements[0]));

  u64 g = zero;
  i64 m = 1;
  for (u64 x : elements) {
    i64 o = element_order(x, add, zero);
    if (o > m) {
      m = o;
      g = x;
    }
  }
  gens.push_back(g);
  factors.push_back(m);

  // Cosets of <g>: canonical representative = least index in the coset.
  std::vector<u64> cyc;
  u64 acc = zero;
  for (i64 i = 0; i < m; ++i) {
    cyc.push_back(acc);
    acc = add(acc, g);
  }
  std::unordered_map<u64, u64> rep;
  for (u64 x : elements) {
    if (rep.count(x)) continue;
    u64 best = x;
    std::vector<u64> coset;
    for (u64 c : cyc) {
      u64 y = add(x, c);
      coset.push_back(y);
      best = std::min(best, y);
    }
    for (u64 y : coset) rep[y] = best;
  }
  std::vector<u64> qelems;
  for (auto& [x, r] : rep)
    if (x == r) qelems.push_back(x);
  std::sort(qelems.begin(), qelems.end());

  AddFn qadd = [&rep, &add](u64 a, u64 b) { return rep.at(add(a, b)); };
  NegFn qneg = [&rep, &neg](u64 a) { return rep.at(neg(a)); };

  std::vector<u64> qgens;
  std::vector<i64> qfactors;
  decompose_rec(qelems, qadd, qneg, qgens, qfactors);

  // Lift: for a quotient generator q of order k, k*q lands in <g>; subtract
  // the matching multiple of g so the lift has exact order k.
  for (size_t j = 0; j < qgens.size(); ++j) {
    u64 q = qgens[j];
    i64 k = qfactors[j];
    u64 kq = zero;
    for (i64 i = 0; i < k; ++i) kq = add(kq, q);
    i64 cmul = -1;
    u64 t = zero;
    for (i64 i = 0; i < m; ++i) {
      if (t == kq) {
        cmul = i;
        break;
      }
      t = add(t, g);
    }
    if (cmul < 0 || cmul % k != 0) throw std::logic_error("decomposition lift failed");
    u64 adjust = zero;
    for (i64 i = 0; i < cmul / k; ++i) adjust = add(adjust, g);
    u64 lifted = add(q, neg(adjust));
    if (element_order(lifted, add, zero) != k) throw std::logic_error("lift order mismatch");
    gens.push_back(lifted);
    factors.push_back(k);
  }
}

}  // namespace

CyclicDecomposition decompose_abelian(const std::vector<u64>& elements, const AddFn& add,
                                      const NegFn& neg) {
  CyclicDecomposition dec;
  decompose_rec(elements, add, neg, dec.generators, dec.factors);

  // Tabulate all coordinate tuples; uniqueness proves the direct sum.
  u64 expected = 1;
  for (i64 f : dec.factors) expected *= static_cast<u64>(f);
  if (expected != elements.size()) throw std::logic_error("decomposition size mismatch");

  u64 zero = elements.empty() ? 0 : add(elements[0], neg(elements[0]));
  std::vector<i64> tuple(dec.factors.size(), 0);
  for (u64 combo = 0; combo < expected; ++combo) {
    u64 rest = combo;
    u64 x = zero;
    for (size_t j = 0; j < dec.factors.size(); ++j) {
      tuple[j] = static_cast<i64>(rest % static_cast<u64>(dec.factors[j]));
      rest /= static_cast<u64>(dec.factors[j]);
      u64 term = zero;
      for (i64 i = 0; i < tuple[j]; ++i) term = add(term, dec.generators[j]);
      x = add(x, term);
    }
    if (!dec.coords.emplace(x, tuple).second)
      throw std::logic_error("decomposition tuples collide");
  }
  return dec;
}

int primary_rank(const std::vector<i64>& invariant_factors) {
  int rank = 0;
  for (i64 f : invariant_factors) {
    i64 n = f;
    for (i64 d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        ++rank;
        while (n % d == 0) n /= d;
      }
    if (n > 1) ++rank;
  }
  return rank;
}

std::optional<std::vector<u64>> find_abelian_isomorphism(const std::vector<u64>& elements,
                                                         const AddFn& add1, const NegFn& neg1,
                                                         const AddFn& add2, const NegFn& neg2) {
  CyclicDecomposition d1 = decompose_abelian(elements, add1, neg1);
  CyclicDecomposition d2 = decompose_abelian(elements, add2, neg2);
  if (d1.factors != d2.factors) return std::nullopt;

  u64 zero2 = elements.empty() ? 0 : add2(elements[0], neg2(elements[0]));
  std::unordered_map<u64, u64> image;
  for (u64 x : elements) {
    const std::vector<i64>& coords = d1.coords.at(x);
    u64 acc = zero2;
    for (size_t j = 0; j < coords.size(); ++j)
      for (i64 i = 0; i < coords[j]; ++i) acc = add2(acc, d2.generators[j]);
    image[x] = acc;
  }
  // Verify: bijective homomorphism.
  std::set<u64> hit;
  for (u64 x : elements) hit.insert(image[x]);
  if (hit.size() != elements.size()) throw std::logic_error("isomorphism candidate not bijective");
  for (u64 x : elements)
    for (u64 y : elements)
      if (image[add1(x, y)] != add2(image[x], image[y]))
        throw std::logic_error("isomorphism candidate not a homomorphism");

  std::vector<u64> f;
  f.reserve(elements.size());
  for (u64 x : elements) f.push_back(image[x]);
  return f;
}

std::vector<std::vector<u64>> enumerate_subgroups(const std::vector<u64>& elements,
                                                  const AddFn& add, const NegFn& neg, u64 limit) {
  if (elements.size() > limit) throw std::invalid_argument("group too large for subgroup scan");
  std::set<std::vector<u64>> found;
  u64 zero = elements.empty() ? 0 : add(elements[0], neg(elements[0]));
  std::vector<std::vector<u64>> work;
  work.push_back({zero});
  found.insert(work.back());
  for (size_t k = 0; k < work.size(); ++k) {
    std::vector<u64> h = work[k];
    for (u64 x : elements) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<u64> gens = h;
      gens.push_back(x);
      std::vector<u64> h2 = subgroup_closure(gens, add, neg);
      if (found.insert(h2).second) work.push_back(h2);
    }
  }
  return std::vector<std::vector<u64>>(found.begin(), found.end());
}

}  // namespace bracelab
