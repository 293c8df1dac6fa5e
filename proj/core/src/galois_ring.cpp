#include "bracelab/galois_ring.hpp"

#include <numeric>
#include <stdexcept>

#include "bracelab/finite_ring.hpp"

namespace bracelab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

// Polynomials are low-to-high coefficient vectors over Z/m.
using Poly = std::vector<i64>;

Poly poly_mul(const Poly& a, const Poly& b, i64 m) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], m);
  return out;
}

// Remainder of a by the monic divisor g, coefficients mod m.
Poly poly_rem_monic(Poly a, const Poly& g, i64 m) {
  const size_t dg = g.size() - 1;
  while (a.size() > dg) {
    i64 lead = mod(a.back(), m);
    size_t shift = a.size() - 1 - dg;
    if (lead != 0)
      for (size_t i = 0; i <= dg; ++i) a[shift + i] = mod(a[shift + i] - lead * g[i], m);
    a.pop_back();
  }
  for (auto& x : a) x = mod(x, m);
  return a;
}

bool poly_is_zero(const Poly& a, i64 m) {
  for (i64 x : a)
    if (mod(x, m) != 0) return false;
  return true;
}

i64 egcd(i64 a, i64 b, i64& x, i64& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

i64 int_inverse_mod(i64 a, i64 m) {
  i64 x, y;
  i64 g = egcd(mod(a, m), m, x, y);
  require(g == 1, "not invertible mod " + std::to_string(m));
  return mod(x, m);
}

void check_shape(const GaloisRingSpec& spec, const RingElement& a) {
  require(a.coeffs.size() == static_cast<size_t>(spec.lambda), "ring element shape mismatch");
}

}  // namespace

i64 GaloisRingSpec::coeff_modulus() const { return ipow(p, c); }

u64 GaloisRingSpec::size() const {
  u64 q = static_cast<u64>(coeff_modulus());
  u64 s = 1;
  for (int i = 0; i < lambda; ++i) s *= q;
  return s;
}

bool GaloisRingSpec::prime_base() const { return is_prime(p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

bool is_irreducible_mod_p(const std::vector<i64>& monic_poly, i64 p) {
  const size_t d = monic_poly.size() - 1;
  if (d == 0) return false;
  if (d == 1) return true;
  // No monic divisor of degree 1..d/2.
  for (size_t dd = 1; dd <= d / 2; ++dd) {
    i64 count = ipow(p, static_cast<int>(dd));
    for (i64 k = 0; k < count; ++k) {
      Poly g(dd + 1, 0);
      i64 t = k;
      for (size_t i = 0; i < dd; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[dd] = 1;
      if (poly_is_zero(poly_rem_monic(monic_poly, g, p), p)) return false;
    }
  }
  return true;
}

GaloisRingSpec construct_galois_ring(i64 p, int lambda, int c) {
  require(is_prime(p), "p not prime");
  require(lambda >= 1 && c >= 1, "lambda and c must be positive");
  GaloisRingSpec spec;
  spec.p = p;
  spec.lambda = lambda;
  spec.c = c;
  if (lambda == 1) {
    spec.modulus = {0, 1};  // x
    return spec;
  }
  i64 count = ipow(p, lambda);
  for (i64 k = 0; k < count; ++k) {
    Poly g(lambda + 1, 0);
    i64 t = k;
    for (int i = 0; i < lambda; ++i) {
      g[i] = t % p;
      t /= p;
    }
    g[lambda] = 1;
    if (is_irreducible_mod_p(g, p)) {
      spec.modulus = g;
      return spec;
    }
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

GaloisRingSpec cyclic_ring_spec(i64 m) {
  require(m >= 2, "cyclic ring modulus must be >= 2");
  GaloisRingSpec spec;
  spec.p = m;
  spec.lambda = 1;
  spec.c = 1;
  spec.modulus = {0, 1};
  return spec;
}

GaloisRingSpec truncate_spec(const GaloisRingSpec& spec, int new_c) {
  require(new_c >= 1 && new_c <= spec.c, "invalid truncation precision");
  GaloisRingSpec out = spec;
  out.c = new_c;
  i64 q = out.coeff_modulus();
  for (auto& x : out.modulus) x = mod(x, q);
  return out;
}

void validate_spec(const GaloisRingSpec& spec) {
  require(spec.p >= 2 && spec.lambda >= 1 && spec.c >= 1, "bad ring parameters");
  require(spec.modulus.size() == static_cast<size_t>(spec.lambda) + 1, "modulus degree mismatch");
  require(spec.modulus.back() == 1, "modulus not monic");
  i64 q = spec.coeff_modulus();
  for (i64 x : spec.modulus) require(x >= 0 && x < q, "modulus coefficient out of range");
  if (spec.lambda > 1) {
    require(spec.prime_base(), "composite base requires lambda == 1");
    require(is_irreducible_mod_p(spec.modulus, spec.p), "modulus reducible mod p");
  }
}

RingElement ring_zero(const GaloisRingSpec& spec) {
  return RingElement{std::vector<i64>(spec.lambda, 0)};
}

RingElement ring_one(const GaloisRingSpec& spec) { return ring_from_int(spec, 1); }

RingElement ring_xi(const GaloisRingSpec& spec) {
  require(spec.lambda >= 2, "xi needs lambda >= 2");
  RingElement a = ring_zero(spec);
  a.coeffs[1] = 1;
  return a;
}

RingElement ring_from_int(const GaloisRingSpec& spec, i64 n) {
  RingElement a = ring_zero(spec);
  a.coeffs[0] = mod(n, spec.coeff_modulus());
  return a;
}

u64 elem_index(const GaloisRingSpec& spec, const RingElement& a) {
  check_shape(spec, a);
  u64 q = static_cast<u64>(spec.coeff_modulus());
  u64 idx = 0;
  for (int i = spec.lambda - 1; i >= 0; --i) idx = idx * q + static_cast<u64>(a.coeffs[i]);
  return idx;
}

RingElement elem_at(const GaloisRingSpec& spec, u64 index) {
  u64 q = static_cast<u64>(spec.coeff_modulus());
  RingElement a = ring_zero(spec);
  for (int i = 0; i < spec.lambda; ++i) {
    a.coeffs[i] = static_cast<i64>(index % q);
    index /= q;
  }
  return a;
}

RingElement ring_add(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b) {
  check_shape(spec, a);
  check_shape(spec, b);
  i64 q = spec.coeff_modulus();
  RingElement out = a;
  for (int i = 0; i < spec.lambda; ++i) out.coeffs[i] = mod(out.coeffs[i] + b.coeffs[i], q);
  return out;
}

RingElement ring_neg(const GaloisRingSpec& spec, const RingElement& a) {
  check_shape(spec, a);
  i64 q = spec.coeff_modulus();
  RingElement out = a;
  for (auto& x : out.coeffs) x = mod(-x, q);
  return out;
}

RingElement ring_sub(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b) {
  return ring_add(spec, a, ring_neg(spec, b));
}

RingElement ring_mul(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b) {
  check_shape(spec, a);
  check_shape(spec, b);
  i64 q = spec.coeff_modulus();
  Poly prod = poly_mul(a.coeffs, b.coeffs, q);
  Poly rem = poly_rem_monic(prod, spec.modulus, q);
  rem.resize(spec.lambda, 0);
  return RingElement{rem};
}

RingElement int_mul(const GaloisRingSpec& spec, i64 k, const RingElement& a) {
  check_shape(spec, a);
  i64 q = spec.coeff_modulus();
  RingElement out = a;
  for (auto& x : out.coeffs) x = mod(mod(k, q) * x, q);
  return out;
}

RingElement ring_pow(const GaloisRingSpec& spec, RingElement base, u64 e) {
  RingElement acc = ring_one(spec);
  while (e > 0) {
    if (e & 1) acc = ring_mul(spec, acc, base);
    base = ring_mul(spec, base, base);
    e >>= 1;
  }
  return acc;
}

bool is_unit(const GaloisRingSpec& spec, const RingElement& a) {
  check_shape(spec, a);
  if (spec.prime_base()) {
    for (i64 x : a.coeffs)
      if (mod(x, spec.p) != 0) return true;
    return false;
  }
  // composite base, lambda == 1: plain Z/q
  return std::gcd(mod(a.coeffs[0], spec.coeff_modulus()), spec.coeff_modulus()) == 1;
}

RingElement ring_inverse(const GaloisRingSpec& spec, const RingElement& a) {
  require(is_unit(spec, a), "ring_inverse of a non-unit");
  i64 q = spec.coeff_modulus();
  if (!spec.prime_base()) {
    RingElement out = ring_zero(spec);
    out.coeffs[0] = int_inverse_mod(a.coeffs[0], q);
    return out;
  }
  RingElement b = field_inverse(spec, field_reduce(spec, a));
  RingElement one = ring_one(spec);
  RingElement two = ring_from_int(spec, 2);
  for (int iter = 0; iter < 64; ++iter) {
    RingElement t = ring_mul(spec, a, b);
    if (t == one) return b;
    b = ring_mul(spec, b, ring_sub(spec, two, t));
  }
  throw std::logic_error("Newton inversion failed to converge");
}

RingElement field_reduce(const GaloisRingSpec& spec, const RingElement& a) {
  check_shape(spec, a);
  RingElement out = a;
  for (auto& x : out.coeffs) x = mod(x, spec.p);
  return out;
}

bool field_is_zero(const GaloisRingSpec& spec, const RingElement& a) {
  for (i64 x : a.coeffs)
    if (mod(x, spec.p) != 0) return false;
  return true;
}

RingElement field_add(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b) {
  RingElement out = field_reduce(spec, a);
  for (int i = 0; i < spec.lambda; ++i) out.coeffs[i] = mod(out.coeffs[i] + b.coeffs[i], spec.p);
  return out;
}

RingElement field_mul(const GaloisRingSpec& spec, const RingElement& a, const RingElement& b) {
  Poly prod = poly_mul(field_reduce(spec, a).coeffs, field_reduce(spec, b).coeffs, spec.p);
  Poly rem = poly_rem_monic(prod, spec.modulus, spec.p);
  rem.resize(spec.lambda, 0);
  return RingElement{rem};
}

RingElement field_inverse(const GaloisRingSpec& spec, const RingElement& a) {
  require(!field_is_zero(spec, a), "field_inverse of zero");
  // a^(p^lambda - 2) in F_{p^lambda}
  u64 e = static_cast<u64>(ipow(spec.p, spec.lambda)) - 2;
  RingElement acc = ring_from_int(spec, 1);
  RingElement base = field_reduce(spec, a);
  while (e > 0) {
    if (e & 1) acc = field_mul(spec, acc, base);
    base = field_mul(spec, base, base);
    e >>= 1;
  }
  return acc;
}

RingEmbedding embed_into_local_ring(const GaloisRingSpec& spec, const FiniteCommRing& S) {
  require(spec.prime_base(), "embedding requires a prime-base spec");
  LocalityReport loc = is_local(S);
  require(loc.local, "codomain is not local");
  require(loc.p == spec.p, "residue characteristic mismatch");
  require(loc.lambda % spec.lambda == 0, "lambda does not divide the residue degree of S");

  const RingCoord one = S.unity;
  i64 char_s = coord_order(S, one);
  require(char_s == spec.coeff_modulus(), "characteristic mismatch");

  // g with integer coefficients, evaluated through the additive structure of S.
  const std::vector<i64>& g = spec.modulus;
  std::vector<i64> gprime(spec.lambda, 0);
  for (int i = 1; i <= spec.lambda; ++i) gprime[i - 1] = i * g[i];

  auto eval = [&](const std::vector<i64>& poly, const RingCoord& x) {
    // Horner through S arithmetic.
    RingCoord acc = coord_zero(S);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      acc = coord_mul(S, acc, x);
      acc = coord_add(S, acc, coord_int_mul(S, *it, one));
    }
    return acc;
  };

  auto is_unit_in_s = [&](const RingCoord& x) { return coord_is_unit(S, x); };

  // Scan for a starting point: residue of xi is a root of g mod p.
  RingCoord xi;
  bool found = false;
  for (u64 i = 0; i < ring_size(S); ++i) {
    RingCoord cand = coord_at(S, i);
    if (!is_unit_in_s(eval(g, cand)) && is_unit_in_s(eval(gprime, cand))) {
      xi = cand;
      found = true;
      break;
    }
  }
  require(found, "no residue-field generator found in S");

  // Newton: the maximal ideal is nilpotent, so this reaches an exact root.
  for (int iter = 0;; ++iter) {
    RingCoord v = eval(g, xi);
    if (coord_is_zero(S, v)) break;
    if (iter >= 64) throw std::logic_error("Hensel iteration failed to terminate");
    RingCoord u = coord_inverse(S, eval(gprime, xi));
    xi = coord_sub(S, xi, coord_mul(S, v, u));
  }

  RingEmbedding emb;
  emb.domain = spec;
  emb.generator_image = xi;
  emb.image.resize(spec.size());

  // Powers of xi in S.
  std::vector<RingCoord> xi_pow(spec.lambda);
  xi_pow[0] = one;
  for (int i = 1; i < spec.lambda; ++i) xi_pow[i] = coord_mul(S, xi_pow[i - 1], xi);

  for (u64 idx = 0; idx < spec.size(); ++idx) {
    RingElement a = elem_at(spec, idx);
    RingCoord acc = coord_zero(S);
    for (int i = 0; i < spec.lambda; ++i)
      acc = coord_add(S, acc, coord_int_mul(S, a.coeffs[i], xi_pow[i]));
    emb.image[idx] = acc;
  }

  // Post-hoc check on basis products.
  std::vector<RingElement> dom_pow(spec.lambda);
  dom_pow[0] = ring_one(spec);
  for (int i = 1; i < spec.lambda; ++i) dom_pow[i] = ring_mul(spec, dom_pow[i - 1], ring_xi(spec));
  for (int i = 0; i < spec.lambda; ++i)
    for (int j = 0; j < spec.lambda; ++j) {
      RingElement prod = ring_mul(spec, dom_pow[i], dom_pow[j]);
      RingCoord lhs = emb.image[elem_index(spec, prod)];
      RingCoord rhs = coord_mul(S, xi_pow[i], xi_pow[j]);
      if (lhs != rhs) throw std::logic_error("embedding failed basis-product verification");
    }

  return emb;
}

}  // namespace bracelab
