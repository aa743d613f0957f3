#include "extring.hpp"

#include <functional>
#include <stdexcept>

namespace drinfilt {

namespace {

using Poly = std::vector<long long>;

/// Trial division over F_p by all monic polynomials of degree 1..deg/2.
bool irreducible_mod_p(long long p, const Poly& f) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int dd = 1; 2 * dd <= deg; ++dd) {
    std::vector<long long> coeffs(static_cast<size_t>(dd), 0);
    std::function<bool(int)> trial = [&](int pos) -> bool {
      if (pos == dd) {
        Poly div(coeffs.begin(), coeffs.end());
        div.push_back(1);  // monic
        // long division of f by div over F_p
        Poly rem = f;
        for (int i = deg; i >= dd; --i) {
          long long c = rem[static_cast<size_t>(i)] % p;
          if (c == 0) continue;
          for (int j = 0; j <= dd; ++j) {
            size_t idx = static_cast<size_t>(i - dd + j);
            rem[idx] = ((rem[idx] - c * div[static_cast<size_t>(j)]) % p + p) % p;
          }
        }
        for (int i = 0; i < dd; ++i)
          if (rem[static_cast<size_t>(i)] % p != 0) return false;
        return true;  // divides
      }
      for (long long c = 0; c < p; ++c) {
        coeffs[static_cast<size_t>(pos)] = c;
        if (trial(pos + 1)) return true;
      }
      return false;
    };
    if (trial(0)) return false;
  }
  return true;
}

}  // namespace

ExtensionRing::ExtensionRing(const ZModRing& base_, std::vector<long long> f)
    : base(base_), modulus_poly(std::move(f)) {
  deg = static_cast<int>(modulus_poly.size()) - 1;
  if (deg < 1) throw std::invalid_argument("modulus polynomial must be nonconstant");
  if (base.norm(modulus_poly.back()) != 1)
    throw std::invalid_argument("modulus polynomial must be monic");
  Poly fp(modulus_poly.size());
  for (size_t i = 0; i < fp.size(); ++i) fp[i] = ((modulus_poly[i] % base.p) + base.p) % base.p;
  if (!irreducible_mod_p(base.p, fp))
    throw std::invalid_argument("modulus polynomial reducible mod p");
}

ExtensionRing ExtensionRing::unramified_quadratic(const ZModRing& base) {
  if (base.p == 2) return ExtensionRing(base, {1, 1, 1});
  if (base.p == 3) return ExtensionRing(base, {1, 0, 1});
  for (long long a = 0; a < base.p; ++a)
    for (long long b = 0; b < base.p; ++b) {
      Poly f{a, b, 1};
      Poly fp{a % base.p, b % base.p, 1};
      if (irreducible_mod_p(base.p, fp)) return ExtensionRing(base, f);
    }
  throw std::logic_error("no irreducible quadratic found");
}

ExtensionRing::Elem ExtensionRing::one() const { return scalar(1); }

ExtensionRing::Elem ExtensionRing::scalar(long long c) const {
  Elem e = zero();
  e[0] = base.norm(c);
  return e;
}

ExtensionRing::Elem ExtensionRing::generator() const {
  Elem e = zero();
  if (deg == 1) {  // t acts as the root of a linear modulus
    e[0] = base.norm(-modulus_poly[0]);
  } else {
    e[1] = 1;
  }
  return e;
}

ExtensionRing::Elem ExtensionRing::add(const Elem& a, const Elem& b) const {
  Elem r = zero();
  for (int i = 0; i < deg; ++i)
    r[static_cast<size_t>(i)] = base.norm(a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]);
  return r;
}

ExtensionRing::Elem ExtensionRing::sub(const Elem& a, const Elem& b) const {
  Elem r = zero();
  for (int i = 0; i < deg; ++i)
    r[static_cast<size_t>(i)] = base.norm(a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]);
  return r;
}

ExtensionRing::Elem ExtensionRing::mul(const Elem& a, const Elem& b) const {
  std::vector<long long> prod(static_cast<size_t>(2 * deg - 1), 0);
  for (int i = 0; i < deg; ++i)
    for (int j = 0; j < deg; ++j)
      prod[static_cast<size_t>(i + j)] =
          base.norm(prod[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]);
  // reduce by the monic modulus
  for (int i = 2 * deg - 2; i >= deg; --i) {
    long long c = prod[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= deg; ++j) {
      size_t idx = static_cast<size_t>(i - deg + j);
      prod[idx] = base.norm(prod[idx] - c * modulus_poly[static_cast<size_t>(j)]);
    }
  }
  prod.resize(static_cast<size_t>(deg));
  return prod;
}

bool ExtensionRing::is_zero(const Elem& a) const {
  for (long long c : a)
    if (base.norm(c) != 0) return false;
  return true;
}

bool ExtensionRing::is_unit(const Elem& a) const {
  for (long long c : a)
    if (base.norm(c) % base.p != 0) return true;
  return false;
}

bool ExtensionRing::in_base(const Elem& a) const {
  for (int i = 1; i < deg; ++i)
    if (base.norm(a[static_cast<size_t>(i)]) != 0) return false;
  return true;
}

long long ExtensionRing::unit_group_order() const {
  long long q = 1;
  for (int i = 0; i < deg; ++i) q *= base.p;  // residue field size
  long long total = 1;
  for (int i = 0; i < deg * base.n; ++i) total *= base.p;
  return total / q * (q - 1);
}

ExtensionRing::Elem ExtensionRing::inv_unit(const Elem& a) const {
  if (!is_unit(a)) throw std::domain_error("not a unit in the extension ring");
  Elem r = one(), b = a;
  long long e = unit_group_order() - 1;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<ExtensionRing::Elem> ExtensionRing::all_elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  std::function<void(int)> rec = [&](int i) {
    if (i == deg) {
      out.push_back(cur);
      return;
    }
    for (long long c = 0; c < base.modulus; ++c) {
      cur[static_cast<size_t>(i)] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<RingLine> enumerate_ring_lines(const ExtensionRing& ring, int rank) {
  std::vector<ExtensionRing::Elem> elems = ring.all_elements();
  std::vector<ExtensionRing::Elem> nonunits;
  for (const auto& e : elems)
    if (!ring.is_unit(e)) nonunits.push_back(e);

  std::vector<RingLine> out;
  for (int lead = 0; lead < rank; ++lead) {
    // coordinates before `lead` are non-units, coordinate `lead` is 1
    std::vector<ExtensionRing::Elem> v(static_cast<size_t>(rank), ring.zero());
    v[static_cast<size_t>(lead)] = ring.one();
    std::function<void(int)> rec = [&](int pos) {
      if (pos == rank) {
        out.push_back(RingLine{v});
        return;
      }
      if (pos == lead) {
        rec(pos + 1);
        return;
      }
      const auto& pool = pos < lead ? nonunits : elems;
      for (const auto& e : pool) {
        v[static_cast<size_t>(pos)] = e;
        rec(pos + 1);
      }
      v[static_cast<size_t>(pos)] = ring.zero();
    };
    rec(0);
  }
  return out;
}

std::vector<std::vector<long long>> line_components(const ExtensionRing& ring, const RingLine& line) {
  int rank = static_cast<int>(line.generator.size());
  std::vector<std::vector<long long>> comps(static_cast<size_t>(ring.deg),
                                            std::vector<long long>(static_cast<size_t>(rank), 0));
  for (int c = 0; c < rank; ++c)
    for (int k = 0; k < ring.deg; ++k)
      comps[static_cast<size_t>(k)][static_cast<size_t>(c)] =
          ring.base.norm(line.generator[static_cast<size_t>(c)][static_cast<size_t>(k)]);
  return comps;
}

bool tube_contains(const ExtensionRing& ring, const FiniteModule& submodule, const RingLine& line) {
  if (static_cast<int>(line.generator.size()) != submodule.ambient_rank)
    throw std::invalid_argument("line rank mismatch");
  if (submodule.ring.modulus != ring.base.modulus)
    throw std::invalid_argument("ring mismatch");
  // U (x) O is free over U with the power basis, so membership is
  // componentwise membership in U.
  for (const auto& comp : line_components(ring, line))
    if (!submodule.contains(comp)) return false;
  return true;
}

FiniteModule minimal_tube_module(const ExtensionRing& ring, const RingLine& line) {
  return FiniteModule::span(ring.base, static_cast<int>(line.generator.size()),
                            line_components(ring, line));
}

}  // namespace drinfilt
