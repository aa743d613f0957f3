#include "character.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drinfilt {

namespace {

long long dot(const std::vector<long long>& c, const Weight& w) {
  long long s = 0;
  for (size_t i = 0; i < c.size(); ++i) s += c[i] * w.entries[i];
  return s;
}

constexpr long long kNoBound = (1LL << 62);

}  // namespace

Region Region::pole_bound(long long cap) {
  Region r;
  r.pole_caps.push_back(cap);
  return r;
}

Region Region::band(std::vector<long long> coeffs, long long lo, long long hi) {
  Region r;
  r.bands.push_back({std::move(coeffs), lo, hi});
  return r;
}

Region Region::upper_band(std::vector<long long> coeffs, long long hi) {
  return band(std::move(coeffs), -kNoBound, hi);
}

bool Region::contains(const Weight& w) const {
  for (const auto& b : bands) {
    long long v = dot(b.coeffs, w);
    if (v < b.lo || v > b.hi) return false;
  }
  for (long long cap : pole_caps)
    if (w.pole_order() > cap) return false;
  return true;
}

Region Region::intersect(const Region& other) const {
  Region r = *this;
  r.bands.insert(r.bands.end(), other.bands.begin(), other.bands.end());
  r.pole_caps.insert(r.pole_caps.end(), other.pole_caps.begin(), other.pole_caps.end());
  return r;
}

Region Region::permuted(const Perm& z) const {
  Region r = *this;
  for (auto& b : r.bands) {
    std::vector<long long> c(b.coeffs.size());
    // (coeffs' . z(w)) = coeffs . w  requires  coeffs'_{z(i)} = coeffs_i
    for (size_t i = 0; i < c.size(); ++i) c[static_cast<size_t>(z(static_cast<int>(i)))] = b.coeffs[i];
    b.coeffs = std::move(c);
  }
  return r;
}

Region Region::shifted_by_support(const std::vector<Weight>& shifts) const {
  if (shifts.empty()) return *this;
  Region r;
  for (const auto& b : bands) {
    long long maxdot = dot(b.coeffs, shifts[0]);
    long long mindot = maxdot;
    for (const auto& v : shifts) {
      long long x = dot(b.coeffs, v);
      maxdot = std::max(maxdot, x);
      mindot = std::min(mindot, x);
    }
    long long lo = b.lo >= -kNoBound / 2 ? b.lo + maxdot : b.lo;
    long long hi = b.hi <= kNoBound / 2 ? b.hi + mindot : b.hi;
    r.bands.push_back({b.coeffs, lo, hi});
  }
  for (long long cap : pole_caps) {
    long long worst = 0;
    for (const auto& v : shifts) {
      long long pos = 0;
      for (long long e : v.entries)
        if (e > 0) pos += e;
      worst = std::max(worst, pos);
    }
    r.pole_caps.push_back(cap - worst);
  }
  return r;
}

Character Character::single(const Weight& w, long long mult) {
  Character c(w.length());
  if (mult != 0) c.terms[w] = mult;
  return c;
}

long long Character::multiplicity(const Weight& w) const {
  auto it = terms.find(w);
  return it == terms.end() ? 0 : it->second;
}

long long Character::total_mass() const {
  long long s = 0;
  for (const auto& [w, m] : terms) s += m;
  return s;
}

void Character::add_term(const Weight& w, long long mult) {
  if (w.length() != n) throw std::invalid_argument("weight length mismatch in character");
  long long& v = terms[w];
  v += mult;
  if (v == 0) terms.erase(w);
}

void Character::prune() {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0 || !region.contains(it->first))
      it = terms.erase(it);
    else
      ++it;
  }
}

Character Character::restricted(const Region& r) const {
  Character out = *this;
  out.region = region.intersect(r);
  out.prune();
  return out;
}

Character Character::permuted(const Perm& z) const {
  Character out(n, region.permuted(z));
  for (const auto& [w, m] : terms) out.terms[z.apply(w)] = m;
  return out;
}

Character Character::plus(const Character& o) const {
  if (n != o.n) throw std::invalid_argument("character length mismatch");
  Character out(n, region.intersect(o.region));
  out.terms = terms;
  for (const auto& [w, m] : o.terms) {
    long long& v = out.terms[w];
    v += m;
    if (v == 0) out.terms.erase(w);
  }
  out.prune();
  return out;
}

Character Character::minus(const Character& o) const {
  if (n != o.n) throw std::invalid_argument("character length mismatch");
  Character out(n, region.intersect(o.region));
  out.terms = terms;
  for (const auto& [w, m] : o.terms) {
    long long& v = out.terms[w];
    v -= m;
    if (v == 0) out.terms.erase(w);
  }
  out.prune();
  for (const auto& [w, m] : out.terms)
    if (m < 0)
      throw std::runtime_error("character difference negative at " + w.str());
  return out;
}

Character Character::scaled(long long c) const {
  Character out(n, region);
  if (c != 0)
    for (const auto& [w, m] : terms) out.terms[w] = m * c;
  return out;
}

Character Character::convolved_with_finite(const Character& finite) const {
  if (n != finite.n) throw std::invalid_argument("character length mismatch");
  if (!finite.region.unrestricted())
    throw std::invalid_argument("convolution factor must be fully certified");
  std::vector<Weight> support;
  for (const auto& [v, m] : finite.terms) support.push_back(v);
  Character out(n, region.shifted_by_support(support));
  for (const auto& [u, mu] : terms)
    for (const auto& [v, mv] : finite.terms) out.add_term(u + v, mu * mv);
  out.prune();
  return out;
}

bool Character::equal_on_common_region(const Character& o) const {
  if (n != o.n) return false;
  Region common = region.intersect(o.region);
  for (const auto& [w, m] : terms)
    if (common.contains(w) && o.multiplicity(w) != m) return false;
  for (const auto& [w, m] : o.terms)
    if (common.contains(w) && multiplicity(w) != m) return false;
  return true;
}

CharacterContainment character_below(const Character& a, const Character& b) {
  if (a.n != b.n) throw std::invalid_argument("character length mismatch");
  Region common = a.region.intersect(b.region);
  CharacterContainment res{true, Character(a.n, common)};
  for (const auto& [w, m] : a.terms) {
    if (!common.contains(w)) continue;
    long long diff = b.multiplicity(w) - m;
    if (diff < 0) res.holds = false;
    if (diff != 0) res.defect.terms[w] = diff;
  }
  for (const auto& [w, m] : b.terms) {
    if (!common.contains(w) || a.terms.count(w)) continue;
    if (m != 0) res.defect.terms[w] = m;
  }
  return res;
}

std::string Character::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [w, m] : terms) {
    if (!first) os << ", ";
    first = false;
    os << w.str();
    if (m != 1) os << ":" << m;
  }
  os << '}';
  return os.str();
}

SignedCharacter signed_add(const SignedCharacter& a, const Character& b, long long sign) {
  SignedCharacter out = a;
  for (const auto& [w, m] : b.terms) {
    long long& v = out[w];
    v += sign * m;
    if (v == 0) out.erase(w);
  }
  return out;
}

bool signed_equal_on(const SignedCharacter& a, const SignedCharacter& b, const Region& region) {
  auto get = [](const SignedCharacter& c, const Weight& w) {
    auto it = c.find(w);
    return it == c.end() ? 0LL : it->second;
  };
  for (const auto& [w, m] : a)
    if (region.contains(w) && get(b, w) != m) return false;
  for (const auto& [w, m] : b)
    if (region.contains(w) && get(a, w) != m) return false;
  return true;
}

}  // namespace drinfilt
