#pragma once

#include <vector>

#include "zmodmat.hpp"

namespace drinfilt {

/// Unramified extension (Z/p^n)[t]/(f) with f monic and irreducible mod p.
/// Elements are coefficient vectors of length deg f.
struct ExtensionRing {
  ZModRing base;
  std::vector<long long> modulus_poly;  // monic, length deg+1
  int deg = 0;

  using Elem = std::vector<long long>;

  ExtensionRing(const ZModRing& base, std::vector<long long> modulus_poly);
  /// The standard unramified quadratic extension (t^2+t+1 for p=2, t^2+1 for
  /// p=3, generic search otherwise).
  static ExtensionRing unramified_quadratic(const ZModRing& base);

  Elem zero() const { return Elem(static_cast<size_t>(deg), 0); }
  Elem one() const;
  Elem scalar(long long c) const;
  Elem generator() const;  // the class of t
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  /// A unit iff nonzero mod (p, t-reduction), i.e. the image in the residue
  /// field is nonzero.
  bool is_unit(const Elem& a) const;
  bool in_base(const Elem& a) const;  // lies in Z/p^n
  long long unit_group_order() const;
  Elem inv_unit(const Elem& a) const;
  std::vector<Elem> all_elements() const;
};

/// Free rank-1 submodule of (O^(n))^rank, stored by a fixed unimodular
/// generator.
struct RingLine {
  std::vector<ExtensionRing::Elem> generator;
};

/// Canonical representatives of all lines: first unit coordinate scaled to 1,
/// earlier coordinates non-units.
std::vector<RingLine> enumerate_ring_lines(const ExtensionRing& ring, int rank);

/// Decompose the generator over the power basis of the extension: component
/// k collects the t^k coefficients, an element of (Z/p^n)^rank.
std::vector<std::vector<long long>> line_components(const ExtensionRing& ring, const RingLine& line);

/// red in U (x) O^(n), decided by solving componentwise over Z/p^n.
bool tube_contains(const ExtensionRing& ring, const FiniteModule& submodule, const RingLine& line);

/// The smallest submodule whose tube contains the line: the span of the
/// components.
FiniteModule minimal_tube_module(const ExtensionRing& ring, const RingLine& line);

}  // namespace drinfilt
