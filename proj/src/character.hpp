#pragma once

#include <map>
#include <string>
#include <vector>

#include "weight.hpp"

namespace drinfilt {

/// Certified region of weight space: a conjunction of constraints.  A
/// character is trusted only on the weights its region contains; every
/// operation intersects regions so that truncation is never silent.
struct Region {
  /// lo <= coeffs . w <= hi
  struct LinearBand {
    std::vector<long long> coeffs;
    long long lo;
    long long hi;
  };

  std::vector<LinearBand> bands;
  /// Sum of negative parts bounded: pole_order(w) <= value.  Negative value
  /// marks the empty region.
  std::vector<long long> pole_caps;

  static Region everything() { return Region{}; }
  static Region pole_bound(long long cap);
  static Region band(std::vector<long long> coeffs, long long lo, long long hi);
  static Region upper_band(std::vector<long long> coeffs, long long hi);

  bool unrestricted() const { return bands.empty() && pole_caps.empty(); }
  bool contains(const Weight& w) const;
  Region intersect(const Region& other) const;
  Region permuted(const Perm& z) const;
  /// Sound shrink so that w in result implies w - v in *this for every v in
  /// shifts.  Used when convolving with a finite complete character.
  Region shifted_by_support(const std::vector<Weight>& shifts) const;
};

/// Finitely supported torus character with truncation metadata.  The stored
/// terms are exactly the true multiplicities on the certified region; weights
/// inside the region and absent from the map have multiplicity zero, and
/// nothing is claimed outside the region.
struct Character {
  int n = 0;  // weight length
  std::map<Weight, long long> terms;
  Region region;

  Character() = default;
  explicit Character(int n_, Region r = Region::everything()) : n(n_), region(std::move(r)) {}

  static Character empty(int n) { return Character(n); }
  static Character single(const Weight& w, long long mult = 1);

  long long multiplicity(const Weight& w) const;
  long long total_mass() const;
  bool is_zero() const { return terms.empty(); }
  void add_term(const Weight& w, long long mult);
  /// Drop terms outside the region (and zero multiplicities).
  void prune();

  Character restricted(const Region& r) const;
  Character permuted(const Perm& z) const;

  /// Pointwise sum / difference on the intersection of regions.  The
  /// difference throws if any certified multiplicity would go negative.
  Character plus(const Character& o) const;
  Character minus(const Character& o) const;
  Character scaled(long long c) const;

  /// Weight-wise convolution with a finite, fully certified character.
  Character convolved_with_finite(const Character& finite) const;

  /// Equality of multiplicities on the intersection of regions.
  bool equal_on_common_region(const Character& o) const;

  std::string str() const;
};

/// a <= b pointwise on the intersection of regions; defect = b - a there.
struct CharacterContainment {
  bool holds;
  Character defect;
};

CharacterContainment character_below(const Character& a, const Character& b);

/// Signed formal combination of weights without region bookkeeping; used for
/// alternating sums whose intermediate values may be negative.
using SignedCharacter = std::map<Weight, long long>;

SignedCharacter signed_add(const SignedCharacter& a, const Character& b, long long sign);
/// Equal multiplicities on `region` for every weight appearing in either map.
bool signed_equal_on(const SignedCharacter& a, const SignedCharacter& b, const Region& region);

}  // namespace drinfilt
