#pragma once

#include <optional>
#include <vector>

#include "character.hpp"
#include "weight.hpp"

namespace drinfilt {

/// Outcome of Bott's theorem for the homogeneous bundle attached to an
/// L_(1,d)-dominant weight: at most one nonvanishing cohomology degree.
struct CohomologyResult {
  BottIndex index;
  /// Set exactly in the dominant-regular case.
  std::optional<int> degree;
  std::optional<Weight> highest_weight;  // w_{i0} * lambda
  long long dimension = 0;               // 0 when all cohomology vanishes

  bool present() const { return degree.has_value(); }
};

/// Dimension of the irreducible GL_n module with highest weight mu:
/// prod_{i<j} (mu_i - mu_j + j - i) / (j - i).
long long weyl_dim(const Weight& mu);

/// Full weight multiplicity character of the irreducible module V_mu,
/// computed by semistandard tableau enumeration after det-normalization.
Character irrep_character(const Weight& mu);

/// H^*(P^d, F_lambda) by the dot-action criterion.
CohomologyResult bott_cohomology(int d, const Weight& lambda);

/// Greedy peeling of a genuine character into irreducibles; throws if some
/// multiplicity goes negative along the way.
std::vector<std::pair<Weight, long long>> decompose_character(const Character& chi);

}  // namespace drinfilt
