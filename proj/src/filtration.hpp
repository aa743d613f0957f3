#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bott.hpp"
#include "pieri.hpp"
#include "weight.hpp"

namespace drinfilt {

/// The block-swap matrix z_i exchanging the block structures (i, d+1-i) and
/// (d+1-i, i), realized as a coordinate permutation.
struct BlockSwap {
  int d;
  int i;

  BlockSwap(int d, int i);
  Perm perm() const;             // z_i
  Perm inverse_perm() const;     // z_i^{-1}
  Weight apply(const Weight& w) const { return perm().apply(w); }
  Weight apply_inverse(const Weight& w) const { return inverse_perm().apply(w); }
};

/// Direct sum of Levi irreducibles with its total dimension.
struct ModuleDescriptor {
  std::vector<IrrepDescriptor> summands;
  long long total_dimension = 0;

  static ModuleDescriptor make(std::vector<IrrepDescriptor> summands);
  /// Torus character: sum of blockwise irreducible characters.
  Character character() const;
};

/// Step highest weight mu_{j,lambda}: w_{j-1} * lambda for j <= i0, else
/// w_j * lambda.  Splits as L_(j,d+1-j)-dominant pair (mu', mu'').
Weight step_highest_weight(int j, int d, const Weight& lambda);

/// The weight set Phi_{j,lambda} on the Schubert-cell side: pairs
/// (mu' - (d_j..d_1), mu'' + (c_1..c_{d-j+1})) subject to the constraint
/// system with c_1 = 0 or d_1 = 0.
std::set<Weight> step_weight_set_schubert(int j, int d, const Weight& lambda);

/// Psi_{j,lambda} = z_j^{-1} . Phi_{j,lambda}.
std::set<Weight> step_weight_set(int j, int d, const Weight& lambda);

/// N_{j,lambda}: one irreducible per Psi element, blocks (d+1-j, j).
ModuleDescriptor step_generating_module(int j, int d, const Weight& lambda);

/// Symbolic tag for the generalized Steinberg constituent
/// v^G_{P_(d+1-j,1^j)}(H^j(P^d,F)').
struct AlgebraicPart {
  std::vector<int> parabolic_blocks;  // (d+1-j, 1, ..., 1)
  long long coefficient_dimension = 0;
  std::string tag;  // e.g. "v^G_P(2,1)"
};

/// Locally analytic constituent: the module N_{d-j}, a Steinberg factor tag
/// and the kernel-character handle for the system d_{d-j}.
struct AnalyticPart {
  int module_index = 0;  // subquotient j carries the module indexed d-j
  ModuleDescriptor module;
  std::string steinberg_tag;     // "St_j"
  bool steinberg_infinite = false;
  int kernel_index = 0;          // d_{d-j}
};

struct SubquotientDescriptor {
  int j = 0;                       // filtration index 1..d
  LeviShape parabolic;             // (d+1-j, j)
  std::optional<AlgebraicPart> algebraic_part;
  AnalyticPart analytic_part;
};

struct FiltrationReport {
  int d = 0;
  Weight lambda;
  BottIndex index;
  CohomologyResult cohomology;
  long long floor_dimension = 0;   // W^0 = H^0(P^d, F)
  std::vector<SubquotientDescriptor> subquotients;  // j = 1..d
};

FiltrationReport build_filtration_report(int d, const Weight& lambda);

}  // namespace drinfilt
