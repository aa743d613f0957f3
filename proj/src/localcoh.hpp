#pragma once

#include <optional>
#include <set>
#include <vector>

#include "character.hpp"
#include "filtration.hpp"
#include "weight.hpp"

namespace drinfilt {

/// Monomial model of a graded local cohomology module: Laurent monomials
/// X_0^{k_0}...X_d^{k_d} of fixed total degree, with a per-coordinate sign
/// constraint and an absolute cap on the total pole order.
struct LaurentModule {
  int d = 0;
  long long twist = 0;
  std::vector<bool> nonneg;  // true: k_c >= 0, false: k_c < 0
  long long pole_cap = 0;

  /// The model of H^{d-j}_{P^j}(P^d, O(r)): coordinates 0..j nonnegative,
  /// the rest strictly negative; order_bound counts pole orders from the
  /// minimal one of the pattern.
  static LaurentModule support_model(int d, int j, long long r, long long order_bound);

  bool in_pattern(const Weight& k) const;
  bool contains(const Weight& k) const;  // pattern + degree + pole cap
  std::vector<Weight> basis() const;
  Character character() const;
};

/// Smallest possible total pole order in the support model, max(d-j, -r).
long long minimal_pole_order(int d, int j, long long r);

/// Character of H^{d-j}_{P^j}(P^d, O(r)) (kernel/limit part), certified up to
/// the stated pole order counted from the minimal one.
Character local_cohomology_character(int d, int j, long long r, long long order_bound);

/// Independent oracle: builds the graded pieces of (S(r)/(X_{j+1}^n,...,X_d^n))^0
/// in twisted degree zero for n <= n_max, chains them through the
/// generalized-fraction transition maps, and reads off the character of the
/// direct limit.  Certified for total pole order <= n_max - 1.  j = -1
/// quotients every variable and yields H^d(P^d, O(r)).
Character direct_limit_character(int d, int j, long long r, int n_max);

/// X_i d/dX_j acting on a basis monomial of a LaurentModule.
struct LieGenerator {
  int i = 0;
  int j = 0;
};

struct LieImage {
  long long coeff = 0;               // zero when the class dies
  std::optional<Weight> target;
  bool escaped = false;              // lands past the certified pole cap
};

LieImage lie_derivation_apply(const LaurentModule& m, const LieGenerator& g, const Weight& k);

/// Torus character of V_lambda as an L_(1,d) module: Gm-weight lambda_0 on
/// the first coordinate times the GL_d character of (lambda_1..lambda_d).
Character bundle_fibre_character(int d, const Weight& lambda);

/// Torus character of the outer tensor V_{mu'} (x) V_{mu''} where mu splits
/// at `split`.
Character levi_irrep_character(const Weight& mu, int split);

/// Multiplicity character of the free commutative ring on the given weight
/// vectors up to total degree max_degree, graded by the functional `grading`
/// (which must take value 1 on every generator).
Character ring_character(int n, const std::vector<Weight>& generators, long long max_degree,
                         const std::vector<long long>& grading);

/// Character of H^i_{X_{w_i}}(P^d, F_lambda): the Cousin cell over the i-th
/// Schubert cell, truncated at total shift degree <= degree_bound.
Character cousin_cell_character(int d, int i, const Weight& lambda, long long degree_bound);

/// Character of the image of the Cousin boundary map delta_{i-1}, i.e. of
/// the kernel module over the closed Schubert variety, by downward recursion
/// through the cells.
Character boundary_image_character(int d, int i, const Weight& lambda, long long degree_bound);

/// Same module transported to P^{d-i} support by the block swap z_i^{-1}.
Character supported_kernel_character(int d, int i, const Weight& lambda, long long degree_bound);

struct ContainmentResult {
  bool holds = false;
  Character defect;
};

/// Checks that the character of the kernel module over the closed Schubert
/// variety is dominated by the free coefficient module
/// K[X_(m,n) : m >= i, n <= i-1] (x) V_{i,lambda}.
ContainmentResult check_quotient_containment(int d, int i, const Weight& lambda,
                                             long long degree_bound);

struct SaturationResult {
  bool covers = false;
  Character frontier;  // unreached basis mass
};

/// Repeatedly applies every L_(i,j) to the span of the seed monomials inside
/// the truncated module and reports whether the whole basis is reached.
SaturationResult saturate_generators(const LaurentModule& m, const std::vector<Weight>& seed);

/// Truncated character of ker(U(u^+_(j+1,d-j)) (x) N -> ker(H^{d-j}_{P^j} ->
/// H^{d-j})), the shadow of the differential-equation system attached to the
/// chosen generating module.
Character verma_kernel_character(int d, int j, const Weight& lambda, const ModuleDescriptor& seed,
                                 long long degree_bound);

}  // namespace drinfilt
