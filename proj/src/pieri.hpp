#pragma once

#include <set>
#include <vector>

#include "weight.hpp"

namespace drinfilt {

/// Ordered block sizes of a standard Levi subgroup, summing to the ambient
/// rank.
struct LeviShape {
  std::vector<int> blocks;

  LeviShape() = default;
  LeviShape(std::initializer_list<int> b) : blocks(b) {}
  explicit LeviShape(std::vector<int> b) : blocks(std::move(b)) {}
  int total() const;
  bool operator==(const LeviShape&) const = default;
};

/// Irreducible module of a Levi subgroup: one dominant weight per block.
struct IrrepDescriptor {
  LeviShape shape;
  std::vector<Weight> block_weights;
  long long multiplicity = 1;
  long long dimension = 0;  // product of per-block Weyl dimensions

  static IrrepDescriptor make(LeviShape shape, std::vector<Weight> block_weights,
                              long long multiplicity = 1);
  /// Concatenation of the block weights.
  Weight weight() const;
};

/// Sym^k tensor V_nu for GL_n: { nu + c : c >= 0, sum c = k,
/// c_{i+1} <= nu_i - nu_{i+1} }, each summand once.
std::set<Weight> pieri_decompose(long long k, const Weight& nu, int n);

/// V_{(0,...,0,-k)} tensor V_{mu}, computed by dualizing, applying the Pieri
/// rule and dualizing back.
std::set<Weight> dual_pieri_decompose(long long k, const Weight& mu, int n);

/// Blockwise rule for a two-block Levi: dual Pieri on the first block, Pieri
/// on the second, Cartesian product of the outcomes.
std::vector<IrrepDescriptor> levi_tensor_decompose(long long k, const IrrepDescriptor& v);

}  // namespace drinfilt
