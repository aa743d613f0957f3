#pragma once

#include <functional>
#include <vector>

#include "extring.hpp"
#include "homology.hpp"
#include "zmodmat.hpp"

namespace drinfilt {

enum class SubmoduleFilter { all, poset_t, poset_t_free };

/// All submodules of (Z/p^n)^ambient_rank in canonical form, sorted.
/// poset_t keeps rk >= 1 and rk' <= ambient_rank - 1; poset_t_free further
/// keeps U and M/U free.  Refuses when p^(n*rank) exceeds the feasibility
/// guard.
std::vector<FiniteModule> enumerate_submodules(long long p, int n, int ambient_rank,
                                               SubmoduleFilter filter);

/// Streaming variant: visits each canonical form once, in sorted order.
void visit_submodules(long long p, int n, int ambient_rank, SubmoduleFilter filter,
                      const std::function<void(const FiniteModule&)>& visit);

/// Poset of submodules under strict inclusion, with the index map back into
/// the element list.
struct ModulePoset {
  std::vector<FiniteModule> elements;
  PosetData poset;

  static ModulePoset build(std::vector<FiniteModule> elements);
  int index_of(const FiniteModule& m) const;  // -1 when absent
};

enum class StalkVariant { free_flags, all_submodules };

/// Stalk of the covering complex at the point cut out by `line`: the order
/// complex of { U in the chosen poset : the tube of U contains the line },
/// reduced homology of the augmented complex.
struct StalkResult {
  BettiTable betti;
  std::vector<FiniteModule> members;
};

StalkResult stalk_betti(long long p, int n, int d, const ExtensionRing& ring, const RingLine& line,
                        StalkVariant variant);

/// Dimensions and homology of the parabolic coset complex
///   K[G/P_I] for I running over all supersets of {alpha_0..alpha_{d-j-1}},
/// positions ordered by |I|, boundary maps the signed flag-forgetting sums.
/// q may be any prime power.
struct SteinbergComplexResult {
  std::vector<long long> dims;       // per position, left to right
  std::vector<long long> homology;   // per position
};

SteinbergComplexResult steinberg_complex_homology(long long q, int d, int j);

/// Number of cosets |GL_{d+1}(F_q) / P_I| for the parabolic of type I
/// (I given by the set of simple roots inside the Levi).
long long parabolic_coset_count(long long q, int d, const std::vector<int>& levi_roots);

}  // namespace drinfilt
