#pragma once

#include <map>
#include <vector>

namespace drinfilt {

/// Sparse integer matrix by columns; entries are (row, value).
using SparseColumns = std::vector<std::vector<std::pair<int, long long>>>;

/// Rank over the rationals, exact: unit-pivot sparse elimination first, then
/// fraction-free Bareiss on the dense residue with big integers.
long long rational_rank(int nrows, const SparseColumns& cols);

/// Chain complex with integer boundary matrices; degree k boundary maps
/// C_k -> C_{k-1}.  The composite of consecutive boundaries is checked to be
/// zero on construction.
struct ChainComplexData {
  std::vector<long long> dims;             // dims[k] = dim C_k
  std::vector<SparseColumns> boundaries;   // boundaries[k]: C_k -> C_{k-1}, k >= 1

  static ChainComplexData make(std::vector<long long> dims, std::vector<SparseColumns> boundaries);
  /// Homology dimensions over Q per degree.
  std::vector<long long> homology() const;
};

/// Reduced Betti numbers keyed by degree; degree -1 is the reduced homology
/// of the empty complex (1 when the complex is empty, 0 otherwise).
struct BettiTable {
  std::map<int, long long> values;

  long long at(int degree) const {
    auto it = values.find(degree);
    return it == values.end() ? 0 : it->second;
  }
  bool all_zero() const {
    for (const auto& [d, v] : values)
      if (v != 0) return false;
    return true;
  }
};

/// Abstract finite poset given by a strict order relation on 0..size-1.
struct PosetData {
  int size = 0;
  std::vector<std::vector<bool>> strictly_less;  // strictly_less[a][b] : a < b

  static PosetData from_relation(int size, const std::vector<std::pair<int, int>>& less_pairs);
  bool is_strict_order() const;  // irreflexive + transitive
};

/// Chains of the poset by length; chains[k] lists the k-simplices as index
/// tuples.
std::vector<std::vector<std::vector<int>>> order_complex_chains(const PosetData& poset);

/// Augmented chain complex of the order complex; alternating signs over the
/// sorted chain positions.
ChainComplexData order_complex_complex(const PosetData& poset);

/// Reduced rational Betti numbers of the order complex.
BettiTable order_complex_betti(const PosetData& poset);

/// Quillen's criterion: true iff f is an order-preserving self-map with
/// x >= f(x) <= x0 for all x; certifies contractibility.  Throws if f is not
/// a self-map of the poset.
bool quillen_contractible(const PosetData& poset, const std::vector<int>& f, int x0);

}  // namespace drinfilt
