#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drinfilt {

/// Arithmetic helpers modulo p^n for small p^n.
struct ZModRing {
  long long p = 0;
  int n = 0;
  long long modulus = 0;  // p^n

  ZModRing() = default;
  ZModRing(long long p, int n);
  long long norm(long long x) const;  // representative in [0, modulus)
  bool is_unit(long long x) const { return norm(x) % p != 0; }
  long long inv_unit(long long x) const;
  /// x = u * p^e with u a unit (x != 0); returns {e, u}.
  std::pair<int, long long> unit_decompose(long long x) const;
};

/// Submodule of (Z/p^n)^rank in Howell normal form: the unique canonical
/// generating matrix, so equality of submodules is equality of matrices.
struct FiniteModule {
  ZModRing ring;
  int ambient_rank = 0;
  std::vector<std::vector<long long>> rows;  // Howell form, no zero rows

  static FiniteModule span(const ZModRing& ring, int ambient_rank,
                           const std::vector<std::vector<long long>>& generators);
  static FiniteModule zero(const ZModRing& ring, int ambient_rank);
  static FiniteModule ambient(const ZModRing& ring, int ambient_rank);

  bool contains(const std::vector<long long>& v) const;
  bool contains(const FiniteModule& other) const;
  bool is_zero() const { return rows.empty(); }
  bool is_ambient() const;
  /// Number of elements (product of the cyclic orders of the pivots).
  long long size() const;

  /// rk: dimension over F_p of (U + pM)/pM, the rank of the mod-p reduction.
  int reduction_rank() const;
  /// rk': minimal number of generators, the dimension of U/pU.
  int min_generators() const;
  bool is_free() const { return reduction_rank() == min_generators(); }

  FiniteModule sum(const FiniteModule& other) const;
  FiniteModule intersect(const FiniteModule& other) const;
  FiniteModule scaled(long long c) const;  // c * U

  bool operator==(const FiniteModule& o) const { return rows == o.rows && ambient_rank == o.ambient_rank; }
  bool operator<(const FiniteModule& o) const;
  std::string str() const;
};

/// Howell normal form of a generator matrix over Z/p^n; the row span is
/// preserved and the output is the canonical form of the span.
std::vector<std::vector<long long>> howell_form(const ZModRing& ring,
                                                std::vector<std::vector<long long>> mat);

}  // namespace drinfilt
