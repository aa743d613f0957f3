#pragma once

#include <string>
#include <vector>

namespace drinfilt {

/// Integral torus character of GL_n, stored as its coordinate vector with
/// respect to epsilon_0, ..., epsilon_{n-1}.
struct Weight {
  std::vector<long long> entries;

  Weight() = default;
  explicit Weight(std::vector<long long> e) : entries(std::move(e)) {}
  Weight(std::initializer_list<long long> e) : entries(e) {}

  static Weight zero(int n) { return Weight(std::vector<long long>(n, 0)); }

  int length() const { return static_cast<int>(entries.size()); }
  long long sum() const;
  /// Weakly decreasing entries.
  bool dominant() const;
  /// Sum of the negative parts, max(0, -w_c) over all coordinates.
  long long pole_order() const;

  long long operator[](int i) const { return entries[static_cast<size_t>(i)]; }
  long long& operator[](int i) { return entries[static_cast<size_t>(i)]; }
  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  bool operator==(const Weight& o) const = default;
  /// Length first, then lexicographic on entries.
  bool operator<(const Weight& o) const;

  /// Entries reversed and negated; the highest weight of the dual module.
  Weight dual() const;
  Weight slice(int from, int to) const;  // [from, to)
  static Weight concat(const Weight& a, const Weight& b);

  std::string str() const;
  /// "(a,b | c,d)" with a block separator after position `split`.
  std::string str_split(int split) const;
};

/// Root data of GL_{d+1} with the lower-triangular Borel convention:
/// alpha_{i,j} = epsilon_i - epsilon_j, alpha_i = alpha_{i+1,i}, and
/// rho = (0, -1, ..., -d).
struct RootSystem {
  int d;

  explicit RootSystem(int d);
  int rank() const { return d; }
  Weight root(int i, int j) const;        // alpha_{i,j}, i != j
  Weight simple_root(int i) const;        // alpha_i, 0 <= i <= d-1
  std::vector<Weight> simple_roots() const;
  std::vector<Weight> all_roots() const;
  Weight rho() const;
};

/// Permutation of {0, ..., n-1}; image[i] is where position i goes.
struct Perm {
  std::vector<int> image;

  static Perm identity(int n);
  static Perm transposition(int n, int a, int b);
  int size() const { return static_cast<int>(image.size()); }
  int operator()(int i) const { return image[static_cast<size_t>(i)]; }
  /// (a * b) applies b first, then a.
  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  /// Place permutation: (w.apply(chi))_a = chi_{w^{-1}(a)}.
  Weight apply(const Weight& chi) const;
  bool operator==(const Perm& o) const = default;
};

/// The minimal-length coset representatives w_i = s_i s_{i-1} ... s_1 of
/// W / W_{L_(1,d)}, where s_k transposes positions k-1 and k.  w_0 = id.
struct WeylWord {
  int d;
  int i;

  WeylWord(int d, int i);
  Perm perm() const;
  int length() const { return i; }
};

enum class DominanceOrder { greater, less, equal, incomparable };
enum class BottCase { dominant_regular, degenerate };

struct BottIndex {
  int i0;
  BottCase kind;
};

/// w * chi = w(chi + rho) - rho.
Weight dot_action(const Perm& w, const Weight& chi);
Weight dot_action(const WeylWord& w, const Weight& chi);

/// lambda_1 >= ... >= lambda_d (lambda_0 unconstrained).
bool levi_dominant_1d(const Weight& lambda);
void require_levi_dominant_1d(int d, const Weight& lambda);

/// The unique i with w_i * lambda dominant (dominant_regular), or the unique
/// i < d with w_i * lambda = w_{i+1} * lambda (degenerate).
BottIndex find_bott_index(int d, const Weight& lambda);

/// Dominance order: mu >= nu iff equal coordinate sums and all prefix
/// partial sums of mu - nu are nonnegative.
DominanceOrder dominance_compare(const Weight& mu, const Weight& nu);

std::string to_string(DominanceOrder o);
std::string to_string(BottCase c);

}  // namespace drinfilt
