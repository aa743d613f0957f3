#include "homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace drinfilt {

namespace {

/// Dense fraction-free Bareiss rank over the integers.
long long bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  size_t rows = m.size();
  if (rows == 0) return 0;
  size_t cols = m[0].size();
  mpz_class prev = 1;
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    for (size_t i = rank + 1; i < rows; ++i) {
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_class t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<long long>(rank);
}

}  // namespace

long long rational_rank(int nrows, const SparseColumns& cols) {
  // Working copy as maps row -> value.
  std::vector<std::map<int, long long>> work;
  for (const auto& col : cols) {
    std::map<int, long long> c;
    for (auto [r, v] : col)
      if (v != 0) {
        if (r < 0 || r >= nrows) throw std::invalid_argument("row index out of range");
        c[r] += v;
        if (c[r] == 0) c.erase(r);
      }
    if (!c.empty()) work.push_back(std::move(c));
  }

  long long rank = 0;
  std::vector<bool> used_row(static_cast<size_t>(nrows), false);
  bool progress = true;
  while (progress) {
    progress = false;
    // greedy unit pivot: smallest column with a +-1 entry in a free row
    int best_col = -1, best_row = -1;
    size_t best_nnz = 0;
    for (size_t ci = 0; ci < work.size(); ++ci) {
      for (const auto& [r, v] : work[ci]) {
        if (used_row[static_cast<size_t>(r)]) continue;
        if (v == 1 || v == -1) {
          if (best_col < 0 || work[ci].size() < best_nnz) {
            best_col = static_cast<int>(ci);
            best_row = r;
            best_nnz = work[ci].size();
          }
          break;
        }
      }
    }
    if (best_col >= 0) {
      progress = true;
      std::map<int, long long> piv = work[static_cast<size_t>(best_col)];
      long long pv = piv[best_row];
      work.erase(work.begin() + best_col);
      used_row[static_cast<size_t>(best_row)] = true;
      ++rank;
      for (auto& c : work) {
        auto it = c.find(best_row);
        if (it == c.end()) continue;
        long long f = it->second;
        for (const auto& [r, v] : piv) {
          long long& x = c[r];
          // c -= (f/pv) * piv ; pv is a unit so f/pv = f*pv
          __int128 next = static_cast<__int128>(x) - static_cast<__int128>(f) * pv * v;
          if (next > (static_cast<__int128>(1) << 58) || next < -(static_cast<__int128>(1) << 58))
            throw std::overflow_error("rank elimination entry overflow");
          x = static_cast<long long>(next);
          if (x == 0) c.erase(r);
        }
      }
      work.erase(std::remove_if(work.begin(), work.end(),
                                [](const std::map<int, long long>& c) { return c.empty(); }),
                 work.end());
    }
  }
  if (work.empty()) return rank;

  // Dense big-integer residue.
  std::map<int, int> row_index;
  for (const auto& c : work)
    for (const auto& [r, v] : c)
      if (!row_index.count(r)) {
        int k = static_cast<int>(row_index.size());
        row_index[r] = k;
      }
  std::vector<std::vector<mpz_class>> dense(
      work.size(), std::vector<mpz_class>(row_index.size(), mpz_class(0)));
  for (size_t ci = 0; ci < work.size(); ++ci)
    for (const auto& [r, v] : work[ci])
      dense[ci][static_cast<size_t>(row_index[r])] = mpz_class(static_cast<long>(v));
  return rank + bareiss_rank(std::move(dense));
}

ChainComplexData ChainComplexData::make(std::vector<long long> dims,
                                        std::vector<SparseColumns> boundaries) {
  ChainComplexData c;
  c.dims = std::move(dims);
  c.boundaries = std::move(boundaries);
  if (c.boundaries.size() != c.dims.size())
    throw std::invalid_argument("boundary count mismatch");
  // boundary(k) o boundary(k+1) = 0
  for (size_t k = 1; k + 1 <= c.dims.size() - 1; ++k) {
    const SparseColumns& high = c.boundaries[k + 1];
    const SparseColumns& low = c.boundaries[k];
    for (const auto& col : high) {
      std::map<int, long long> acc;
      for (auto [mid, v] : col)
        for (auto [r, w] : low[static_cast<size_t>(mid)]) {
          acc[r] += v * w;
          if (acc[r] == 0) acc.erase(r);
        }
      if (!acc.empty()) throw std::logic_error("boundary composite is nonzero");
    }
  }
  return c;
}

std::vector<long long> ChainComplexData::homology() const {
  std::vector<long long> ranks(dims.size() + 1, 0);
  for (size_t k = 1; k < dims.size(); ++k)
    ranks[k] = rational_rank(static_cast<int>(dims[k - 1]), boundaries[k]);
  std::vector<long long> h(dims.size());
  for (size_t k = 0; k < dims.size(); ++k) {
    long long out = k > 0 ? ranks[k] : 0;
    long long in = k + 1 < dims.size() ? ranks[k + 1] : 0;
    h[k] = dims[k] - out - in;
  }
  return h;
}

PosetData PosetData::from_relation(int size, const std::vector<std::pair<int, int>>& less_pairs) {
  PosetData p;
  p.size = size;
  p.strictly_less.assign(static_cast<size_t>(size), std::vector<bool>(static_cast<size_t>(size), false));
  for (auto [a, b] : less_pairs) p.strictly_less[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  return p;
}

bool PosetData::is_strict_order() const {
  for (int a = 0; a < size; ++a) {
    if (strictly_less[static_cast<size_t>(a)][static_cast<size_t>(a)]) return false;
    for (int b = 0; b < size; ++b)
      if (strictly_less[static_cast<size_t>(a)][static_cast<size_t>(b)])
        for (int c = 0; c < size; ++c)
          if (strictly_less[static_cast<size_t>(b)][static_cast<size_t>(c)] &&
              !strictly_less[static_cast<size_t>(a)][static_cast<size_t>(c)])
            return false;
  }
  return true;
}

std::vector<std::vector<std::vector<int>>> order_complex_chains(const PosetData& poset) {
  std::vector<std::vector<std::vector<int>>> chains;
  std::vector<std::vector<int>> cur;
  for (int v = 0; v < poset.size; ++v) cur.push_back({v});
  while (!cur.empty()) {
    chains.push_back(cur);
    std::vector<std::vector<int>> nxt;
    for (const auto& ch : cur)
      for (int v = 0; v < poset.size; ++v)
        if (poset.strictly_less[static_cast<size_t>(ch.back())][static_cast<size_t>(v)]) {
          std::vector<int> e = ch;
          e.push_back(v);
          nxt.push_back(std::move(e));
        }
    cur = std::move(nxt);
  }
  return chains;
}

ChainComplexData order_complex_complex(const PosetData& poset) {
  auto chains = order_complex_chains(poset);
  // augmented: degree -1 is stored as slot 0 with dimension 1
  std::vector<long long> dims;
  dims.push_back(1);
  for (const auto& level : chains) dims.push_back(static_cast<long long>(level.size()));

  std::vector<SparseColumns> boundaries(dims.size());
  if (!chains.empty()) {
    SparseColumns aug(chains[0].size());
    for (size_t i = 0; i < chains[0].size(); ++i) aug[i] = {{0, 1}};
    boundaries[1] = std::move(aug);
  }
  for (size_t k = 1; k < chains.size(); ++k) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < chains[k - 1].size(); ++i) index[chains[k - 1][i]] = static_cast<int>(i);
    SparseColumns cols(chains[k].size());
    for (size_t i = 0; i < chains[k].size(); ++i) {
      const auto& ch = chains[k][i];
      for (size_t f = 0; f < ch.size(); ++f) {
        std::vector<int> face;
        for (size_t t = 0; t < ch.size(); ++t)
          if (t != f) face.push_back(ch[t]);
        cols[i].push_back({index.at(face), f % 2 == 0 ? 1 : -1});
      }
    }
    boundaries[k + 1] = std::move(cols);
  }
  return ChainComplexData::make(std::move(dims), std::move(boundaries));
}

BettiTable order_complex_betti(const PosetData& poset) {
  BettiTable out;
  if (poset.size == 0) {
    out.values[-1] = 1;
    return out;
  }
  ChainComplexData complex = order_complex_complex(poset);
  std::vector<long long> h = complex.homology();
  for (size_t k = 0; k < h.size(); ++k) out.values[static_cast<int>(k) - 1] = h[k];
  return out;
}

bool quillen_contractible(const PosetData& poset, const std::vector<int>& f, int x0) {
  if (static_cast<int>(f.size()) != poset.size || x0 < 0 || x0 >= poset.size)
    throw std::invalid_argument("map is not a self-map of the poset");
  for (int v : f)
    if (v < 0 || v >= poset.size) throw std::invalid_argument("map is not a self-map of the poset");
  auto leq = [&](int a, int b) {
    return a == b || poset.strictly_less[static_cast<size_t>(a)][static_cast<size_t>(b)];
  };
  for (int a = 0; a < poset.size; ++a)
    for (int b = 0; b < poset.size; ++b)
      if (poset.strictly_less[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
          !leq(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
        return false;  // not order-preserving
  for (int a = 0; a < poset.size; ++a) {
    int fa = f[static_cast<size_t>(a)];
    if (!leq(fa, a) || !leq(fa, x0)) return false;
  }
  return true;
}

}  // namespace drinfilt
