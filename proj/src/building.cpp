#include "building.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace drinfilt {

namespace {

constexpr long long kEnumerationGuard = 6561;

long long pow_ll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<std::vector<long long>> all_vectors(const ZModRing& ring, int rank) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(static_cast<size_t>(rank), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == rank) {
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v < ring.modulus; ++v) {
      cur[static_cast<size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

/// M/U is free iff |M/U| is p^(n*m) and its p-torsion has exactly p^m
/// elements, with m the reduction corank.
bool quotient_free(const FiniteModule& u, const std::vector<std::vector<long long>>& vectors) {
  const ZModRing& ring = u.ring;
  long long ambient = pow_ll(ring.modulus, u.ambient_rank);
  long long qsize = ambient / u.size();
  int m = 0;
  long long t = qsize;
  while (t > 1 && t % pow_ll(ring.p, ring.n) == 0) {
    t /= pow_ll(ring.p, ring.n);
    ++m;
  }
  if (t != 1) return false;
  long long torsion_pre = 0;  // |{x in M : p x in U}|
  for (const auto& v : vectors) {
    std::vector<long long> pv(v.size());
    for (size_t i = 0; i < v.size(); ++i) pv[i] = ring.norm(v[i] * ring.p);
    if (u.contains(pv)) ++torsion_pre;
  }
  return torsion_pre / u.size() == pow_ll(ring.p, m);
}

}  // namespace

namespace {

std::vector<FiniteModule> compute_submodules(long long p, int n, int ambient_rank,
                                             SubmoduleFilter filter) {
  ZModRing ring(p, n);
  long long estimate = pow_ll(ring.modulus, ambient_rank);
  if (estimate > kEnumerationGuard) {
    std::ostringstream os;
    os << "submodule enumeration refused: p^(n*rank) = " << estimate << " exceeds the guard "
       << kEnumerationGuard;
    throw std::domain_error(os.str());
  }
  std::vector<std::vector<long long>> vectors = all_vectors(ring, ambient_rank);

  std::set<FiniteModule> seen;
  std::vector<FiniteModule> work;
  FiniteModule zero = FiniteModule::zero(ring, ambient_rank);
  seen.insert(zero);
  work.push_back(zero);
  while (!work.empty()) {
    FiniteModule m = work.back();
    work.pop_back();
    for (const auto& v : vectors) {
      if (m.contains(v)) continue;
      std::vector<std::vector<long long>> gens = m.rows;
      gens.push_back(v);
      FiniteModule bigger = FiniteModule::span(ring, ambient_rank, gens);
      if (seen.insert(bigger).second) work.push_back(bigger);
    }
  }

  const int d = ambient_rank - 1;
  std::vector<FiniteModule> out;
  for (const FiniteModule& m : seen) {
    bool keep = true;
    switch (filter) {
      case SubmoduleFilter::all:
        break;
      case SubmoduleFilter::poset_t:
        keep = m.reduction_rank() >= 1 && m.min_generators() <= d;
        break;
      case SubmoduleFilter::poset_t_free:
        keep = m.reduction_rank() >= 1 && m.min_generators() <= d && m.is_free() &&
               quotient_free(m, vectors);
        break;
    }
    if (keep) out.push_back(m);
  }
  return out;
}

std::mutex g_submodule_mutex;
std::map<std::tuple<long long, int, int, int>, std::vector<FiniteModule>> g_submodule_cache;

}  // namespace

std::vector<FiniteModule> enumerate_submodules(long long p, int n, int ambient_rank,
                                               SubmoduleFilter filter) {
  std::tuple<long long, int, int, int> key{p, n, ambient_rank, static_cast<int>(filter)};
  std::lock_guard<std::mutex> lock(g_submodule_mutex);
  auto it = g_submodule_cache.find(key);
  if (it == g_submodule_cache.end())
    it = g_submodule_cache.emplace(key, compute_submodules(p, n, ambient_rank, filter)).first;
  return it->second;
}

void visit_submodules(long long p, int n, int ambient_rank, SubmoduleFilter filter,
                      const std::function<void(const FiniteModule&)>& visit) {
  for (const FiniteModule& m : enumerate_submodules(p, n, ambient_rank, filter)) visit(m);
}

ModulePoset ModulePoset::build(std::vector<FiniteModule> elements) {
  ModulePoset mp;
  std::sort(elements.begin(), elements.end());
  mp.elements = std::move(elements);
  int n = static_cast<int>(mp.elements.size());
  mp.poset.size = n;
  mp.poset.strictly_less.assign(static_cast<size_t>(n),
                                std::vector<bool>(static_cast<size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (mp.elements[static_cast<size_t>(a)].size() < mp.elements[static_cast<size_t>(b)].size() &&
          mp.elements[static_cast<size_t>(b)].contains(mp.elements[static_cast<size_t>(a)]))
        mp.poset.strictly_less[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    }
  return mp;
}

int ModulePoset::index_of(const FiniteModule& m) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), m);
  if (it == elements.end() || !(*it == m)) return -1;
  return static_cast<int>(it - elements.begin());
}

StalkResult stalk_betti(long long p, int n, int d, const ExtensionRing& ring, const RingLine& line,
                        StalkVariant variant) {
  if (ring.base.p != p || ring.base.n != n) throw std::invalid_argument("ring mismatch");
  SubmoduleFilter filter =
      variant == StalkVariant::free_flags ? SubmoduleFilter::poset_t_free : SubmoduleFilter::poset_t;
  StalkResult res;
  visit_submodules(p, n, d + 1, filter, [&](const FiniteModule& m) {
    if (tube_contains(ring, m, line)) res.members.push_back(m);
  });
  res.betti = order_complex_betti(ModulePoset::build(res.members).poset);
  return res;
}

namespace {

/// Subspaces of F_q^N as reduced row echelon forms over an extension field
/// with n = 1.
struct FieldSpace {
  const ExtensionRing* field;
  int n_ambient;
  std::vector<std::vector<ExtensionRing::Elem>> rows;  // RREF basis

  bool contains(const std::vector<ExtensionRing::Elem>& v) const {
    std::vector<ExtensionRing::Elem> r = v;
    for (const auto& row : rows) {
      int piv = -1;
      for (int c = 0; c < n_ambient; ++c)
        if (!field->is_zero(row[static_cast<size_t>(c)])) {
          piv = c;
          break;
        }
      if (piv < 0) continue;
      const auto& f = r[static_cast<size_t>(piv)];
      if (field->is_zero(f)) continue;
      ExtensionRing::Elem factor = f;
      for (int c = 0; c < n_ambient; ++c)
        r[static_cast<size_t>(c)] =
            field->sub(r[static_cast<size_t>(c)], field->mul(factor, row[static_cast<size_t>(c)]));
    }
    for (const auto& e : r)
      if (!field->is_zero(e)) return false;
    return true;
  }

  bool contains(const FieldSpace& other) const {
    for (const auto& row : other.rows)
      if (!contains(row)) return false;
    return true;
  }
};

std::vector<FieldSpace> subspaces_of_dim(const ExtensionRing& field, int n_ambient, int r) {
  std::vector<FieldSpace> out;
  std::vector<ExtensionRing::Elem> elems = field.all_elements();
  std::vector<int> pivots(static_cast<size_t>(r));
  std::function<void(int, int)> choose = [&](int pos, int from) {
    if (pos == r) {
      // fill the free entries of the RREF with given pivot columns
      std::vector<std::vector<ExtensionRing::Elem>> rows(
          static_cast<size_t>(r),
          std::vector<ExtensionRing::Elem>(static_cast<size_t>(n_ambient), field.zero()));
      std::vector<std::pair<int, int>> free_cells;  // (row, col)
      for (int i = 0; i < r; ++i) {
        rows[static_cast<size_t>(i)][static_cast<size_t>(pivots[static_cast<size_t>(i)])] = field.one();
        for (int c = pivots[static_cast<size_t>(i)] + 1; c < n_ambient; ++c) {
          bool is_pivot = false;
          for (int t = 0; t < r; ++t)
            if (pivots[static_cast<size_t>(t)] == c) is_pivot = true;
          if (!is_pivot) free_cells.push_back({i, c});
        }
      }
      std::function<void(size_t)> fill = [&](size_t k) {
        if (k == free_cells.size()) {
          out.push_back(FieldSpace{&field, n_ambient, rows});
          return;
        }
        for (const auto& e : elems) {
          rows[static_cast<size_t>(free_cells[k].first)][static_cast<size_t>(free_cells[k].second)] = e;
          fill(k + 1);
        }
      };
      fill(0);
      return;
    }
    for (int c = from; c <= n_ambient - (r - pos); ++c) {
      pivots[static_cast<size_t>(pos)] = c;
      choose(pos + 1, c + 1);
    }
  };
  if (r >= 0 && r <= n_ambient) choose(0, 0);
  return out;
}

}  // namespace

long long parabolic_coset_count(long long q, int d, const std::vector<int>& levi_roots) {
  // Gaussian-binomial product over the nested flag of cotype Delta \ I.
  std::vector<int> dims;  // subspace dimensions of the flag
  for (int i = 0; i < d; ++i)
    if (std::find(levi_roots.begin(), levi_roots.end(), i) == levi_roots.end())
      dims.push_back(i + 1);
  auto gauss = [&](int nn, int kk) {
    // [nn choose kk]_q by the product formula
    long long acc_n = 1, acc_d = 1;
    for (int t = 0; t < kk; ++t) {
      acc_n *= pow_ll(q, nn - t) - 1;
      acc_d *= pow_ll(q, t + 1) - 1;
    }
    return acc_n / acc_d;
  };
  long long total = 1;
  int upper = d + 1;
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) {
    total *= gauss(upper, *it);
    upper = *it;
  }
  return total;
}

SteinbergComplexResult steinberg_complex_homology(long long q, int d, int j) {
  if (j < 0 || j > d) throw std::invalid_argument("steinberg complex index out of range");
  long long p = 0;
  int k = 0;
  for (long long cand = 2; cand * cand <= q + 1; ++cand) {
    if (q % cand == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0) {
    p = q;
    k = 1;
  } else {
    long long t = q;
    while (t % p == 0) {
      t /= p;
      ++k;
    }
    if (t != 1) throw std::invalid_argument("q must be a prime power");
  }

  long long flags_bound = 1;
  for (int i = 2; i <= d + 1; ++i) flags_bound *= (pow_ll(q, i) - 1) / (q - 1);
  if (flags_bound > 100000)
    throw std::domain_error("coset spaces too large to enumerate");

  ZModRing fp(p, 1);
  ExtensionRing field = k == 1 ? ExtensionRing(fp, {fp.norm(-1), 1})  // t - 1: degree-1 modulus
                               : ExtensionRing::unramified_quadratic(fp);
  if (k > 2) throw std::invalid_argument("prime powers beyond squares are not supported");

  std::vector<std::vector<FieldSpace>> by_dim(static_cast<size_t>(d + 2));
  for (int r = 1; r <= d; ++r) by_dim[static_cast<size_t>(r)] = subspaces_of_dim(field, d + 1, r);

  std::vector<int> i_min;  // constraint roots
  for (int t = 0; t <= d - j - 1; ++t) i_min.push_back(t);

  // positions: subsets I with i_min <= I <= Delta, graded by |I| - |i_min|
  std::vector<int> optional_roots;
  for (int t = 0; t < d; ++t)
    if (std::find(i_min.begin(), i_min.end(), t) == i_min.end()) optional_roots.push_back(t);
  int positions = static_cast<int>(optional_roots.size()) + 1;

  // basis per position: (I, flag); flags are chains over Delta \ I
  struct Cell {
    std::vector<int> extra;        // roots added to i_min, sorted
    std::vector<int> space_index;  // per flag component, index into by_dim[dim]
  };
  std::vector<std::vector<Cell>> basis(static_cast<size_t>(positions));
  std::vector<std::map<std::pair<std::vector<int>, std::vector<int>>, int>> index(
      static_cast<size_t>(positions));

  std::function<void(std::vector<int>&, size_t)> subsets = [&](std::vector<int>& extra, size_t from) {
    // flags of cotype Delta \ (i_min + extra)
    std::vector<int> flag_dims;
    for (int t = 0; t < d; ++t) {
      bool inside = std::find(i_min.begin(), i_min.end(), t) != i_min.end() ||
                    std::find(extra.begin(), extra.end(), t) != extra.end();
      if (!inside) flag_dims.push_back(t + 1);
    }
    int pos = static_cast<int>(extra.size());
    std::vector<int> chosen;
    std::function<void(size_t)> build = [&](size_t level) {
      if (level == flag_dims.size()) {
        Cell c{extra, chosen};
        index[static_cast<size_t>(pos)][{c.extra, c.space_index}] =
            static_cast<int>(basis[static_cast<size_t>(pos)].size());
        basis[static_cast<size_t>(pos)].push_back(c);
        return;
      }
      int dim = flag_dims[level];
      const auto& pool = by_dim[static_cast<size_t>(dim)];
      for (size_t si = 0; si < pool.size(); ++si) {
        if (level > 0) {
          int prev_dim = flag_dims[level - 1];
          const FieldSpace& prev = by_dim[static_cast<size_t>(prev_dim)][static_cast<size_t>(
              chosen[level - 1])];
          if (!pool[si].contains(prev)) continue;
        }
        chosen.push_back(static_cast<int>(si));
        build(level + 1);
        chosen.pop_back();
      }
    };
    build(0);
    for (size_t t = from; t < optional_roots.size(); ++t) {
      extra.push_back(optional_roots[t]);
      subsets(extra, t + 1);
      extra.pop_back();
    }
  };
  std::vector<int> extra;
  subsets(extra, 0);

  // boundary: position p -> p+1, forget the flag component of the added root
  std::vector<SparseColumns> deltas(static_cast<size_t>(positions));  // deltas[p]: from p to p+1
  for (int pos = 0; pos + 1 < positions; ++pos) {
    SparseColumns cols(basis[static_cast<size_t>(pos)].size());
    for (size_t ci = 0; ci < basis[static_cast<size_t>(pos)].size(); ++ci) {
      const Cell& cell = basis[static_cast<size_t>(pos)][ci];
      std::vector<int> flag_dims;
      for (int t = 0; t < d; ++t) {
        bool inside = std::find(i_min.begin(), i_min.end(), t) != i_min.end() ||
                      std::find(cell.extra.begin(), cell.extra.end(), t) != cell.extra.end();
        if (!inside) flag_dims.push_back(t + 1);
      }
      for (size_t oi = 0; oi < optional_roots.size(); ++oi) {
        int alpha = optional_roots[oi];
        if (std::find(cell.extra.begin(), cell.extra.end(), alpha) != cell.extra.end()) continue;
        // sign: position of alpha among the optional roots not yet in I
        int sgn_pos = 0;
        for (int b : optional_roots) {
          if (b == alpha) break;
          if (std::find(cell.extra.begin(), cell.extra.end(), b) == cell.extra.end()) ++sgn_pos;
        }
        std::vector<int> new_extra = cell.extra;
        new_extra.insert(std::lower_bound(new_extra.begin(), new_extra.end(), alpha), alpha);
        std::vector<int> new_flag;
        for (size_t lv = 0; lv < flag_dims.size(); ++lv)
          if (flag_dims[lv] != alpha + 1) new_flag.push_back(cell.space_index[lv]);
        int target = index[static_cast<size_t>(pos + 1)].at({new_extra, new_flag});
        cols[ci].push_back({target, sgn_pos % 2 == 0 ? 1 : -1});
      }
    }
    deltas[static_cast<size_t>(pos)] = std::move(cols);
  }

  // composite of consecutive boundaries must vanish
  for (int pos = 0; pos + 2 < positions; ++pos) {
    for (const auto& col : deltas[static_cast<size_t>(pos)]) {
      std::map<int, long long> acc;
      for (auto [mid, v] : col)
        for (auto [r, w] : deltas[static_cast<size_t>(pos + 1)][static_cast<size_t>(mid)]) {
          acc[r] += v * w;
          if (acc[r] == 0) acc.erase(r);
        }
      if (!acc.empty()) throw std::logic_error("coset complex composite is nonzero");
    }
  }

  SteinbergComplexResult res;
  std::vector<long long> ranks(static_cast<size_t>(positions), 0);
  for (int pos = 0; pos + 1 < positions; ++pos)
    ranks[static_cast<size_t>(pos)] = rational_rank(
        static_cast<int>(basis[static_cast<size_t>(pos + 1)].size()), deltas[static_cast<size_t>(pos)]);
  for (int pos = 0; pos < positions; ++pos) {
    long long dim = static_cast<long long>(basis[static_cast<size_t>(pos)].size());
    res.dims.push_back(dim);
    long long out_rank = pos + 1 < positions ? ranks[static_cast<size_t>(pos)] : 0;
    long long in_rank = pos > 0 ? ranks[static_cast<size_t>(pos - 1)] : 0;
    res.homology.push_back(dim - out_rank - in_rank);
  }
  return res;
}

}  // namespace drinfilt
