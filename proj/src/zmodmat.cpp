#include "zmodmat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drinfilt {

ZModRing::ZModRing(long long p_, int n_) : p(p_), n(n_) {
  if (p < 2 || n < 1) throw std::invalid_argument("bad ring parameters");
  for (long long q = 2; q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("p must be prime");
  modulus = 1;
  for (int i = 0; i < n; ++i) {
    modulus *= p;
    if (modulus > (1LL << 40)) throw std::invalid_argument("modulus too large");
  }
}

long long ZModRing::norm(long long x) const {
  long long r = x % modulus;
  return r < 0 ? r + modulus : r;
}

long long ZModRing::inv_unit(long long x) const {
  x = norm(x);
  if (!is_unit(x)) throw std::domain_error("not a unit");
  long long r = 1, b = x;
  long long e = modulus / p * (p - 1) - 1;  // group order minus one
  while (e > 0) {
    if (e & 1) r = r * b % modulus;
    b = b * b % modulus;
    e >>= 1;
  }
  return r;
}

std::pair<int, long long> ZModRing::unit_decompose(long long x) const {
  x = norm(x);
  if (x == 0) throw std::domain_error("cannot decompose zero");
  int e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return {e, x};
}

namespace {

using Row = std::vector<long long>;

void row_normalize(const ZModRing& ring, Row& r) {
  for (auto& x : r) x = ring.norm(x);
}

bool row_zero(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

int leftmost(const Row& r) {
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return static_cast<int>(i);
  return -1;
}

void row_submul(const ZModRing& ring, Row& r, long long q, const Row& s) {
  for (size_t i = 0; i < r.size(); ++i) r[i] = ring.norm(r[i] - q * s[i]);
}

}  // namespace

std::vector<std::vector<long long>> howell_form(const ZModRing& ring,
                                                std::vector<std::vector<long long>> mat) {
  std::vector<Row> work;
  size_t width = 0;
  for (auto& r : mat) {
    width = std::max(width, r.size());
    row_normalize(ring, r);
    if (!row_zero(r)) work.push_back(r);
  }
  std::vector<Row> result;
  std::vector<int> pivot_col, pivot_val;

  for (int col = 0; col < static_cast<int>(width); ++col) {
    int best = -1, best_e = ring.n + 1;
    for (size_t i = 0; i < work.size(); ++i) {
      if (leftmost(work[i]) != col) continue;
      int e = ring.unit_decompose(work[i][static_cast<size_t>(col)]).first;
      if (e < best_e) {
        best_e = e;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) continue;
    Row piv = work[static_cast<size_t>(best)];
    work.erase(work.begin() + best);
    auto [e, u] = ring.unit_decompose(piv[static_cast<size_t>(col)]);
    long long uinv = ring.inv_unit(u);
    for (auto& x : piv) x = ring.norm(x * uinv);  // leading entry becomes p^e

    long long pe = 1;
    for (int t = 0; t < e; ++t) pe *= ring.p;
    for (auto& r : work) {
      if (r[static_cast<size_t>(col)] == 0) continue;
      auto [e2, u2] = ring.unit_decompose(r[static_cast<size_t>(col)]);
      long long q = u2;
      for (int t = 0; t < e2 - e; ++t) q = ring.norm(q * ring.p);
      row_submul(ring, r, q, piv);
    }
    // annihilator shadow of a torsion pivot re-enters with a later pivot
    if (e > 0) {
      Row shadow = piv;
      long long c = ring.modulus / pe;
      for (auto& x : shadow) x = ring.norm(x * c);
      if (!row_zero(shadow)) work.push_back(shadow);
    }
    result.push_back(piv);
    pivot_col.push_back(col);
    pivot_val.push_back(static_cast<int>(pe));
    work.erase(std::remove_if(work.begin(), work.end(), row_zero), work.end());
  }

  // reduce entries above each pivot modulo the pivot value
  for (size_t j = 0; j < result.size(); ++j) {
    for (size_t i = 0; i < j; ++i) {
      long long a = result[i][static_cast<size_t>(pivot_col[j])];
      long long q = a / pivot_val[j];
      if (q != 0) row_submul(ring, result[i], q, result[j]);
    }
  }
  return result;
}

FiniteModule FiniteModule::span(const ZModRing& ring, int ambient_rank,
                                const std::vector<std::vector<long long>>& generators) {
  for (const auto& g : generators)
    if (static_cast<int>(g.size()) != ambient_rank)
      throw std::invalid_argument("generator length mismatch");
  FiniteModule m;
  m.ring = ring;
  m.ambient_rank = ambient_rank;
  std::vector<std::vector<long long>> gens = generators;
  if (gens.empty()) gens.push_back(std::vector<long long>(static_cast<size_t>(ambient_rank), 0));
  m.rows = howell_form(ring, gens);
  return m;
}

FiniteModule FiniteModule::zero(const ZModRing& ring, int ambient_rank) {
  return span(ring, ambient_rank, {});
}

FiniteModule FiniteModule::ambient(const ZModRing& ring, int ambient_rank) {
  std::vector<std::vector<long long>> id;
  for (int i = 0; i < ambient_rank; ++i) {
    std::vector<long long> r(static_cast<size_t>(ambient_rank), 0);
    r[static_cast<size_t>(i)] = 1;
    id.push_back(r);
  }
  return span(ring, ambient_rank, id);
}

bool FiniteModule::contains(const std::vector<long long>& v) const {
  std::vector<long long> r = v;
  for (auto& x : r) x = ring.norm(x);
  for (const auto& row : rows) {
    int c = leftmost(row);
    if (c < 0) continue;
    long long a = r[static_cast<size_t>(c)];
    if (a == 0) continue;
    auto [e, u] = ring.unit_decompose(row[static_cast<size_t>(c)]);
    auto [e2, u2] = ring.unit_decompose(a);
    if (e2 < e) return false;
    long long q = u2 * ring.inv_unit(u) % ring.modulus;
    for (int t = 0; t < e2 - e; ++t) q = ring.norm(q * ring.p);
    row_submul(ring, r, q, row);
  }
  return row_zero(r);
}

bool FiniteModule::contains(const FiniteModule& other) const {
  for (const auto& row : other.rows)
    if (!contains(row)) return false;
  return true;
}

bool FiniteModule::is_ambient() const { return size() == [&] {
  long long s = 1;
  for (int i = 0; i < ambient_rank; ++i) s *= ring.modulus;
  return s;
}(); }

long long FiniteModule::size() const {
  long long s = 1;
  for (const auto& row : rows) {
    int c = leftmost(row);
    auto [e, u] = ring.unit_decompose(row[static_cast<size_t>(c)]);
    long long pe = 1;
    for (int t = 0; t < e; ++t) pe *= ring.p;
    s *= ring.modulus / pe;
  }
  return s;
}

int FiniteModule::reduction_rank() const {
  // rank over F_p of the rows reduced mod p
  std::vector<std::vector<long long>> red;
  for (const auto& row : rows) {
    std::vector<long long> r(row.size());
    for (size_t i = 0; i < row.size(); ++i) r[i] = row[i] % ring.p;
    red.push_back(r);
  }
  int rank = 0;
  size_t r = 0;
  for (size_t col = 0; col < static_cast<size_t>(ambient_rank) && r < red.size(); ++col) {
    size_t sel = r;
    while (sel < red.size() && red[sel][col] == 0) ++sel;
    if (sel == red.size()) continue;
    std::swap(red[r], red[sel]);
    long long inv = 1;
    for (long long x = 1; x < ring.p; ++x)
      if (x * red[r][col] % ring.p == 1) inv = x;
    for (size_t i = 0; i < red.size(); ++i) {
      if (i == r || red[i][col] == 0) continue;
      long long f = red[i][col] * inv % ring.p;
      for (size_t c2 = 0; c2 < red[i].size(); ++c2)
        red[i][c2] = ((red[i][c2] - f * red[r][c2]) % ring.p + ring.p) % ring.p;
    }
    ++rank;
    ++r;
  }
  return rank;
}

int FiniteModule::min_generators() const {
  // dim_{F_p} U/pU from the index [U : pU]
  long long u = size();
  long long pu = scaled(ring.p).size();
  int k = 0;
  while (u > pu) {
    u /= ring.p;
    ++k;
  }
  return k;
}

FiniteModule FiniteModule::sum(const FiniteModule& other) const {
  std::vector<std::vector<long long>> gens = rows;
  gens.insert(gens.end(), other.rows.begin(), other.rows.end());
  return span(ring, ambient_rank, gens);
}

FiniteModule FiniteModule::intersect(const FiniteModule& other) const {
  // enumerate the smaller module and keep the elements of the other
  const FiniteModule& small = size() <= other.size() ? *this : other;
  const FiniteModule& big = size() <= other.size() ? other : *this;
  std::vector<std::vector<long long>> kept;
  std::vector<long long> combo(small.rows.size(), 0);
  std::vector<long long> v(static_cast<size_t>(ambient_rank), 0);
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == small.rows.size()) {
      std::vector<long long> x(static_cast<size_t>(ambient_rank), 0);
      for (size_t r = 0; r < small.rows.size(); ++r)
        for (int c = 0; c < ambient_rank; ++c)
          x[static_cast<size_t>(c)] =
              ring.norm(x[static_cast<size_t>(c)] + combo[r] * small.rows[r][static_cast<size_t>(c)]);
      if (big.contains(x)) kept.push_back(x);
      return;
    }
    for (long long c = 0; c < ring.modulus; ++c) {
      combo[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  (void)v;
  return span(ring, ambient_rank, kept);
}

FiniteModule FiniteModule::scaled(long long c) const {
  std::vector<std::vector<long long>> gens;
  for (const auto& row : rows) {
    std::vector<long long> r(row.size());
    for (size_t i = 0; i < row.size(); ++i) r[i] = ring.norm(row[i] * c);
    gens.push_back(r);
  }
  return span(ring, ambient_rank, gens);
}

bool FiniteModule::operator<(const FiniteModule& o) const {
  if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
  return rows < o.rows;
}

std::string FiniteModule::str() const {
  std::ostringstream os;
  os << '<';
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) os << "; ";
    os << '(';
    for (size_t c = 0; c < rows[i].size(); ++c) {
      if (c) os << ',';
      os << rows[i][c];
    }
    os << ')';
  }
  os << '>';
  return os.str();
}

}  // namespace drinfilt
