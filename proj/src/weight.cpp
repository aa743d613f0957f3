#include "weight.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drinfilt {

long long Weight::sum() const {
  return std::accumulate(entries.begin(), entries.end(), 0LL);
}

bool Weight::dominant() const {
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i] < entries[i + 1]) return false;
  return true;
}

long long Weight::pole_order() const {
  long long p = 0;
  for (long long e : entries)
    if (e < 0) p -= e;
  return p;
}

Weight Weight::operator+(const Weight& o) const {
  if (entries.size() != o.entries.size())
    throw std::invalid_argument("weight length mismatch");
  Weight r = *this;
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] += o.entries[i];
  return r;
}

Weight Weight::operator-(const Weight& o) const {
  if (entries.size() != o.entries.size())
    throw std::invalid_argument("weight length mismatch");
  Weight r = *this;
  for (size_t i = 0; i < entries.size(); ++i) r.entries[i] -= o.entries[i];
  return r;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (auto& e : r.entries) e = -e;
  return r;
}

bool Weight::operator<(const Weight& o) const {
  if (entries.size() != o.entries.size())
    return entries.size() < o.entries.size();
  return entries < o.entries;
}

Weight Weight::dual() const {
  Weight r = *this;
  std::reverse(r.entries.begin(), r.entries.end());
  for (auto& e : r.entries) e = -e;
  return r;
}

Weight Weight::slice(int from, int to) const {
  return Weight(std::vector<long long>(entries.begin() + from, entries.begin() + to));
}

Weight Weight::concat(const Weight& a, const Weight& b) {
  Weight r = a;
  r.entries.insert(r.entries.end(), b.entries.begin(), b.entries.end());
  return r;
}

std::string Weight::str() const { return str_split(-1); }

std::string Weight::str_split(int split) const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < length(); ++i) {
    if (i > 0) os << (i == split ? " | " : ",");
    os << entries[static_cast<size_t>(i)];
  }
  os << ')';
  return os.str();
}

RootSystem::RootSystem(int d_) : d(d_) {
  if (d < 1) throw std::invalid_argument("rank must be >= 1");
}

Weight RootSystem::root(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i > d || j > d)
    throw std::invalid_argument("bad root indices");
  Weight r = Weight::zero(d + 1);
  r[i] = 1;
  r[j] = -1;
  return r;
}

Weight RootSystem::simple_root(int i) const {
  if (i < 0 || i >= d) throw std::invalid_argument("bad simple root index");
  return root(i + 1, i);
}

std::vector<Weight> RootSystem::simple_roots() const {
  std::vector<Weight> out;
  for (int i = 0; i < d; ++i) out.push_back(simple_root(i));
  return out;
}

std::vector<Weight> RootSystem::all_roots() const {
  std::vector<Weight> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      if (i != j) out.push_back(root(i, j));
  return out;
}

Weight RootSystem::rho() const {
  Weight r = Weight::zero(d + 1);
  for (int i = 0; i <= d; ++i) r[i] = -i;
  return r;
}

Perm Perm::identity(int n) {
  Perm p;
  p.image.resize(static_cast<size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p = identity(n);
  std::swap(p.image[static_cast<size_t>(a)], p.image[static_cast<size_t>(b)]);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  if (size() != o.size()) throw std::invalid_argument("perm size mismatch");
  Perm r;
  r.image.resize(image.size());
  for (int i = 0; i < size(); ++i) r.image[static_cast<size_t>(i)] = (*this)(o(i));
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.image.resize(image.size());
  for (int i = 0; i < size(); ++i) r.image[static_cast<size_t>((*this)(i))] = i;
  return r;
}

Weight Perm::apply(const Weight& chi) const {
  if (chi.length() != size()) throw std::invalid_argument("weight/perm length mismatch");
  Perm inv = inverse();
  Weight r = chi;
  for (int a = 0; a < size(); ++a) r[a] = chi[inv(a)];
  return r;
}

WeylWord::WeylWord(int d_, int i_) : d(d_), i(i_) {
  if (d < 1 || i < 0 || i > d) throw std::invalid_argument("bad Weyl word index");
}

Perm WeylWord::perm() const {
  Perm w = Perm::identity(d + 1);
  for (int k = 1; k <= i; ++k)  // w_i = s_i ... s_1, rightmost applied first
    w = Perm::transposition(d + 1, k - 1, k) * w;
  return w;
}

Weight dot_action(const Perm& w, const Weight& chi) {
  if (chi.length() != w.size()) throw std::invalid_argument("weight length mismatch");
  RootSystem rs(w.size() - 1);
  return w.apply(chi + rs.rho()) - rs.rho();
}

Weight dot_action(const WeylWord& w, const Weight& chi) {
  if (chi.length() != w.d + 1) throw std::invalid_argument("weight length mismatch");
  return dot_action(w.perm(), chi);
}

bool levi_dominant_1d(const Weight& lambda) {
  for (int i = 1; i + 1 < lambda.length(); ++i)
    if (lambda[i] < lambda[i + 1]) return false;
  return true;
}

void require_levi_dominant_1d(int d, const Weight& lambda) {
  if (lambda.length() != d + 1)
    throw std::invalid_argument("weight must have length d+1");
  if (!levi_dominant_1d(lambda))
    throw std::domain_error("weight is not L_(1,d)-dominant: " + lambda.str());
}

BottIndex find_bott_index(int d, const Weight& lambda) {
  require_levi_dominant_1d(d, lambda);
  for (int i = 0; i <= d; ++i) {
    if (dot_action(WeylWord(d, i), lambda).dominant()) return {i, BottCase::dominant_regular};
  }
  // No dominant member: lambda + rho has a repeated entry, w_i * lambda =
  // w_{i+1} * lambda exactly when lambda_0 + i = lambda_{i+1} - 1.
  for (int i = 0; i < d; ++i) {
    if (dot_action(WeylWord(d, i), lambda) == dot_action(WeylWord(d, i + 1), lambda))
      return {i, BottCase::degenerate};
  }
  throw std::logic_error("no dominant member and no collision; unreachable");
}

DominanceOrder dominance_compare(const Weight& mu, const Weight& nu) {
  if (mu.length() != nu.length()) throw std::invalid_argument("weight length mismatch");
  if (mu.sum() != nu.sum()) return DominanceOrder::incomparable;
  bool ge = true, le = true;
  long long prefix = 0;
  for (int i = 0; i < mu.length(); ++i) {
    prefix += mu[i] - nu[i];
    if (prefix > 0) le = false;
    if (prefix < 0) ge = false;
  }
  if (ge && le) return DominanceOrder::equal;
  if (ge) return DominanceOrder::greater;
  if (le) return DominanceOrder::less;
  return DominanceOrder::incomparable;
}

std::string to_string(DominanceOrder o) {
  switch (o) {
    case DominanceOrder::greater: return "greater";
    case DominanceOrder::less: return "less";
    case DominanceOrder::equal: return "equal";
    case DominanceOrder::incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(BottCase c) {
  return c == BottCase::dominant_regular ? "dominant-regular" : "degenerate";
}

}  // namespace drinfilt
