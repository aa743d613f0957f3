#include "bott.hpp"

#include <functional>
#include <stdexcept>

namespace drinfilt {

long long weyl_dim(const Weight& mu) {
  if (!mu.dominant()) throw std::domain_error("weyl_dim: weight not dominant: " + mu.str());
  int n = mu.length();
  long long num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= mu[i] - mu[j] + j - i;
      den *= j - i;
      if (num % den == 0) {  // keep intermediates small
        num /= den;
        den = 1;
      }
    }
  return num / den;
}

Character irrep_character(const Weight& mu) {
  if (!mu.dominant()) throw std::domain_error("irrep_character: weight not dominant: " + mu.str());
  int n = mu.length();
  long long shift = mu[n - 1];
  std::vector<long long> shape(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) shape[static_cast<size_t>(i)] = mu[i] - shift;

  Character chi(n);
  // Semistandard tableaux of the normalized shape with entries in 1..n; the
  // content plus the det-shift is the weight.
  std::vector<std::vector<int>> rows(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rows[static_cast<size_t>(i)].resize(static_cast<size_t>(shape[static_cast<size_t>(i)]));

  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == n) {
      Weight w = Weight::zero(n);
      for (int i = 0; i < n; ++i)
        for (int v : rows[static_cast<size_t>(i)]) w[v - 1] += 1;
      for (int i = 0; i < n; ++i) w[i] += shift;
      chi.add_term(w, 1);
      return;
    }
    auto& row = rows[static_cast<size_t>(r)];
    if (c == static_cast<int>(row.size())) {
      fill(r + 1, 0);
      return;
    }
    int lo = r + 1;  // columns strictly increase
    if (r > 0 && c < static_cast<int>(rows[static_cast<size_t>(r - 1)].size()))
      lo = std::max(lo, rows[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
    if (c > 0) lo = std::max(lo, row[static_cast<size_t>(c - 1)]);  // rows weakly increase
    for (int v = lo; v <= n; ++v) {
      row[static_cast<size_t>(c)] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return chi;
}

CohomologyResult bott_cohomology(int d, const Weight& lambda) {
  CohomologyResult res;
  res.index = find_bott_index(d, lambda);
  if (res.index.kind == BottCase::dominant_regular) {
    res.degree = res.index.i0;
    res.highest_weight = dot_action(WeylWord(d, res.index.i0), lambda);
    res.dimension = weyl_dim(*res.highest_weight);
  }
  return res;
}

std::vector<std::pair<Weight, long long>> decompose_character(const Character& chi) {
  std::vector<std::pair<Weight, long long>> out;
  std::map<Weight, long long> rest = chi.terms;
  while (!rest.empty()) {
    // Lexicographically maximal weight; for a genuine character this is the
    // highest weight of some constituent.
    auto it = std::prev(rest.end());
    Weight top = it->first;
    long long mult = it->second;
    if (mult < 0 || !top.dominant())
      throw std::domain_error("not a character: leading term " + top.str());
    out.emplace_back(top, mult);
    Character piece = irrep_character(top);
    for (const auto& [w, m] : piece.terms) {
      long long& v = rest[w];
      v -= mult * m;
      if (v == 0) rest.erase(w);
    }
  }
  return out;
}

}  // namespace drinfilt
