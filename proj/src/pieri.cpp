#include "pieri.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "bott.hpp"

namespace drinfilt {

int LeviShape::total() const { return std::accumulate(blocks.begin(), blocks.end(), 0); }

IrrepDescriptor IrrepDescriptor::make(LeviShape shape, std::vector<Weight> block_weights,
                                      long long multiplicity) {
  if (shape.blocks.size() != block_weights.size())
    throw std::invalid_argument("block count mismatch");
  IrrepDescriptor v;
  v.shape = std::move(shape);
  v.block_weights = std::move(block_weights);
  v.multiplicity = multiplicity;
  v.dimension = 1;
  for (size_t b = 0; b < v.block_weights.size(); ++b) {
    if (v.block_weights[b].length() != v.shape.blocks[b])
      throw std::invalid_argument("block weight length mismatch");
    if (!v.block_weights[b].dominant())
      throw std::domain_error("block weight not dominant: " + v.block_weights[b].str());
    v.dimension *= weyl_dim(v.block_weights[b]);
  }
  return v;
}

Weight IrrepDescriptor::weight() const {
  Weight w;
  for (const auto& b : block_weights) w = Weight::concat(w, b);
  return w;
}

std::set<Weight> pieri_decompose(long long k, const Weight& nu, int n) {
  if (nu.length() != n) throw std::invalid_argument("weight length mismatch");
  if (!nu.dominant()) throw std::domain_error("pieri: weight not dominant: " + nu.str());
  if (k < 0) throw std::invalid_argument("pieri: k must be nonnegative");
  std::set<Weight> out;
  std::vector<long long> c(static_cast<size_t>(n), 0);
  std::function<void(int, long long)> rec = [&](int i, long long rest) {
    if (i == n) {
      if (rest == 0) {
        Weight w = nu;
        for (int t = 0; t < n; ++t) w[t] += c[static_cast<size_t>(t)];
        out.insert(w);
      }
      return;
    }
    long long cap = rest;
    if (i >= 1) cap = std::min(cap, nu[i - 1] - nu[i]);  // c_{i+1} <= nu_i - nu_{i+1}
    for (long long v = 0; v <= cap; ++v) {
      c[static_cast<size_t>(i)] = v;
      rec(i + 1, rest - v);
    }
    c[static_cast<size_t>(i)] = 0;
  };
  rec(0, k);
  return out;
}

std::set<Weight> dual_pieri_decompose(long long k, const Weight& mu, int n) {
  if (mu.length() != n) throw std::invalid_argument("weight length mismatch");
  if (!mu.dominant()) throw std::domain_error("dual pieri: weight not dominant: " + mu.str());
  std::set<Weight> out;
  for (const Weight& w : pieri_decompose(k, mu.dual(), n)) out.insert(w.dual());
  return out;
}

std::vector<IrrepDescriptor> levi_tensor_decompose(long long k, const IrrepDescriptor& v) {
  if (v.shape.blocks.size() != 2)
    throw std::invalid_argument("levi_tensor_decompose: shape must have two blocks");
  const int a = v.shape.blocks[0];
  const int b = v.shape.blocks[1];
  std::vector<IrrepDescriptor> out;
  for (const Weight& left : dual_pieri_decompose(k, v.block_weights[0], a))
    for (const Weight& right : pieri_decompose(k, v.block_weights[1], b))
      out.push_back(IrrepDescriptor::make(v.shape, {left, right}, v.multiplicity));
  return out;
}

}  // namespace drinfilt
