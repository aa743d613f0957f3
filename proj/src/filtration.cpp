#include "filtration.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace drinfilt {

BlockSwap::BlockSwap(int d_, int i_) : d(d_), i(i_) {
  if (d < 1 || i < 0 || i > d + 1) throw std::invalid_argument("bad block swap index");
}

Perm BlockSwap::perm() const {
  Perm p;
  p.image.resize(static_cast<size_t>(d + 1));
  for (int c = 0; c <= d; ++c)
    p.image[static_cast<size_t>(c)] = c <= d - i ? i + c : c - (d + 1 - i);
  return p;
}

Perm BlockSwap::inverse_perm() const { return perm().inverse(); }

ModuleDescriptor ModuleDescriptor::make(std::vector<IrrepDescriptor> summands) {
  ModuleDescriptor m;
  m.summands = std::move(summands);
  for (const auto& s : m.summands) m.total_dimension += s.multiplicity * s.dimension;
  return m;
}

Character ModuleDescriptor::character() const {
  if (summands.empty()) return Character(0);
  Character chi(summands.front().shape.total());
  for (const auto& s : summands) {
    // blockwise product of irreducible characters
    Character acc = Character::single(Weight(std::vector<long long>{}), 1);
    for (const auto& bw : s.block_weights) {
      Character blk = irrep_character(bw);
      Character next(acc.n + blk.n);
      for (const auto& [u, mu] : acc.terms)
        for (const auto& [v, mv] : blk.terms) next.add_term(Weight::concat(u, v), mu * mv);
      acc = std::move(next);
    }
    for (const auto& [w, m] : acc.terms) chi.add_term(w, m * s.multiplicity);
  }
  return chi;
}

Weight step_highest_weight(int j, int d, const Weight& lambda) {
  if (j < 1 || j > d) throw std::invalid_argument("step index out of range");
  BottIndex bi = find_bott_index(d, lambda);
  Weight mu = j <= bi.i0 ? dot_action(WeylWord(d, j - 1), lambda) : dot_action(WeylWord(d, j), lambda);
  if (!mu.slice(0, j).dominant() || !mu.slice(j, d + 1).dominant())
    throw std::logic_error("step weight not blockwise dominant; unreachable");
  return mu;
}

namespace {

/// All nonnegative vectors of the given length with prescribed sum, the
/// entries from position 2 on bounded by gaps[idx]; the first entry is
/// unconstrained.
void enumerate_bounded(int len, long long total, const std::vector<long long>& gaps,
                       std::vector<long long>& cur, size_t pos,
                       const std::function<void(const std::vector<long long>&)>& emit) {
  if (pos == static_cast<size_t>(len)) {
    if (total == 0) emit(cur);
    return;
  }
  long long cap = total;
  if (pos >= 1) cap = std::min(cap, gaps[pos - 1]);
  for (long long v = 0; v <= cap; ++v) {
    cur[pos] = v;
    enumerate_bounded(len, total - v, gaps, cur, pos + 1, emit);
  }
  cur[pos] = 0;
}

}  // namespace

std::set<Weight> step_weight_set_schubert(int j, int d, const Weight& lambda) {
  Weight mu = step_highest_weight(j, d, lambda);
  Weight mu1 = mu.slice(0, j);           // mu' in Z^j
  Weight mu2 = mu.slice(j, d + 1);       // mu'' in Z^{d-j+1}
  long long span = mu2[0] - mu2[mu2.length() - 1];  // |mu''|

  std::vector<long long> cgaps, dgaps;
  for (int t = 0; t + 1 < mu2.length(); ++t) cgaps.push_back(mu2[t] - mu2[t + 1]);
  for (int t = 1; t <= j - 1; ++t) dgaps.push_back(mu1[j - t - 1] - mu1[j - t]);  // d_{t+1} <= mu'_{j-t} - mu'_{j-t+1}

  std::set<Weight> out;
  for (long long k = 0; k <= span; ++k) {
    std::vector<std::vector<long long>> cs, ds;
    std::vector<long long> buf(static_cast<size_t>(mu2.length()), 0);
    enumerate_bounded(mu2.length(), k, cgaps, buf, 0,
                      [&](const std::vector<long long>& v) { cs.push_back(v); });
    buf.assign(static_cast<size_t>(j), 0);
    enumerate_bounded(j, k, dgaps, buf, 0,
                      [&](const std::vector<long long>& v) { ds.push_back(v); });
    for (const auto& c : cs)
      for (const auto& dv : ds) {
        if (c[0] != 0 && dv[0] != 0) continue;
        Weight left = mu1;
        for (int t = 0; t < j; ++t) left[t] -= dv[static_cast<size_t>(j - 1 - t)];  // subtract (d_j,...,d_1)
        Weight right = mu2;
        for (int t = 0; t < mu2.length(); ++t) right[t] += c[static_cast<size_t>(t)];
        out.insert(Weight::concat(left, right));
      }
  }
  return out;
}

std::set<Weight> step_weight_set(int j, int d, const Weight& lambda) {
  BlockSwap z(d, j);
  Perm zi = z.inverse_perm();
  std::set<Weight> out;
  for (const Weight& w : step_weight_set_schubert(j, d, lambda)) out.insert(zi.apply(w));
  return out;
}

ModuleDescriptor step_generating_module(int j, int d, const Weight& lambda) {
  LeviShape shape{d + 1 - j, j};
  std::vector<IrrepDescriptor> summands;
  for (const Weight& w : step_weight_set(j, d, lambda))
    summands.push_back(IrrepDescriptor::make(shape, {w.slice(0, d + 1 - j), w.slice(d + 1 - j, d + 1)}));
  return ModuleDescriptor::make(std::move(summands));
}

namespace {

std::string steinberg_tag(const std::vector<int>& blocks) {
  std::ostringstream os;
  os << "v^G_P(";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) os << ",";
    os << blocks[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

FiltrationReport build_filtration_report(int d, const Weight& lambda) {
  FiltrationReport rep;
  rep.d = d;
  rep.lambda = lambda;
  rep.cohomology = bott_cohomology(d, lambda);
  rep.index = rep.cohomology.index;
  rep.floor_dimension =
      rep.cohomology.present() && *rep.cohomology.degree == 0 ? rep.cohomology.dimension : 0;
  for (int j = 1; j <= d; ++j) {
    SubquotientDescriptor sq;
    sq.j = j;
    sq.parabolic = LeviShape{d + 1 - j, j};
    if (rep.cohomology.present() && *rep.cohomology.degree == j) {
      AlgebraicPart alg;
      alg.parabolic_blocks.push_back(d + 1 - j);
      for (int t = 0; t < j; ++t) alg.parabolic_blocks.push_back(1);
      alg.coefficient_dimension = rep.cohomology.dimension;
      alg.tag = steinberg_tag(alg.parabolic_blocks);
      sq.algebraic_part = alg;
    }
    sq.analytic_part.module_index = d - j;
    sq.analytic_part.module = step_generating_module(j, d, lambda);
    sq.analytic_part.steinberg_tag = "St_" + std::to_string(j);
    sq.analytic_part.steinberg_infinite = j >= 2;
    sq.analytic_part.kernel_index = d - j;
    rep.subquotients.push_back(std::move(sq));
  }
  return rep;
}

}  // namespace drinfilt
