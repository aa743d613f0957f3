#include "localcoh.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "bott.hpp"

namespace drinfilt {

long long minimal_pole_order(int d, int j, long long r) {
  return std::max<long long>(d - j, -r);
}

LaurentModule LaurentModule::support_model(int d, int j, long long r, long long order_bound) {
  if (j < 0 || j > d - 1) throw std::invalid_argument("support index out of range");
  LaurentModule m;
  m.d = d;
  m.twist = r;
  m.nonneg.assign(static_cast<size_t>(d + 1), false);
  for (int c = 0; c <= j; ++c) m.nonneg[static_cast<size_t>(c)] = true;
  m.pole_cap = order_bound <= 0 ? -1 : minimal_pole_order(d, j, r) + order_bound - 1;
  return m;
}

bool LaurentModule::in_pattern(const Weight& k) const {
  if (k.length() != d + 1) return false;
  for (int c = 0; c <= d; ++c) {
    if (nonneg[static_cast<size_t>(c)] && k[c] < 0) return false;
    if (!nonneg[static_cast<size_t>(c)] && k[c] >= 0) return false;
  }
  return true;
}

bool LaurentModule::contains(const Weight& k) const {
  return in_pattern(k) && k.sum() == twist && k.pole_order() <= pole_cap;
}

std::vector<Weight> LaurentModule::basis() const {
  std::vector<Weight> out;
  if (pole_cap < 0) return out;
  // Distribute the pole budget over the negative coordinates, then the
  // remaining degree over the nonnegative ones.
  std::vector<int> negc, posc;
  for (int c = 0; c <= d; ++c) (nonneg[static_cast<size_t>(c)] ? posc : negc).push_back(c);
  Weight k = Weight::zero(d + 1);
  std::function<void(size_t, long long)> fill_pos = [&](size_t pi, long long rest) {
    if (pi == posc.size()) {
      if (rest == 0) out.push_back(k);
      return;
    }
    if (pi + 1 == posc.size()) {
      k[posc[pi]] = rest;
      out.push_back(k);
      k[posc[pi]] = 0;
      return;
    }
    for (long long v = 0; v <= rest; ++v) {
      k[posc[pi]] = v;
      fill_pos(pi + 1, rest - v);
    }
    k[posc[pi]] = 0;
  };
  std::function<void(size_t, long long)> fill_neg = [&](size_t ni, long long budget) {
    if (ni == negc.size()) {
      long long pole = 0;
      for (int c : negc) pole -= k[c];
      long long pos_total = twist + pole;
      if (pos_total < 0) return;
      if (posc.empty()) {
        if (pos_total == 0) out.push_back(k);
        return;
      }
      fill_pos(0, pos_total);
      return;
    }
    long long reserve = static_cast<long long>(negc.size() - ni - 1);  // later ones need >= 1 each
    for (long long v = 1; v + reserve <= budget; ++v) {
      k[negc[ni]] = -v;
      fill_neg(ni + 1, budget - v);
    }
    k[negc[ni]] = 0;
  };
  if (negc.empty()) {
    if (twist >= 0) fill_pos(0, twist);
  } else {
    fill_neg(0, pole_cap);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Character LaurentModule::character() const {
  Character chi(d + 1, Region::pole_bound(pole_cap));
  for (const Weight& k : basis()) chi.add_term(k, 1);
  return chi;
}

Character local_cohomology_character(int d, int j, long long r, long long order_bound) {
  return LaurentModule::support_model(d, j, r, order_bound).character();
}

Character direct_limit_character(int d, int j, long long r, int n_max) {
  if (n_max < 2) throw std::invalid_argument("direct limit needs n_max >= 2");
  if (j < -1 || j > d - 1) throw std::invalid_argument("support index out of range");
  std::vector<int> quotiented;  // coordinates with the X^n relation
  for (int c = j + 1; c <= d; ++c) quotiented.push_back(c);
  const long long q = static_cast<long long>(quotiented.size());

  // Stage n: monomial basis of (S(r)/(X_c^n : c quotiented))^0 in twisted
  // degree zero, i.e. exponent vectors a >= 0 with a_c <= n-1 on the
  // quotiented coordinates and total degree n*q + r.
  auto stage = [&](int n) {
    std::vector<Weight> basis;
    Weight a = Weight::zero(d + 1);
    std::function<void(int, long long)> rec = [&](int c, long long rest) {
      if (c == d + 1) {
        if (rest == 0) basis.push_back(a);
        return;
      }
      bool lim = std::find(quotiented.begin(), quotiented.end(), c) != quotiented.end();
      long long cap = lim ? std::min<long long>(rest, n - 1) : rest;
      for (long long v = 0; v <= cap; ++v) {
        a[c] = v;
        rec(c + 1, rest - v);
      }
      a[c] = 0;
    };
    long long total = static_cast<long long>(n) * q + r;
    if (total >= 0) rec(0, total);
    return basis;
  };

  // The generalized fraction [a] / (prod X_c^n) carries the Laurent weight
  // a - n on the quotiented coordinates; the transition map multiplies the
  // numerator by prod X_c and is injective on monomials.
  auto laurent_weight = [&](const Weight& a, int n) {
    Weight k = a;
    for (int c : quotiented) k[c] -= n;
    return k;
  };

  std::set<Weight> limit;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Weight> b = stage(n);
    if (n < n_max) {
      std::vector<Weight> nxt = stage(n + 1);
      std::set<Weight> nxtset(nxt.begin(), nxt.end());
      for (const Weight& a : b) {
        Weight image = a;
        for (int c : quotiented) image[c] += 1;
        if (!nxtset.count(image))
          throw std::logic_error("transition map leaves the next stage; unreachable");
        if (laurent_weight(a, n) != laurent_weight(image, n + 1))
          throw std::logic_error("transition map changes the Laurent weight; unreachable");
      }
    }
    for (const Weight& a : b) limit.insert(laurent_weight(a, n));
  }

  Character chi(d + 1, Region::pole_bound(n_max - 1));
  for (const Weight& k : limit) chi.add_term(k, 1);
  chi.prune();
  return chi;
}

LieImage lie_derivation_apply(const LaurentModule& m, const LieGenerator& g, const Weight& k) {
  if (g.i == g.j || g.i < 0 || g.j < 0 || g.i > m.d || g.j > m.d)
    throw std::invalid_argument("bad Lie generator");
  if (!m.contains(k)) throw std::domain_error("monomial outside the certified module: " + k.str());
  LieImage out;
  out.coeff = k[g.j];
  if (out.coeff == 0) return out;
  Weight t = k;
  t[g.i] += 1;
  t[g.j] -= 1;
  if (!m.in_pattern(t)) {  // the class is zero in the local cohomology module
    out.coeff = 0;
    return out;
  }
  out.target = t;
  out.escaped = t.pole_order() > m.pole_cap;
  return out;
}

Character bundle_fibre_character(int d, const Weight& lambda) {
  require_levi_dominant_1d(d, lambda);
  Character tail = irrep_character(lambda.slice(1, d + 1));
  Character chi(d + 1);
  for (const auto& [w, mult] : tail.terms)
    chi.add_term(Weight::concat(Weight{lambda[0]}, w), mult);
  return chi;
}

Character levi_irrep_character(const Weight& mu, int split) {
  Character left = irrep_character(mu.slice(0, split));
  Character right = irrep_character(mu.slice(split, mu.length()));
  Character chi(mu.length());
  for (const auto& [u, mu_] : left.terms)
    for (const auto& [v, mv] : right.terms) chi.add_term(Weight::concat(u, v), mu_ * mv);
  return chi;
}

Character ring_character(int n, const std::vector<Weight>& generators, long long max_degree,
                         const std::vector<long long>& grading) {
  for (const Weight& g : generators) {
    long long s = 0;
    for (int c = 0; c < n; ++c) s += grading[static_cast<size_t>(c)] * g[c];
    if (s != 1) throw std::invalid_argument("grading must take value 1 on generators");
  }
  Character chi(n, Region::upper_band(grading, max_degree));
  Weight cur = Weight::zero(n);
  std::function<void(size_t, long long)> rec = [&](size_t gi, long long rest) {
    if (gi == generators.size()) {
      chi.add_term(cur, 1);
      return;
    }
    Weight save = cur;
    for (long long v = 0; v <= rest; ++v) {
      rec(gi + 1, rest - v);
      cur = cur + generators[gi];
    }
    cur = save;
  };
  rec(0, max_degree);
  chi.prune();
  return chi;
}

Character cousin_cell_character(int d, int i, const Weight& lambda, long long degree_bound) {
  require_levi_dominant_1d(d, lambda);
  if (i < 0 || i > d) throw std::invalid_argument("cell index out of range");
  RootSystem rs(d);
  Perm wi = WeylWord(d, i).perm();
  Weight base = dot_action(WeylWord(d, i), Weight::zero(d + 1));

  std::vector<Weight> dirs;  // one shift direction per generator of the cell
  for (int k = 0; k < i; ++k) dirs.push_back(-rs.root(k, i));
  for (int m = i + 1; m <= d; ++m) dirs.push_back(-rs.root(i, m));

  Character fibre = bundle_fibre_character(d, lambda);
  std::vector<Weight> fibre_shifts;
  for (const auto& [v, mult] : fibre.terms) fibre_shifts.push_back(wi.apply(v));

  // Grading functional: +1 on every shift direction, so the total shift
  // degree of a weight is determined once the fibre weight is fixed.
  std::vector<long long> phi(static_cast<size_t>(d + 1), 0);
  for (int k = 0; k < i; ++k) phi[static_cast<size_t>(k)] = -1;
  for (int m = i + 1; m <= d; ++m) phi[static_cast<size_t>(m)] = 1;
  auto phi_of = [&](const Weight& w) {
    long long s = 0;
    for (int c = 0; c <= d; ++c) s += phi[static_cast<size_t>(c)] * w[c];
    return s;
  };
  long long fibre_min = fibre_shifts.empty() ? 0 : phi_of(fibre_shifts.front());
  for (const Weight& v : fibre_shifts) fibre_min = std::min(fibre_min, phi_of(v));

  Character chi(d + 1, Region::upper_band(phi, degree_bound + phi_of(base) + fibre_min));
  Weight cur = base;
  std::function<void(size_t, long long)> rec = [&](size_t di, long long rest) {
    if (di == dirs.size()) {
      for (const auto& [v, mult] : fibre.terms) chi.add_term(cur + wi.apply(v), mult);
      return;
    }
    Weight save = cur;
    for (long long v = 0; v <= rest; ++v) {
      rec(di + 1, rest - v);
      cur = cur + dirs[di];
    }
    cur = save;
  };
  rec(0, degree_bound);
  chi.prune();
  return chi;
}

namespace {

/// Smallest shift-degree bound whose certified cell regions for indices
/// 0..i-1 contain every target weight.
long long cell_bound_covering(int d, int i, const Weight& lambda,
                              const std::vector<Weight>& targets) {
  Character fibre = bundle_fibre_character(d, lambda);
  long long bound = 1;
  for (int m = 0; m < i; ++m) {
    Perm wm = WeylWord(d, m).perm();
    Weight base = dot_action(WeylWord(d, m), Weight::zero(d + 1));
    auto phi_m = [&](const Weight& w) {
      long long s = 0;
      for (int c = 0; c < m; ++c) s -= w[c];
      for (int c = m + 1; c <= d; ++c) s += w[c];
      return s;
    };
    long long fibre_min = 0;
    bool first = true;
    for (const auto& [v, mult] : fibre.terms) {
      long long x = phi_m(wm.apply(v));
      fibre_min = first ? x : std::min(fibre_min, x);
      first = false;
    }
    for (const Weight& w : targets) bound = std::max(bound, phi_m(w) - phi_m(base) - fibre_min);
  }
  return bound;
}

}  // namespace

Character boundary_image_character(int d, int i, const Weight& lambda, long long degree_bound) {
  if (i < 1 || i > d) throw std::invalid_argument("boundary index out of range");
  BottIndex bi = find_bott_index(d, lambda);
  bool regular = bi.kind == BottCase::dominant_regular;
  Character cohom =
      regular ? irrep_character(dot_action(WeylWord(d, bi.i0), lambda)) : Character(d + 1);

  // im delta_{-1} = H^0(P^d, F); for m >= 1, ker delta_m picks up the m-th
  // sheaf cohomology on top of the previous image.
  Character image = regular && bi.i0 == 0 ? cohom : Character(d + 1);
  for (int m = 0; m < i; ++m) {
    Character ker = image;
    if (regular && bi.i0 == m && m >= 1) ker = ker.plus(cohom);
    image = cousin_cell_character(d, m, lambda, degree_bound).minus(ker);
  }
  return image;
}

Character supported_kernel_character(int d, int i, const Weight& lambda, long long degree_bound) {
  return boundary_image_character(d, i, lambda, degree_bound)
      .permuted(BlockSwap(d, i).inverse_perm());
}

ContainmentResult check_quotient_containment(int d, int i, const Weight& lambda,
                                             long long degree_bound) {
  RootSystem rs(d);
  Weight mu = step_highest_weight(i, d, lambda);
  Character v_char = levi_irrep_character(mu, i);

  std::vector<Weight> gens;
  for (int m = i; m <= d; ++m)
    for (int nn = 0; nn <= i - 1; ++nn) gens.push_back(rs.root(m, nn));
  std::vector<long long> phi(static_cast<size_t>(d + 1), 0);
  for (int c = i; c <= d; ++c) phi[static_cast<size_t>(c)] = 1;

  Character ring = ring_character(d + 1, gens, degree_bound, phi);
  Character coeff_module = ring.convolved_with_finite(v_char);

  std::vector<Weight> targets;
  for (const auto& [w, mult] : coeff_module.terms) targets.push_back(w);
  Character kernel_module =
      boundary_image_character(d, i, lambda, cell_bound_covering(d, i, lambda, targets));

  auto cmp = character_below(kernel_module, coeff_module);
  return {cmp.holds, cmp.defect};
}

SaturationResult saturate_generators(const LaurentModule& m, const std::vector<Weight>& seed) {
  std::vector<Weight> basis = m.basis();
  std::set<Weight> all(basis.begin(), basis.end());
  for (const Weight& s : seed)
    if (!all.count(s)) throw std::domain_error("seed outside the certified module: " + s.str());

  std::set<Weight> reached(seed.begin(), seed.end());
  std::vector<Weight> work(seed.begin(), seed.end());
  while (!work.empty()) {
    Weight k = work.back();
    work.pop_back();
    for (int i = 0; i <= m.d; ++i)
      for (int j = 0; j <= m.d; ++j) {
        if (i == j || k[j] == 0) continue;
        Weight t = k;
        t[i] += 1;
        t[j] -= 1;
        if (!m.in_pattern(t) || t.pole_order() > m.pole_cap) continue;
        if (reached.insert(t).second) work.push_back(t);
      }
  }

  SaturationResult res;
  res.frontier = Character(m.d + 1, Region::pole_bound(m.pole_cap));
  for (const Weight& k : basis)
    if (!reached.count(k)) res.frontier.add_term(k, 1);
  res.covers = res.frontier.is_zero();
  return res;
}

Character verma_kernel_character(int d, int j, const Weight& lambda, const ModuleDescriptor& seed,
                                 long long degree_bound) {
  if (j < 0 || j > d - 1) throw std::invalid_argument("kernel index out of range");
  RootSystem rs(d);
  Character n_char = seed.character();
  if (n_char.n != d + 1) throw std::invalid_argument("seed module rank mismatch");

  std::vector<Weight> gens;  // roots of u^+_(j+1,d-j)
  for (int a = 0; a <= j; ++a)
    for (int b = j + 1; b <= d; ++b) gens.push_back(rs.root(a, b));
  std::vector<long long> phi(static_cast<size_t>(d + 1), 0);
  for (int c = 0; c <= j; ++c) phi[static_cast<size_t>(c)] = 1;

  Character lhs = ring_character(d + 1, gens, degree_bound, phi).convolved_with_finite(n_char);

  // a cell bound large enough that the swapped kernel region covers the
  // whole truncated Verma support
  const int i = d - j;
  Perm swap_back = BlockSwap(d, i).perm();
  std::vector<Weight> targets;
  for (const auto& [w, mult] : lhs.terms) targets.push_back(swap_back.apply(w));

  Character target =
      supported_kernel_character(d, i, lambda, cell_bound_covering(d, i, lambda, targets));
  Character kernel = lhs.minus(target);  // throws on a negative coefficient

  for (const auto& [w, mult] : lhs.terms)
    if (!kernel.region.contains(w))
      throw std::runtime_error("uncertified: kernel truncation too small at " + w.str());
  return kernel;
}

}  // namespace drinfilt
