#pragma once

#include <set>
#include <string>

#include "character.hpp"
#include "weight.hpp"

namespace drinfilt {

struct VerifyOptions {
  bool desk = false;  // smoke otherwise
  long long p = 0;    // optional narrowing for the building suite
  int n = 0;
};

struct VerifyOutcome {
  int checks = 0;
  int failures = 0;
  std::string log;  // one line per check
  bool passed() const { return failures == 0; }
};

/// suite in {weights, bott, pieri, filtration, localcoh, building, all}.
VerifyOutcome run_verify_suite(const std::string& suite, const VerifyOptions& opts);

/// Independent Euler-characteristic oracle for O(r) on P^d: H^0 by monomial
/// enumeration, H^d through the all-variable direct limit.
long long euler_characteristic_oracle(int d, long long r);

/// Psi built directly from its constraint system as (mu'' + c, mu' - rev d),
/// without going through the Schubert-side set and the block swap.
std::set<Weight> step_weight_set_direct(int j, int d, const Weight& lambda);

}  // namespace drinfilt
