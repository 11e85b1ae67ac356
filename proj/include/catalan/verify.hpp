#pragma once

#include <string>
#include <vector>

#include "catalan/checks.hpp"

namespace catalan {

// Outcome of one named sub-check inside a verification suite.
struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  unsigned long long checked = 0;  // pairs / assignments / search nodes
  std::string detail;
};

// Suite tokens accepted by verify_suite, in canonical order:
//   unary-rep       decreasing maps on [n+1] embed into lower(n), both ops
//   conjugate-rep   the antidiagonal-conjugated variant lands in upper(n)
//   stair-rep       extensive maps on [n] are isomorphic to the stair set
//   action-rep      the one-hot action matrix: multiplicative only
//   complementarity stair pipeline equals the conjugated embedding of bar
//   young-count     staircase partitions are counted by a Catalan number
//   lattice         order_preserving(n) is a distributive lattice; extensive
//                   and decreasing maps are the up-set and down-set of the
//                   identity map
//   closure         carriers are closed where claimed; identities pass to
//                   closed subsets
//   identities      the two triangular laws hold in upper(n) and fail one
//                   chain size up
//   noniso          which reducts of the two Catalan semirings are
//                   isomorphic, by exhaustive bijection search
const std::vector<std::string>& verify_tokens();

// Runs one suite at chain/matrix size n.  Unknown tokens throw DomainError;
// out-of-cap sub-checks are skipped silently, n out of range for the whole
// suite throws DomainError.
std::vector<CheckResult> verify_suite(const std::string& token, int n,
                                      const CheckOptions& options = {});

// Every suite at every feasible size up to n_max, plus element-count
// cross-checks.  The reproduce-everything entry point.
std::vector<CheckResult> report_all(int n_max, const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace catalan
