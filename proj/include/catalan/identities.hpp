#pragma once

#include <vector>

#include "catalan/term.hpp"
#include "catalan/transformation.hpp"

namespace catalan {

// x^n = x^(n+1): powers stabilize at the aperiodicity index.  Requires
// n >= 1.
Identity power_stability_identity(int n);

// x^(n-1) y^(n-1) = x^n y^(n-1) + x^(n-1) y^n: the mixed-power law that,
// together with power stability, holds in every n-by-n upper triangular
// Boolean matrix semiring.  Requires n >= 2.
Identity mixed_power_identity(int n);

// Both laws at level n (only power stability when n == 1).
std::vector<Identity> triangular_identities(int n);

// An extensive order-preserving map on the chain of size n+2 whose powers
// do not stabilize before exponent n+1: it sends i to i+1 below the top
// and fixes the top, so 1 a^n = n+1 but 1 a^(n+1) = n+2.  Witnesses that
// power_stability_identity(n) fails one level up.  Requires n >= 1.
Transformation power_stability_witness(int n);

// A pair (b, c) of extensive order-preserving maps on the chain of size
// n+1.  For n >= 2 they separate the two sides of mixed_power_identity(n):
// the left side sends 1 to n, the right side to n+1.  The case formulas
// also instantiate at n = 1, where the law itself does not exist.
std::pair<Transformation, Transformation> mixed_power_witnesses(int n);

}  // namespace catalan
