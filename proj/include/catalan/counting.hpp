#pragma once

#include <cstdint>

namespace catalan {

// Exact binomial coefficient; throws ResourceLimitError on uint64 overflow.
std::uint64_t binomial(unsigned n, unsigned k);

// n-th Catalan number, binomial(2n, n) / (n + 1).  catalan_number(0) == 1.
std::uint64_t catalan_number(unsigned n);

// Number of order-preserving self-maps of [n], binomial(2n - 1, n - 1).
std::uint64_t order_preserving_count(unsigned n);

}  // namespace catalan
