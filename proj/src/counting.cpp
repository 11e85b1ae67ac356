#include "catalan/counting.hpp"

#include <limits>

#include "catalan/errors.hpp"

namespace catalan {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) {
    return 0;
  }
  if (k > n - k) {
    k = n - k;
  }
  std::uint64_t result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is integral at every step
    std::uint64_t numerator = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / numerator) {
      throw ResourceLimitError("binomial coefficient overflows 64 bits");
    }
    result = result * numerator / i;
  }
  return result;
}

std::uint64_t catalan_number(unsigned n) {
  return binomial(2 * n, n) / (n + 1);
}

std::uint64_t order_preserving_count(unsigned n) {
  if (n == 0) {
    return 1;
  }
  return binomial(2 * n - 1, n - 1);
}

}  // namespace catalan
