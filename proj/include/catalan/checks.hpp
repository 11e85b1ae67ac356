#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catalan/semiring.hpp"
#include "catalan/term.hpp"

namespace catalan {

// A concrete failure found by a check: the element assignment that broke
// the property, the operation involved ("add", "mul", or "image" for
// injectivity), and the two values that should have agreed.
struct Witness {
  std::vector<std::pair<char, std::size_t>> assignment;
  std::string operation;
  std::size_t lhs_value = 0;
  std::size_t rhs_value = 0;
};

struct CheckReport {
  bool holds = false;
  unsigned long long checked = 0;  // assignments, pairs, or search nodes
  std::optional<Witness> witness;
  std::optional<std::vector<std::size_t>> bijection;  // isomorphism search only
};

struct CheckOptions {
  unsigned long long budget = 100'000'000;  // refuse checks larger than this
  int jobs = 1;                             // worker threads for identity checks
};

// Value of a term under the given variable assignment (element indices).
// Throws DomainError if the term uses a variable missing from the map.
std::size_t eval_term(const FiniteSemiring& s, const Term& term,
                      const std::map<char, std::size_t>& assignment);

// Does the identity hold under every assignment of elements to its
// variables?  Assignments run in lexicographic order with the first
// variable slowest; the reported witness is always the first failure in
// that order regardless of thread count.  Throws ResourceLimitError when
// the assignment count exceeds the budget.
CheckReport check_identity(const FiniteSemiring& s, const Identity& id,
                           const CheckOptions& options = {});

// Does the index map source -> target respect the selected operations?
// Pairs (a, b) are scanned row-major; for each pair multiplication is
// checked before addition, and the scan stops at the first violation.
CheckReport check_homomorphism(const FiniteSemiring& source,
                               const FiniteSemiring& target,
                               const std::vector<std::size_t>& map, Ops ops,
                               const CheckOptions& options = {});

// Are all values of the map distinct?  The witness names the first
// colliding pair of source indices.
CheckReport check_injective(const std::vector<std::size_t>& map);

// Searches for a bijection source -> target respecting the selected
// operations.  A size mismatch is a negative verdict, not an error.  On
// success the report carries the bijection found; `checked` counts search
// nodes.  Throws ResourceLimitError if the search exceeds the budget.
CheckReport check_isomorphism_exists(const FiniteSemiring& source,
                                     const FiniteSemiring& target, Ops ops,
                                     const CheckOptions& options = {});

}  // namespace catalan
