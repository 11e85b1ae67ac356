#include "catalan/representations.hpp"

#include <map>
#include <string>
#include <utility>

namespace catalan {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 1) {
      throw DomainError("partition parts must be positive");
    }
    if (k + 1 < parts.size() && parts[k] < parts[k + 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
}

std::string Partition::to_text() const {
  std::string out = "[";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) {
      out += ',';
    }
    out += std::to_string(parts[k]);
  }
  out += ']';
  return out;
}

BoolMatrix action_matrix(const Transformation& a) {
  BoolMatrix m(a.n());
  for (int i = 1; i <= a.n(); ++i) {
    m.set(i, a.image_of(i), true);
  }
  return m;
}

namespace {

void require_order_preserving(const Transformation& a) {
  if (!is_order_preserving(a)) {
    throw DomainError("transformation " + format_transformation(a) +
                      " is not order-preserving");
  }
}

}  // namespace

BoolMatrix stair_matrix(const Transformation& a) {
  require_order_preserving(a);
  if (!is_extensive(a)) {
    throw DomainError("transformation " + format_transformation(a) +
                      " is not extensive");
  }
  BoolMatrix m(a.n());
  for (int i = 1; i <= a.n(); ++i) {
    for (int j = i; j <= a.image_of(i); ++j) {
      m.set(i, j, true);
    }
  }
  return m;
}

BoolMatrix unary_matrix(const Transformation& a) {
  require_order_preserving(a);
  if (!is_decreasing(a)) {
    throw DomainError("transformation " + format_transformation(a) +
                      " is not decreasing");
  }
  if (a.n() < 2) {
    throw DomainError("unary_matrix needs a chain of size at least 2");
  }
  const int n = a.n() - 1;
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    // row i: (i+1)a - 1 left-justified 1s
    for (int j = 1; j <= a.image_of(i + 1) - 1; ++j) {
      m.set(i, j, true);
    }
  }
  return m;
}

BoolMatrix unary_matrix_conjugated(const Transformation& a) {
  return unary_matrix(a).antidiagonal_conjugate();
}

BoolMatrix complement_pipeline(const Transformation& a) {
  // composed from the primitive steps so each one stays observable
  return stair_matrix(a).negate_upper_triangle().crop_first_col_last_row();
}

Partition matrix_to_partition(const BoolMatrix& m) {
  const int n = m.n();
  std::vector<int> lengths(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int len = 0;
    while (len < n && m.get(i, len + 1)) {
      ++len;
    }
    for (int j = len + 2; j <= n; ++j) {
      if (m.get(i, j)) {
        throw MalformedMatrixError("row " + std::to_string(i) +
                                   " is not left-justified 1s");
      }
    }
    if (len > i) {
      throw MalformedMatrixError("matrix is not lower triangular");
    }
    lengths[static_cast<std::size_t>(i) - 1] = len;
    if (i > 1 && lengths[static_cast<std::size_t>(i) - 2] > len) {
      throw MalformedMatrixError("row lengths must weakly increase downwards");
    }
  }
  std::vector<int> parts;
  for (int i = n; i >= 1; --i) {
    const int len = lengths[static_cast<std::size_t>(i) - 1];
    if (len > 0) {
      parts.push_back(len);
    }
  }
  return Partition(std::move(parts));
}

namespace {

void staircase_rec(int n, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
  out.push_back(Partition(prefix));
  const int k = static_cast<int>(prefix.size()) + 1;  // next part index
  const int row_cap = n + 1 - k;
  if (row_cap < 1) {
    return;
  }
  const int hi = prefix.empty() ? n : std::min(prefix.back(), row_cap);
  for (int v = 1; v <= hi; ++v) {
    prefix.push_back(v);
    staircase_rec(n, prefix, out);
    prefix.pop_back();
  }
}

std::uint64_t staircase_count_rec(int n, int k, int bound) {
  const int row_cap = n + 1 - k;
  if (row_cap < 1) {
    return 1;
  }
  std::uint64_t total = 1;  // stop here
  const int hi = std::min(bound, row_cap);
  for (int v = 1; v <= hi; ++v) {
    total += staircase_count_rec(n, k + 1, v);
  }
  return total;
}

}  // namespace

std::vector<Partition> enumerate_staircase_partitions(int n, bool force) {
  if (n < 1) {
    throw DomainError("staircase size must be positive");
  }
  if (n > kMaxStaircase && !force) {
    throw ResourceLimitError("staircase enumeration cap n <= " +
                             std::to_string(kMaxStaircase) +
                             " exceeded (n = " + std::to_string(n) +
                             "); use force to override");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  staircase_rec(n, prefix, out);
  return out;
}

std::uint64_t count_staircase_partitions(int n) {
  if (n < 1) {
    throw DomainError("staircase size must be positive");
  }
  return staircase_count_rec(n, 1, n);
}

}  // namespace catalan
