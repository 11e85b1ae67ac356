#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "catalan/bool_matrix.hpp"
#include "catalan/transformation.hpp"

namespace catalan {

inline constexpr int kMaxStaircase = 12;

// An integer partition: a weakly decreasing sequence of positive parts.
// Here partitions are read off lower triangular matrices as Young diagrams
// inside the staircase shape (n, n-1, ..., 1).
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  // "[]" for the empty partition, "[2,1]" otherwise.
  std::string to_text() const;
};

// The 0/1 action matrix of a transformation: entry (i, j) is 1 iff ia = j.
// A multiplicative embedding of the full transformation monoid; upper
// triangular whenever the input is extensive, but it does not respect the
// max addition.
BoolMatrix action_matrix(const Transformation& a);

// The interval matrix of an extensive order-preserving transformation:
// entry (i, j) is 1 iff i <= j <= ia.  A semiring isomorphism from C_n
// onto the stair triangular matrices.  Throws DomainError off-domain.
BoolMatrix stair_matrix(const Transformation& a);

// The unary-row matrix of a decreasing order-preserving transformation of
// [n+1]: the i-th row of the n x n result holds (i+1)a - 1 left-justified
// 1s, i.e. entry (i, j) is 1 iff (i+1)a - 1 >= j.  A faithful semiring
// representation by lower triangular matrices.  Throws DomainError
// off-domain; requires chain size >= 2.
BoolMatrix unary_matrix(const Transformation& a);

// Antidiagonal conjugate of unary_matrix: the same representation landing
// in the upper triangular semiring.
BoolMatrix unary_matrix_conjugated(const Transformation& a);

// For extensive order-preserving a on [n+1]: negate the upper triangle of
// stair_matrix(a), then crop the first column and last row.  Coincides
// with unary_matrix_conjugated(bar(a)).
BoolMatrix complement_pipeline(const Transformation& a);

// Read a unary-row lower triangular matrix as a Young diagram: nonzero row
// lengths from the bottom row up.  Requires each row to be left-justified
// 1s with lengths weakly increasing top to bottom; throws
// MalformedMatrixError otherwise.
Partition matrix_to_partition(const BoolMatrix& m);

// All partitions contained in the staircase shape (n, n-1, ..., 1), in
// lexicographic order with prefixes first.  Count = catalan_number(n + 1).
std::vector<Partition> enumerate_staircase_partitions(int n,
                                                      bool force = false);

// Same count computed by direct recursion, without materializing the list.
std::uint64_t count_staircase_partitions(int n);

}  // namespace catalan
