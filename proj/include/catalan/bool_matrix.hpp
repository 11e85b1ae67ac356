#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "catalan/errors.hpp"

namespace catalan {

// Subsets of the n x n Boolean matrices that can be enumerated.
enum class MatrixShape { Full, Upper, Lower, Stair };

// Default enumeration caps per shape; pass force = true to lift them.
inline constexpr int kMaxMatrixFull = 4;
inline constexpr int kMaxMatrixTriangular = 5;
inline constexpr int kMaxMatrixStair = 10;

// A square Boolean matrix under entrywise-max addition and max-min product.
//
// Rows are bit-packed, one 64-bit word per row, with column j (1-based)
// stored at bit n-j so that reading a row word as an integer matches the
// column order.  Comparison is therefore ascending in the matrix's bit
// pattern read row-major, which is the canonical enumeration order.
// Entry accessors use 1-based row and column indices.
class BoolMatrix {
 public:
  explicit BoolMatrix(int n);  // zero matrix

  static BoolMatrix identity(int n);
  // 1s at positions (i, n+1-i); conjugation by it reverses row and column
  // order, exchanging the lower and upper triangular semirings.
  static BoolMatrix antidiagonal(int n);
  static BoolMatrix from_rows(const std::vector<std::vector<int>>& rows);
  // One row per line, characters '0'/'1', e.g. "10\n11".
  static BoolMatrix parse(std::string_view text);

  int n() const { return n_; }
  bool get(int i, int j) const {
    return (rows_[static_cast<std::size_t>(i) - 1] >> (n_ - j)) & 1u;
  }
  void set(int i, int j, bool value);

  // Entrywise max.
  BoolMatrix operator+(const BoolMatrix& other) const;
  // (AB)_ij = 1 iff there is k with A_ik = B_kj = 1.
  BoolMatrix operator*(const BoolMatrix& other) const;

  bool operator==(const BoolMatrix&) const = default;
  auto operator<=>(const BoolMatrix&) const = default;

  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  // Unit diagonal, zero below it, and every 1 at (i, j) with i < j forces
  // 1s along the row segment (i, i+1..j) and column segment (i+1..j-1, j).
  bool is_stair_triangular() const;

  // A -> PAP for the antidiagonal P: entry (i, j) becomes (n+1-i, n+1-j).
  BoolMatrix antidiagonal_conjugate() const;

  // Flip every entry on or above the diagonal; requires an upper
  // triangular input so entries below the diagonal stay zero.
  BoolMatrix negate_upper_triangle() const;

  // Drop the first column and the last row: result_ij = A_{i, j+1}.
  BoolMatrix crop_first_col_last_row() const;

  std::string to_text() const;
  std::vector<std::vector<int>> to_row_vectors() const;

 private:
  std::uint64_t row_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  int n_;
  std::vector<std::uint64_t> rows_;
};

// The complete list of matrices of the shape, ascending in row-major bit
// pattern.  |Upper(n)| = |Lower(n)| = 2^(n(n+1)/2); |Stair(n)| is the n-th
// Catalan number.
std::vector<BoolMatrix> enumerate_matrices(int n, MatrixShape shape,
                                           bool force = false);

}  // namespace catalan
