#include "catalan/bool_matrix.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

namespace catalan {

namespace {

void require_valid_size(int n) {
  if (n < 1 || n > 64) {
    throw DimensionError("matrix size must lie in 1..64, got " +
                         std::to_string(n));
  }
}

}  // namespace

BoolMatrix::BoolMatrix(int n) : n_(n) {
  require_valid_size(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

BoolMatrix BoolMatrix::identity(int n) {
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, i, true);
  }
  return m;
}

BoolMatrix BoolMatrix::antidiagonal(int n) {
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i, n + 1 - i, true);
  }
  return m;
}

BoolMatrix BoolMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  require_valid_size(n);
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(row.size()) != n) {
      throw DimensionError("matrix rows must all have length " +
                           std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) {
      const int v = row[static_cast<std::size_t>(j) - 1];
      if (v != 0 && v != 1) {
        throw DomainError("matrix entries must be 0 or 1");
      }
      m.set(i, j, v == 1);
    }
  }
  return m;
}

BoolMatrix BoolMatrix::parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('\n', pos);
    if (next == std::string_view::npos) {
      next = text.size();
    }
    std::string_view line = text.substr(pos, next - pos);
    if (!line.empty()) {
      lines.push_back(line);
    }
    if (next == text.size()) {
      break;
    }
    pos = next + 1;
  }
  const int n = static_cast<int>(lines.size());
  if (n == 0) {
    throw ParseError("empty matrix text");
  }
  require_valid_size(n);
  BoolMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto line = lines[static_cast<std::size_t>(i) - 1];
    if (static_cast<int>(line.size()) != n) {
      throw ParseError("matrix row '" + std::string(line) +
                       "' does not have length " + std::to_string(n));
    }
    for (int j = 1; j <= n; ++j) {
      const char c = line[static_cast<std::size_t>(j) - 1];
      if (c != '0' && c != '1') {
        throw ParseError(std::string("matrix entries must be '0' or '1', got '") +
                         c + "'");
      }
      m.set(i, j, c == '1');
    }
  }
  return m;
}

void BoolMatrix::set(int i, int j, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (n_ - j);
  if (value) {
    rows_[static_cast<std::size_t>(i) - 1] |= bit;
  } else {
    rows_[static_cast<std::size_t>(i) - 1] &= ~bit;
  }
}

namespace {

void require_same_size(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.n() != b.n()) {
    throw DimensionError("matrix sizes differ: " + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()));
  }
}

}  // namespace

BoolMatrix BoolMatrix::operator+(const BoolMatrix& other) const {
  require_same_size(*this, other);
  BoolMatrix result(n_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    result.rows_[r] = rows_[r] | other.rows_[r];
  }
  return result;
}

BoolMatrix BoolMatrix::operator*(const BoolMatrix& other) const {
  require_same_size(*this, other);
  BoolMatrix result(n_);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t word = rows_[r];
    std::uint64_t out = 0;
    while (word != 0) {
      const int p = std::countr_zero(word);  // column n - p has a 1
      out |= other.rows_[static_cast<std::size_t>(n_ - p) - 1];
      word &= word - 1;
    }
    result.rows_[r] = out;
  }
  return result;
}

bool BoolMatrix::is_upper_triangular() const {
  for (int i = 2; i <= n_; ++i) {
    // columns j >= i occupy the low n-i+1 bits
    const std::uint64_t allowed = (std::uint64_t{1} << (n_ - i + 1)) - 1;
    if (rows_[static_cast<std::size_t>(i) - 1] & ~allowed) {
      return false;
    }
  }
  return true;
}

bool BoolMatrix::is_lower_triangular() const {
  for (int i = 1; i < n_; ++i) {
    // columns j <= i occupy bits n-1 .. n-i
    const std::uint64_t allowed =
        row_mask() & ~((std::uint64_t{1} << (n_ - i)) - 1);
    if (rows_[static_cast<std::size_t>(i) - 1] & ~allowed) {
      return false;
    }
  }
  return true;
}

bool BoolMatrix::is_stair_triangular() const {
  if (!is_upper_triangular()) {
    return false;
  }
  for (int i = 1; i <= n_; ++i) {
    if (!get(i, i)) {
      return false;
    }
  }
  for (int i = 1; i <= n_; ++i) {
    for (int j = i + 1; j <= n_; ++j) {
      if (!get(i, j)) {
        continue;
      }
      for (int t = i + 1; t <= j; ++t) {
        if (!get(i, t)) {
          return false;
        }
      }
      for (int t = i + 1; t < j; ++t) {
        if (!get(t, j)) {
          return false;
        }
      }
    }
  }
  return true;
}

BoolMatrix BoolMatrix::antidiagonal_conjugate() const {
  BoolMatrix result(n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      result.set(i, j, get(n_ + 1 - i, n_ + 1 - j));
    }
  }
  return result;
}

BoolMatrix BoolMatrix::negate_upper_triangle() const {
  if (!is_upper_triangular()) {
    throw DomainError("negate_upper_triangle requires an upper triangular matrix");
  }
  BoolMatrix result = *this;
  for (int i = 1; i <= n_; ++i) {
    // flip columns i..n of row i
    const std::uint64_t mask = (n_ - i + 1 == 64)
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << (n_ - i + 1)) - 1;
    result.rows_[static_cast<std::size_t>(i) - 1] ^= mask;
  }
  return result;
}

BoolMatrix BoolMatrix::crop_first_col_last_row() const {
  if (n_ < 2) {
    throw DimensionError("cannot crop a 1x1 matrix");
  }
  BoolMatrix result(n_ - 1);
  // column j+1 of the old matrix and column j of the new one share bit n-1-j
  const std::uint64_t mask = (std::uint64_t{1} << (n_ - 1)) - 1;
  for (int i = 1; i <= n_ - 1; ++i) {
    result.rows_[static_cast<std::size_t>(i) - 1] =
        rows_[static_cast<std::size_t>(i) - 1] & mask;
  }
  return result;
}

std::string BoolMatrix::to_text() const {
  std::string out;
  for (int i = 1; i <= n_; ++i) {
    if (i > 1) {
      out += '\n';
    }
    for (int j = 1; j <= n_; ++j) {
      out += get(i, j) ? '1' : '0';
    }
  }
  return out;
}

std::vector<std::vector<int>> BoolMatrix::to_row_vectors() const {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) {
    auto& row = rows[static_cast<std::size_t>(i) - 1];
    row.resize(static_cast<std::size_t>(n_));
    for (int j = 1; j <= n_; ++j) {
      row[static_cast<std::size_t>(j) - 1] = get(i, j) ? 1 : 0;
    }
  }
  return rows;
}

namespace {

// Free entry positions of a shape in row-major order.
std::vector<std::pair<int, int>> free_positions(int n, MatrixShape shape) {
  std::vector<std::pair<int, int>> positions;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const bool free = shape == MatrixShape::Full ||
                        (shape == MatrixShape::Upper && i <= j) ||
                        (shape == MatrixShape::Lower && i >= j);
      if (free) {
        positions.emplace_back(i, j);
      }
    }
  }
  return positions;
}

std::vector<BoolMatrix> enumerate_stair(int n) {
  // Stair matrices are exactly the matrices whose row i is the column
  // interval [i, e_i] with e weakly increasing; enumerate the end vectors.
  std::vector<BoolMatrix> out;
  std::vector<int> ends(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i) -> void {
    if (i > n) {
      BoolMatrix m(n);
      for (int r = 1; r <= n; ++r) {
        for (int j = r; j <= ends[static_cast<std::size_t>(r) - 1]; ++j) {
          m.set(r, j, true);
        }
      }
      out.push_back(std::move(m));
      return;
    }
    const int lo = i == 1 ? 1 : std::max(i, ends[static_cast<std::size_t>(i) - 2]);
    for (int e = lo; e <= n; ++e) {
      ends[static_cast<std::size_t>(i) - 1] = e;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<BoolMatrix> enumerate_matrices(int n, MatrixShape shape,
                                           bool force) {
  require_valid_size(n);
  int cap = 0;
  switch (shape) {
    case MatrixShape::Full:
      cap = kMaxMatrixFull;
      break;
    case MatrixShape::Upper:
    case MatrixShape::Lower:
      cap = kMaxMatrixTriangular;
      break;
    case MatrixShape::Stair:
      cap = kMaxMatrixStair;
      break;
  }
  if (n > cap && !force) {
    throw ResourceLimitError("matrix enumeration cap n <= " +
                             std::to_string(cap) + " exceeded (n = " +
                             std::to_string(n) + "); use force to override");
  }
  if (shape == MatrixShape::Stair) {
    return enumerate_stair(n);
  }
  const auto positions = free_positions(n, shape);
  const int bits = static_cast<int>(positions.size());
  if (bits > 24) {
    throw ResourceLimitError("enumeration of 2^" + std::to_string(bits) +
                             " matrices refused");
  }
  std::vector<BoolMatrix> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits);
       ++pattern) {
    BoolMatrix m(n);
    for (int t = 0; t < bits; ++t) {
      // the first row-major position carries the most significant bit
      if ((pattern >> (bits - 1 - t)) & 1u) {
        m.set(positions[static_cast<std::size_t>(t)].first,
              positions[static_cast<std::size_t>(t)].second, true);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace catalan
