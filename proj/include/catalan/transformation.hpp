#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalan/errors.hpp"

namespace catalan {

// The three families of order-preserving transformations of the chain [n]:
//   O      — all order-preserving self-maps,
//   C      — the extensive ones (i <= ia), the Catalan monoid C_n,
//   Cminus — the decreasing ones (ia <= i), the monoid C⁻_n.
enum class MonoidClass { O, C, Cminus };

// Default enumeration caps; pass force = true to lift them.
inline constexpr int kMaxChainO = 8;
inline constexpr int kMaxChainCatalan = 10;

// A self-map of the chain {1, ..., n}, stored as its vector of images.
//
// Transformations act on the right: i(ab) = (ia)b.  All domain points and
// image values are 1-based, matching the digit encoding in which the
// identity on [3] is "123" and the map 1->1, 2->2, 3->4, 4->4 is "1244".
class Transformation {
 public:
  // images[k] is the image of k+1; every entry must lie in {1, ..., n}.
  explicit Transformation(std::vector<int> images);

  static Transformation identity(int n);

  int n() const { return static_cast<int>(images_.size()); }

  // Image of i (1-based).
  int image_of(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }

  const std::vector<int>& images() const { return images_; }

  bool operator==(const Transformation&) const = default;
  // Lexicographic order on image vectors; the canonical enumeration order.
  auto operator<=>(const Transformation&) const = default;

 private:
  std::vector<int> images_;
};

bool is_order_preserving(const Transformation& a);
bool is_extensive(const Transformation& a);
bool is_decreasing(const Transformation& a);
bool is_in_class(const Transformation& a, MonoidClass cls);

// Right-action composition: i(ab) = (ia)b.
Transformation compose(const Transformation& a, const Transformation& b);

// Pointwise max of image vectors; the semiring addition on O_n.
Transformation add(const Transformation& a, const Transformation& b);

// Pointwise min of image vectors; the lattice meet on O_n.
Transformation meet(const Transformation& a, const Transformation& b);

// Pointwise comparison; equivalent to add(a, b) == b.
bool leq(const Transformation& a, const Transformation& b);

// Order-reversal conjugate: on a chain of size m, i -> m+1-(m+1-i)a.
// An involution on O_m that swaps the extensive and decreasing classes.
Transformation bar(const Transformation& a);

// k-fold composition; power(a, 0) is the identity.
Transformation power(const Transformation& a, unsigned k);

// All transformations of [n] in the class, in lexicographic order of image
// vectors.  |C| = |Cminus| = catalan_number(n); |O| = binomial(2n-1, n-1).
std::vector<Transformation> enumerate_transformations(int n, MonoidClass cls,
                                                      bool force = false);

// Covering pairs (i, j) of the pointwise order restricted to `elements`:
// elements[i] < elements[j] with nothing strictly between.  Indices refer
// to positions in the input, which must hold pairwise distinct elements of
// equal chain size.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<Transformation>& elements);

// Digit string for n <= 9 ("1244"), comma-separated integers otherwise.
Transformation parse_transformation(std::string_view text);
std::string format_transformation(const Transformation& a);

}  // namespace catalan
