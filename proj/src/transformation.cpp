#include "catalan/transformation.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "catalan/counting.hpp"

namespace catalan {

Transformation::Transformation(std::vector<int> images)
    : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) {
    throw DomainError("transformation needs a chain of positive size");
  }
  for (int v : images_) {
    if (v < 1 || v > n) {
      throw DomainError("image entry " + std::to_string(v) +
                        " out of range 1.." + std::to_string(n));
    }
  }
}

Transformation Transformation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] = i + 1;
  }
  return Transformation(std::move(images));
}

bool is_order_preserving(const Transformation& a) {
  for (int i = 1; i < a.n(); ++i) {
    if (a.image_of(i) > a.image_of(i + 1)) {
      return false;
    }
  }
  return true;
}

bool is_extensive(const Transformation& a) {
  for (int i = 1; i <= a.n(); ++i) {
    if (a.image_of(i) < i) {
      return false;
    }
  }
  return true;
}

bool is_decreasing(const Transformation& a) {
  for (int i = 1; i <= a.n(); ++i) {
    if (a.image_of(i) > i) {
      return false;
    }
  }
  return true;
}

bool is_in_class(const Transformation& a, MonoidClass cls) {
  if (!is_order_preserving(a)) {
    return false;
  }
  switch (cls) {
    case MonoidClass::O:
      return true;
    case MonoidClass::C:
      return is_extensive(a);
    case MonoidClass::Cminus:
      return is_decreasing(a);
  }
  return false;
}

namespace {

void require_same_chain(const Transformation& a, const Transformation& b) {
  if (a.n() != b.n()) {
    throw DimensionError("chain sizes differ: " + std::to_string(a.n()) +
                         " vs " + std::to_string(b.n()));
  }
}

}  // namespace

Transformation compose(const Transformation& a, const Transformation& b) {
  require_same_chain(a, b);
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    images[static_cast<std::size_t>(i) - 1] = b.image_of(a.image_of(i));
  }
  return Transformation(std::move(images));
}

Transformation add(const Transformation& a, const Transformation& b) {
  require_same_chain(a, b);
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    images[static_cast<std::size_t>(i) - 1] =
        std::max(a.image_of(i), b.image_of(i));
  }
  return Transformation(std::move(images));
}

Transformation meet(const Transformation& a, const Transformation& b) {
  require_same_chain(a, b);
  std::vector<int> images(static_cast<std::size_t>(a.n()));
  for (int i = 1; i <= a.n(); ++i) {
    images[static_cast<std::size_t>(i) - 1] =
        std::min(a.image_of(i), b.image_of(i));
  }
  return Transformation(std::move(images));
}

bool leq(const Transformation& a, const Transformation& b) {
  require_same_chain(a, b);
  for (int i = 1; i <= a.n(); ++i) {
    if (a.image_of(i) > b.image_of(i)) {
      return false;
    }
  }
  return true;
}

Transformation bar(const Transformation& a) {
  const int m = a.n();
  std::vector<int> images(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    images[static_cast<std::size_t>(i) - 1] = m + 1 - a.image_of(m + 1 - i);
  }
  return Transformation(std::move(images));
}

Transformation power(const Transformation& a, unsigned k) {
  Transformation result = Transformation::identity(a.n());
  Transformation base = a;
  while (k > 0) {
    if (k & 1u) {
      result = compose(result, base);
    }
    k >>= 1;
    if (k > 0) {
      base = compose(base, base);
    }
  }
  return result;
}

namespace {

void enumerate_rec(int n, MonoidClass cls, std::vector<int>& prefix,
                   std::vector<Transformation>& out) {
  const int i = static_cast<int>(prefix.size()) + 1;
  if (i > n) {
    out.emplace_back(prefix);
    return;
  }
  int lo = prefix.empty() ? 1 : prefix.back();  // order-preserving
  int hi = n;
  if (cls == MonoidClass::C) {
    lo = std::max(lo, i);  // extensive
  } else if (cls == MonoidClass::Cminus) {
    hi = i;  // decreasing
  }
  for (int v = lo; v <= hi; ++v) {
    prefix.push_back(v);
    enumerate_rec(n, cls, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Transformation> enumerate_transformations(int n, MonoidClass cls,
                                                      bool force) {
  if (n < 1) {
    throw DomainError("chain size must be positive");
  }
  const int cap = cls == MonoidClass::O ? kMaxChainO : kMaxChainCatalan;
  if (n > cap && !force) {
    throw ResourceLimitError("enumeration cap n <= " + std::to_string(cap) +
                             " exceeded (n = " + std::to_string(n) +
                             "); use force to override");
  }
  std::vector<Transformation> out;
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  enumerate_rec(n, cls, prefix, out);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(
    const std::vector<Transformation>& elements) {
  const std::size_t m = elements.size();
  // strict pointwise order on the input
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      below[i][j] = i != j && leq(elements[i], elements[j]) &&
                    elements[i] != elements[j];
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (!below[i][j]) {
        continue;
      }
      bool covering = true;
      for (std::size_t k = 0; k < m; ++k) {
        if (below[i][k] && below[k][j]) {
          covering = false;
          break;
        }
      }
      if (covering) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

Transformation parse_transformation(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty transformation");
  }
  std::vector<int> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) {
        next = text.size();
      }
      std::string_view piece = text.substr(pos, next - pos);
      while (!piece.empty() && piece.front() == ' ') {
        piece.remove_prefix(1);
      }
      while (!piece.empty() && piece.back() == ' ') {
        piece.remove_suffix(1);
      }
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(piece.data(), piece.data() + piece.size(), value);
      if (ec != std::errc() || ptr != piece.data() + piece.size()) {
        throw ParseError("malformed entry '" + std::string(piece) + "'");
      }
      images.push_back(value);
      pos = next + 1;
      if (next == text.size()) {
        break;
      }
    }
  } else {
    if (text.size() > 9) {
      throw ParseError(
          "digit encoding is only valid for n <= 9; "
          "use comma-separated entries");
    }
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("malformed character '") + c +
                         "' in transformation");
      }
      images.push_back(c - '0');
    }
  }
  return Transformation(std::move(images));
}

std::string format_transformation(const Transformation& a) {
  std::string out;
  if (a.n() <= 9) {
    for (int v : a.images()) {
      out += static_cast<char>('0' + v);
    }
  } else {
    for (int i = 0; i < a.n(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(a.images()[static_cast<std::size_t>(i)]);
    }
  }
  return out;
}

}  // namespace catalan
