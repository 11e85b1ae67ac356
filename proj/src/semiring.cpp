#include "catalan/semiring.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace catalan {

namespace {

// Exhaustive axiom check for an ai-semiring without neutral elements:
// both operations associative, addition commutative and idempotent,
// multiplication distributing over addition on both sides.
bool check_axioms(std::size_t m, const FiniteSemiring::BinOp& add,
                  const FiniteSemiring::BinOp& mul) {
  for (std::size_t a = 0; a < m; ++a) {
    if (add(a, a) != a) return false;
    for (std::size_t b = 0; b < m; ++b) {
      if (add(a, b) != add(b, a)) return false;
      for (std::size_t c = 0; c < m; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return false;
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return false;
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) return false;
      }
    }
  }
  return true;
}

}  // namespace

FiniteSemiring::FiniteSemiring(std::string name,
                               std::vector<std::string> labels, BinOp add,
                               BinOp mul)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      add_fn_(std::move(add)),
      mul_fn_(std::move(mul)) {
  if (labels_.empty()) throw DomainError("semiring carrier must be non-empty");
  const std::size_t m = labels_.size();
  index_.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto [it, inserted] = index_.emplace(labels_[i], i);
    if (!inserted)
      throw DomainError("duplicate element label '" + labels_[i] + "'");
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (add_fn_(a, b) >= m || mul_fn_(a, b) >= m)
        throw DomainError("operation result out of carrier range");
      if (m > kTableThreshold) break;  // spot check only
    }
    if (m > kTableThreshold) break;
  }
  if (m <= kAxiomCheckThreshold) {
    if (!check_axioms(m, add_fn_, mul_fn_))
      throw DomainError("operations violate ai-semiring axioms in '" + name_ +
                        "'");
    axioms_verified_ = true;
  }
  if (m <= kTableThreshold) {
    add_table_.resize(m * m);
    mul_table_.resize(m * m);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        add_table_[a * m + b] = add_fn_(a, b);
        mul_table_[a * m + b] = mul_fn_(a, b);
      }
    }
  }
}

std::optional<FiniteSemiring::Index> FiniteSemiring::index_of(
    std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteSemiring semiring_from_transformations(int n, MonoidClass cls,
                                             bool force) {
  auto elems = enumerate_transformations(n, cls, force);
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& t : elems) labels.push_back(format_transformation(t));

  auto shared = std::make_shared<std::vector<Transformation>>(std::move(elems));
  // Elements are stored in lexicographic order, so results can be located
  // by binary search instead of a hash of the formatted label.
  auto locate = [shared](const Transformation& t) -> std::size_t {
    auto it = std::lower_bound(shared->begin(), shared->end(), t);
    if (it == shared->end() || !(*it == t))
      throw DomainError("operation result escapes the carrier");
    return static_cast<std::size_t>(it - shared->begin());
  };
  auto add_op = [shared, locate](std::size_t a, std::size_t b) {
    return locate(add((*shared)[a], (*shared)[b]));
  };
  auto mul_op = [shared, locate](std::size_t a, std::size_t b) {
    return locate(compose((*shared)[a], (*shared)[b]));
  };

  std::string name;
  switch (cls) {
    case MonoidClass::O: name = "order_preserving(" + std::to_string(n) + ")"; break;
    case MonoidClass::C: name = "catalan(" + std::to_string(n) + ")"; break;
    case MonoidClass::Cminus: name = "catalan_dual(" + std::to_string(n) + ")"; break;
  }
  return FiniteSemiring(std::move(name), std::move(labels), std::move(add_op),
                        std::move(mul_op));
}

FiniteSemiring semiring_from_matrices(int n, MatrixShape shape, bool force) {
  auto elems = enumerate_matrices(n, shape, force);
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (const auto& m : elems) {
    std::string flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) flat.push_back(m.get(i, j) ? '1' : '0');
    labels.push_back(std::move(flat));
  }

  auto shared = std::make_shared<std::vector<BoolMatrix>>(std::move(elems));
  auto locate = [shared](const BoolMatrix& m) -> std::size_t {
    auto it = std::lower_bound(shared->begin(), shared->end(), m);
    if (it == shared->end() || !(*it == m))
      throw DomainError("operation result escapes the carrier");
    return static_cast<std::size_t>(it - shared->begin());
  };
  auto add_op = [shared, locate](std::size_t a, std::size_t b) {
    return locate((*shared)[a] + (*shared)[b]);
  };
  auto mul_op = [shared, locate](std::size_t a, std::size_t b) {
    return locate((*shared)[a] * (*shared)[b]);
  };

  std::string name;
  switch (shape) {
    case MatrixShape::Full: name = "bool_full(" + std::to_string(n) + ")"; break;
    case MatrixShape::Upper: name = "bool_upper(" + std::to_string(n) + ")"; break;
    case MatrixShape::Lower: name = "bool_lower(" + std::to_string(n) + ")"; break;
    case MatrixShape::Stair: name = "bool_stair(" + std::to_string(n) + ")"; break;
  }
  return FiniteSemiring(std::move(name), std::move(labels), std::move(add_op),
                        std::move(mul_op));
}

bool closed_under(const FiniteSemiring& s,
                  const std::vector<FiniteSemiring::Index>& subset, Ops ops) {
  std::vector<char> member(s.size(), 0);
  for (auto i : subset) {
    if (i >= s.size()) throw DomainError("subset index out of range");
    member[i] = 1;
  }
  for (auto a : subset) {
    for (auto b : subset) {
      if (ops.add && !member[s.add(a, b)]) return false;
      if (ops.mul && !member[s.mul(a, b)]) return false;
    }
  }
  return true;
}

FiniteSemiring subsemiring(const FiniteSemiring& s,
                           const std::vector<FiniteSemiring::Index>& subset) {
  if (!closed_under(s, subset, Ops::both()))
    throw DomainError("subset of '" + s.name() +
                      "' is not closed under both operations");
  std::vector<std::string> labels;
  labels.reserve(subset.size());
  std::vector<std::size_t> back(s.size(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    labels.push_back(s.label(subset[i]));
    back[subset[i]] = i;
  }
  auto parent = std::make_shared<FiniteSemiring>(s);
  auto sub = std::make_shared<std::vector<FiniteSemiring::Index>>(subset);
  auto backmap = std::make_shared<std::vector<std::size_t>>(std::move(back));
  auto add_op = [parent, sub, backmap](std::size_t a, std::size_t b) {
    return (*backmap)[parent->add((*sub)[a], (*sub)[b])];
  };
  auto mul_op = [parent, sub, backmap](std::size_t a, std::size_t b) {
    return (*backmap)[parent->mul((*sub)[a], (*sub)[b])];
  };
  return FiniteSemiring(s.name() + "|sub", std::move(labels),
                        std::move(add_op), std::move(mul_op));
}

}  // namespace catalan
