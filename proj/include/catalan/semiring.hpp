#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catalan/bool_matrix.hpp"
#include "catalan/errors.hpp"
#include "catalan/transformation.hpp"

namespace catalan {

// A finite additively idempotent semiring, presented as an indexed carrier
// with addition and multiplication acting on indices.  Reducts are handled
// downstream: checks select which operations they exercise, so the same
// object serves as semiring, additive reduct, or multiplicative monoid.
//
// Construction verifies the ai-semiring axioms exhaustively when the
// carrier has at most kAxiomCheckThreshold elements; larger carriers are
// trusted and report axioms_verified() == false.  Operation tables are
// precomputed up to kTableThreshold elements.  Instances are immutable
// after construction and safe to share across threads.
class FiniteSemiring {
 public:
  using Index = std::size_t;
  using BinOp = std::function<Index(Index, Index)>;

  static constexpr std::size_t kTableThreshold = 1024;
  static constexpr std::size_t kAxiomCheckThreshold = 200;

  FiniteSemiring(std::string name, std::vector<std::string> labels, BinOp add,
                 BinOp mul);

  std::size_t size() const { return labels_.size(); }
  const std::string& name() const { return name_; }
  const std::string& label(Index i) const { return labels_[i]; }
  std::optional<Index> index_of(std::string_view label) const;

  Index add(Index a, Index b) const {
    return add_table_.empty() ? add_fn_(a, b) : add_table_[a * size() + b];
  }
  Index mul(Index a, Index b) const {
    return mul_table_.empty() ? mul_fn_(a, b) : mul_table_[a * size() + b];
  }

  bool axioms_verified() const { return axioms_verified_; }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  BinOp add_fn_;
  BinOp mul_fn_;
  std::vector<Index> add_table_;
  std::vector<Index> mul_table_;
  std::unordered_map<std::string, Index> index_;
  bool axioms_verified_ = false;
};

// Which operations a structural check must respect.
struct Ops {
  bool add = true;
  bool mul = true;

  static Ops both() { return {true, true}; }
  static Ops add_only() { return {true, false}; }
  static Ops mul_only() { return {false, true}; }
};

// The Catalan semiring of the class: carrier enumerate_transformations(n,
// cls) under max-addition and composition.
FiniteSemiring semiring_from_transformations(int n, MonoidClass cls,
                                             bool force = false);

// The Boolean matrix semiring of the shape: carrier enumerate_matrices(n,
// shape) under entrywise max and the max-min product.
FiniteSemiring semiring_from_matrices(int n, MatrixShape shape,
                                      bool force = false);

// Is the subset (by index) closed under the selected operations?
bool closed_under(const FiniteSemiring& s,
                  const std::vector<FiniteSemiring::Index>& subset, Ops ops);

// The subsemiring on the given carrier subset; throws DomainError if the
// subset is not closed under both operations.
FiniteSemiring subsemiring(const FiniteSemiring& s,
                           const std::vector<FiniteSemiring::Index>& subset);

}  // namespace catalan
