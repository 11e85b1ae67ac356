#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace catalan {

// Immutable term tree over single-letter variables with '+', juxtaposition
// as product, and positive integer powers.  Nodes are shared, so copies are
// cheap and subterms may be reused freely.
class Term {
 public:
  enum class Kind { Variable, Sum, Product, Power };

  static Term variable(char name);
  static Term sum(Term lhs, Term rhs);
  static Term product(Term lhs, Term rhs);
  static Term power(Term base, int exponent);  // exponent >= 1; ^1 is the base

  Kind kind() const { return node_->kind; }
  char variable_name() const { return node_->name; }
  Term left() const { return Term(node_->lhs); }   // Sum/Product
  Term right() const { return Term(node_->rhs); }  // Sum/Product
  Term base() const { return Term(node_->lhs); }   // Power
  int exponent() const { return node_->exponent; }

  // Distinct variables in order of first appearance (left to right).
  std::vector<char> variables() const;
  bool uses_addition() const;

  // Canonical text: products by juxtaposition, powers with '^', parentheses
  // only where precedence demands them.
  std::string to_text() const;

 private:
  struct Node {
    Kind kind;
    char name = 0;
    int exponent = 0;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A formal identity lhs = rhs.  Variables lists every distinct variable of
// either side, ordered by first appearance in the lhs and then the rhs.
struct Identity {
  Term lhs;
  Term rhs;

  std::vector<char> variables() const;
  bool multiplicative_only() const;
  std::string to_text() const;
};

// Grammar: expr = product ('+' product)*; product = factor+; factor =
// atom ('^' digits)?; atom = lowercase letter | '(' expr ')'.  Whitespace
// is insignificant.  Throws ParseError on malformed input, including
// exponent zero.
Term parse_term(std::string_view text);

// "lhs = rhs" with exactly one '='.
Identity parse_identity(std::string_view text);

}  // namespace catalan
