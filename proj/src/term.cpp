#include "catalan/term.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "catalan/errors.hpp"

namespace catalan {

Term Term::variable(char name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Variable;
  node->name = name;
  return Term(std::move(node));
}

Term Term::sum(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sum;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Term(std::move(node));
}

Term Term::product(Term lhs, Term rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Product;
  node->lhs = std::move(lhs.node_);
  node->rhs = std::move(rhs.node_);
  return Term(std::move(node));
}

Term Term::power(Term base, int exponent) {
  if (exponent < 1) throw DomainError("term exponent must be positive");
  if (exponent == 1) return base;
  auto node = std::make_shared<Node>();
  node->kind = Kind::Power;
  node->lhs = std::move(base.node_);
  node->exponent = exponent;
  return Term(std::move(node));
}

namespace {

void collect_variables(const Term& t, std::vector<char>& out) {
  switch (t.kind()) {
    case Term::Kind::Variable:
      if (std::find(out.begin(), out.end(), t.variable_name()) == out.end())
        out.push_back(t.variable_name());
      break;
    case Term::Kind::Sum:
    case Term::Kind::Product:
      collect_variables(t.left(), out);
      collect_variables(t.right(), out);
      break;
    case Term::Kind::Power:
      collect_variables(t.base(), out);
      break;
  }
}

// Precedence levels: sum < product < power operand.
void render(const Term& t, std::string& out, int parent_level) {
  int level = 0;
  switch (t.kind()) {
    case Term::Kind::Variable: level = 3; break;
    case Term::Kind::Power: level = 2; break;
    case Term::Kind::Product: level = 1; break;
    case Term::Kind::Sum: level = 0; break;
  }
  const bool wrap = level < parent_level;
  if (wrap) out.push_back('(');
  switch (t.kind()) {
    case Term::Kind::Variable:
      out.push_back(t.variable_name());
      break;
    case Term::Kind::Sum:
      render(t.left(), out, 0);
      out.push_back('+');
      render(t.right(), out, 0);
      break;
    case Term::Kind::Product:
      render(t.left(), out, 1);
      render(t.right(), out, 2);  // right operand binds like a power base
      break;
    case Term::Kind::Power:
      render(t.base(), out, 3);
      out.push_back('^');
      out += std::to_string(t.exponent());
      break;
  }
  if (wrap) out.push_back(')');
}

}  // namespace

std::vector<char> Term::variables() const {
  std::vector<char> out;
  collect_variables(*this, out);
  return out;
}

bool Term::uses_addition() const {
  switch (kind()) {
    case Kind::Variable: return false;
    case Kind::Sum: return true;
    case Kind::Product: return left().uses_addition() || right().uses_addition();
    case Kind::Power: return base().uses_addition();
  }
  return false;
}

std::string Term::to_text() const {
  std::string out;
  render(*this, out, 0);
  return out;
}

std::vector<char> Identity::variables() const {
  std::vector<char> out;
  collect_variables(lhs, out);
  collect_variables(rhs, out);
  return out;
}

bool Identity::multiplicative_only() const {
  return !lhs.uses_addition() && !rhs.uses_addition();
}

std::string Identity::to_text() const {
  return lhs.to_text() + " = " + rhs.to_text();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    Term t = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) +
                       "' at position " + std::to_string(pos_));
    return t;
  }

 private:
  Term parse_sum() {
    Term t = parse_product();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '+') {
        ++pos_;
        t = Term::sum(std::move(t), parse_product());
      } else {
        return t;
      }
    }
  }

  Term parse_product() {
    Term t = parse_factor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() &&
          (std::islower(static_cast<unsigned char>(text_[pos_])) ||
           text_[pos_] == '(')) {
        t = Term::product(std::move(t), parse_factor());
      } else {
        return t;
      }
    }
  }

  Term parse_factor() {
    Term base = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        throw ParseError("expected exponent digits after '^' at position " +
                         std::to_string(start));
      int exp = 0;
      auto res = std::from_chars(text_.data() + start, text_.data() + pos_, exp);
      if (res.ec != std::errc{})
        throw ParseError("exponent out of range at position " +
                         std::to_string(start));
      if (exp < 1)
        throw ParseError("exponent must be at least 1, got " +
                         std::to_string(exp));
      return Term::power(std::move(base), exp);
    }
    return base;
  }

  Term parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of term");
    char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      ++pos_;
      return Term::variable(c);
    }
    if (c == '(') {
      ++pos_;
      Term t = parse_sum();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("missing ')' at position " + std::to_string(pos_));
      ++pos_;
      return t;
    }
    throw ParseError("unexpected character '" + std::string(1, c) +
                     "' at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) { return Parser(text).parse(); }

Identity parse_identity(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ParseError("identity must contain '='");
  if (text.find('=', eq + 1) != std::string_view::npos)
    throw ParseError("identity must contain exactly one '='");
  return Identity{parse_term(text.substr(0, eq)),
                  parse_term(text.substr(eq + 1))};
}

}  // namespace catalan
