#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <vector>

#include "catalan/checks.hpp"
#include "catalan/errors.hpp"
#include "catalan/identities.hpp"
#include "catalan/representations.hpp"
#include "catalan/semiring.hpp"
#include "catalan/term.hpp"

using namespace catalan;

namespace {

// two-element Boolean semiring {0, 1}: max addition, min multiplication
FiniteSemiring tiny_boolean() {
  return FiniteSemiring(
      "bool", {"0", "1"}, [](std::size_t a, std::size_t b) { return a | b; },
      [](std::size_t a, std::size_t b) { return a & b; });
}

std::size_t must_index(const FiniteSemiring& s, const std::string& label) {
  auto idx = s.index_of(label);
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("semiring construction verifies the axioms on small carriers") {
  const FiniteSemiring b = tiny_boolean();
  CHECK(b.size() == 2);
  CHECK(b.axioms_verified());
  CHECK(b.add(0, 1) == 1);
  CHECK(b.mul(0, 1) == 0);
  CHECK(b.index_of("1") == 1);
  CHECK_FALSE(b.index_of("2").has_value());

  // left projection as addition is not commutative
  CHECK_THROWS_AS(
      FiniteSemiring("bad", {"a", "b"},
                     [](std::size_t a, std::size_t) { return a; },
                     [](std::size_t a, std::size_t b) { return a & b; }),
      DomainError);
  // non-idempotent addition
  CHECK_THROWS_AS(
      FiniteSemiring("bad", {"a", "b"},
                     [](std::size_t a, std::size_t b) { return (a + b) % 2; },
                     [](std::size_t a, std::size_t b) { return a & b; }),
      DomainError);
  CHECK_THROWS_AS(
      FiniteSemiring("dup", {"a", "a"},
                     [](std::size_t a, std::size_t b) { return a | b; },
                     [](std::size_t a, std::size_t b) { return a & b; }),
      DomainError);
  CHECK_THROWS_AS(FiniteSemiring("empty", {},
                                 [](std::size_t a, std::size_t) { return a; },
                                 [](std::size_t a, std::size_t) { return a; }),
                  DomainError);
  // operation escaping the carrier range
  CHECK_THROWS_AS(
      FiniteSemiring("oob", {"a"},
                     [](std::size_t, std::size_t) { return std::size_t{7}; },
                     [](std::size_t, std::size_t) { return std::size_t{0}; }),
      DomainError);
}

TEST_CASE("transformation semiring adapters") {
  const FiniteSemiring cm3 =
      semiring_from_transformations(3, MonoidClass::Cminus);
  CHECK(cm3.name() == "catalan_dual(3)");
  CHECK(cm3.size() == 5);
  CHECK(cm3.axioms_verified());
  CHECK(cm3.label(0) == "111");
  CHECK(must_index(cm3, "123") == 4);

  const FiniteSemiring o3 = semiring_from_transformations(3, MonoidClass::O);
  CHECK(o3.name() == "order_preserving(3)");
  CHECK(o3.size() == 10);

  // operations agree with the transformation-level definitions
  const std::size_t a = must_index(o3, "133");
  const std::size_t b = must_index(o3, "223");
  CHECK(o3.add(a, b) == must_index(o3, "233"));
  CHECK(o3.mul(a, b) == must_index(o3, "233"));
}

TEST_CASE("matrix semiring adapters use flattened labels") {
  const FiniteSemiring u2 = semiring_from_matrices(2, MatrixShape::Upper);
  CHECK(u2.name() == "bool_upper(2)");
  CHECK(u2.size() == 8);
  CHECK(u2.axioms_verified());
  const std::size_t id = must_index(u2, "1001");
  const std::size_t e12 = must_index(u2, "0100");
  CHECK(u2.mul(id, e12) == e12);
  CHECK(u2.add(id, e12) == must_index(u2, "1101"));

  CHECK(semiring_from_matrices(3, MatrixShape::Stair).size() == 5);
  CHECK(semiring_from_matrices(2, MatrixShape::Full).size() == 16);
}

TEST_CASE("closed_under distinguishes the two operations") {
  const FiniteSemiring o3 = semiring_from_transformations(3, MonoidClass::O);
  // 112 absorbs itself additively but squares to 111
  const std::vector<std::size_t> just_112 = {must_index(o3, "112")};
  CHECK(closed_under(o3, just_112, Ops::add_only()));
  CHECK_FALSE(closed_under(o3, just_112, Ops::mul_only()));
  CHECK_THROWS_AS(closed_under(o3, {99}, Ops::both()), DomainError);
}

TEST_CASE("subsemiring restricts the carrier") {
  const FiniteSemiring o3 = semiring_from_transformations(3, MonoidClass::O);
  std::vector<std::size_t> extensive;
  for (std::size_t i = 0; i < o3.size(); ++i)
    if (is_extensive(parse_transformation(o3.label(i)))) extensive.push_back(i);
  REQUIRE(extensive.size() == 5);

  const FiniteSemiring sub = subsemiring(o3, extensive);
  CHECK(sub.name() == "order_preserving(3)|sub");
  CHECK(sub.size() == 5);
  CHECK(sub.axioms_verified());
  // matches the directly built Catalan semiring element by element
  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(sub.label(i) == c3.label(i));
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(sub.add(i, j) == c3.add(i, j));
      CHECK(sub.mul(i, j) == c3.mul(i, j));
    }
  }

  CHECK_THROWS_AS(subsemiring(o3, {must_index(o3, "112")}), DomainError);
}

TEST_CASE("eval_term on worked examples") {
  const FiniteSemiring c4 = semiring_from_transformations(4, MonoidClass::C);
  const std::size_t x = must_index(c4, "2344");
  CHECK(eval_term(c4, parse_term("x^2"), {{'x', x}}) ==
        must_index(c4, "3444"));
  CHECK(eval_term(c4, parse_term("x^3"), {{'x', x}}) ==
        must_index(c4, "4444"));

  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  const std::map<char, std::size_t> env = {{'x', must_index(c3, "233")},
                                           {'y', must_index(c3, "223")}};
  CHECK(eval_term(c3, parse_term("xy"), env) == must_index(c3, "233"));
  CHECK(eval_term(c3, parse_term("x^2y+xy^2"), env) == must_index(c3, "333"));

  CHECK_THROWS_AS(eval_term(c3, parse_term("z"), env), DomainError);
  CHECK_THROWS_AS(eval_term(c3, parse_term("x"), {{'x', 99}}), DomainError);
}

TEST_CASE("power evaluation agrees with naive repeated multiplication") {
  for (const FiniteSemiring& s :
       {semiring_from_transformations(3, MonoidClass::C),
        semiring_from_matrices(2, MatrixShape::Upper)}) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      std::size_t naive = x;
      for (int k = 1; k <= 6; ++k) {
        const Term t = Term::power(Term::variable('x'), k);
        CHECK(eval_term(s, t, {{'x', x}}) == naive);
        naive = s.mul(naive, x);
      }
    }
  }
}

TEST_CASE("check_identity reports totals when the law holds") {
  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  const CheckReport r = check_identity(c3, parse_identity("x = x"));
  CHECK(r.holds);
  CHECK(r.checked == 5);
  CHECK_FALSE(r.witness.has_value());

  const FiniteSemiring u2 = semiring_from_matrices(2, MatrixShape::Upper);
  const CheckReport r2 = check_identity(u2, mixed_power_identity(2));
  CHECK(r2.holds);
  CHECK(r2.checked == 64);
}

TEST_CASE("check_identity returns the first witness in assignment order") {
  const FiniteSemiring c4 = semiring_from_transformations(4, MonoidClass::C);
  const CheckReport r = check_identity(c4, power_stability_identity(2));
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->assignment.size() == 1);
  CHECK(r.witness->assignment[0].first == 'x');
  CHECK(c4.label(r.witness->assignment[0].second) == "2344");
  CHECK(c4.label(r.witness->lhs_value) == "3444");
  CHECK(c4.label(r.witness->rhs_value) == "4444");

  // no earlier element separates the sides
  for (std::size_t i = 0; i < r.witness->assignment[0].second; ++i)
    CHECK(eval_term(c4, parse_term("x^2"), {{'x', i}}) ==
          eval_term(c4, parse_term("x^3"), {{'x', i}}));
}

TEST_CASE("check_identity witness is stable across thread counts") {
  const FiniteSemiring c4 = semiring_from_transformations(4, MonoidClass::C);
  const Identity id = mixed_power_identity(2);  // fails in catalan(4)
  CheckOptions serial;
  CheckOptions parallel;
  parallel.jobs = 4;
  const CheckReport a = check_identity(c4, id, serial);
  const CheckReport b = check_identity(c4, id, parallel);
  CHECK_FALSE(a.holds);
  CHECK_FALSE(b.holds);
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(a.witness->assignment == b.witness->assignment);
  CHECK(a.witness->lhs_value == b.witness->lhs_value);
  CHECK(a.witness->rhs_value == b.witness->rhs_value);

  // the witness certifies itself on re-evaluation
  std::map<char, std::size_t> env(a.witness->assignment.begin(),
                                  a.witness->assignment.end());
  CHECK(eval_term(c4, id.lhs, env) == a.witness->lhs_value);
  CHECK(eval_term(c4, id.rhs, env) == a.witness->rhs_value);
  CHECK(a.witness->lhs_value != a.witness->rhs_value);
}

TEST_CASE("check_identity refuses oversized assignments up front") {
  const FiniteSemiring u3 = semiring_from_matrices(3, MatrixShape::Upper);
  CheckOptions tight;
  tight.budget = 100;
  CHECK_THROWS_WITH(check_identity(u3, mixed_power_identity(3), tight),
                    Catch::Matchers::ContainsSubstring("4096") &&
                        Catch::Matchers::ContainsSubstring("budget of 100"));
}

TEST_CASE("check_homomorphism validates and certifies") {
  const FiniteSemiring cm3 =
      semiring_from_transformations(3, MonoidClass::Cminus);
  std::vector<std::size_t> ident(cm3.size());
  for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = i;
  const CheckReport ok = check_homomorphism(cm3, cm3, ident, Ops::both());
  CHECK(ok.holds);
  CHECK(ok.checked == 25);

  CHECK_THROWS_AS(check_homomorphism(cm3, cm3, {0, 1}, Ops::both()),
                  DimensionError);
  CHECK_THROWS_AS(check_homomorphism(cm3, cm3, {0, 1, 2, 3, 99}, Ops::both()),
                  DomainError);
  CheckOptions tight;
  tight.budget = 10;
  CHECK_THROWS_AS(check_homomorphism(cm3, cm3, ident, Ops::both(), tight),
                  ResourceLimitError);
}

TEST_CASE("stair map is a homomorphism for both operations") {
  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  const FiniteSemiring st3 = semiring_from_matrices(3, MatrixShape::Stair);
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < c3.size(); ++i) {
    const BoolMatrix m = stair_matrix(parse_transformation(c3.label(i)));
    std::string flat;
    for (const auto& row : m.to_row_vectors())
      for (int v : row) flat.push_back(v ? '1' : '0');
    map.push_back(must_index(st3, flat));
  }
  CHECK(check_homomorphism(c3, st3, map, Ops::both()).holds);
  CHECK(check_injective(map).holds);
}

TEST_CASE("action map keeps products but breaks sums") {
  const FiniteSemiring c2 = semiring_from_transformations(2, MonoidClass::C);
  const FiniteSemiring f2 = semiring_from_matrices(2, MatrixShape::Full);
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < c2.size(); ++i) {
    const BoolMatrix m = action_matrix(parse_transformation(c2.label(i)));
    std::string flat;
    for (const auto& row : m.to_row_vectors())
      for (int v : row) flat.push_back(v ? '1' : '0');
    map.push_back(must_index(f2, flat));
  }
  CHECK(check_homomorphism(c2, f2, map, Ops::mul_only()).holds);

  const CheckReport r = check_homomorphism(c2, f2, map, Ops::both());
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->operation == "add");
  CHECK(c2.label(r.witness->assignment[0].second) == "12");
  CHECK(c2.label(r.witness->assignment[1].second) == "22");
  CHECK(f2.label(r.witness->lhs_value) == "0101");   // image of 12 + 22
  CHECK(f2.label(r.witness->rhs_value) == "1101");   // matrix sum
}

TEST_CASE("check_injective finds the first collision") {
  CHECK(check_injective({3, 1, 4}).holds);
  const CheckReport r = check_injective({3, 1, 3, 1});
  CHECK_FALSE(r.holds);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->operation == "image");
  CHECK(r.witness->assignment ==
        std::vector<std::pair<char, std::size_t>>{{'a', 0}, {'b', 2}});
  CHECK(check_injective({}).holds);
}

TEST_CASE("isomorphism search on the two-element Catalan pair") {
  const FiniteSemiring c2 = semiring_from_transformations(2, MonoidClass::C);
  const FiniteSemiring cm2 =
      semiring_from_transformations(2, MonoidClass::Cminus);

  const CheckReport mul = check_isomorphism_exists(c2, cm2, Ops::mul_only());
  CHECK(mul.holds);
  REQUIRE(mul.bijection.has_value());
  // re-verify the certificate by hand
  const auto& f = *mul.bijection;
  for (std::size_t x = 0; x < c2.size(); ++x)
    for (std::size_t y = 0; y < c2.size(); ++y)
      CHECK(f[c2.mul(x, y)] == cm2.mul(f[x], f[y]));

  // the additive reducts are both two-chains
  CHECK(check_isomorphism_exists(c2, cm2, Ops::add_only()).holds);
  // but no bijection respects both operations at once
  CHECK_FALSE(check_isomorphism_exists(c2, cm2, Ops::both()).holds);
}

TEST_CASE("isomorphism search separates the size-3 additive reducts") {
  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  const FiniteSemiring cm3 =
      semiring_from_transformations(3, MonoidClass::Cminus);
  CHECK(check_isomorphism_exists(c3, cm3, Ops::mul_only()).holds);
  CHECK_FALSE(check_isomorphism_exists(c3, cm3, Ops::add_only()).holds);
  CHECK_FALSE(check_isomorphism_exists(c3, cm3, Ops::both()).holds);
}

TEST_CASE("isomorphism search edge cases") {
  const FiniteSemiring c2 = semiring_from_transformations(2, MonoidClass::C);
  const FiniteSemiring c3 = semiring_from_transformations(3, MonoidClass::C);
  // size mismatch is a verdict, not an error
  const CheckReport r = check_isomorphism_exists(c2, c3, Ops::both());
  CHECK_FALSE(r.holds);
  CHECK(r.checked == 0);

  CHECK_THROWS_AS(check_isomorphism_exists(c2, c2, Ops{false, false}),
                  DomainError);

  CheckOptions tiny;
  tiny.budget = 0;
  CHECK_THROWS_AS(check_isomorphism_exists(c2, c2, Ops::both(), tiny),
                  ResourceLimitError);

  // identity on itself is always found
  const CheckReport self = check_isomorphism_exists(c3, c3, Ops::both());
  CHECK(self.holds);
}

TEST_CASE("closed subsets of a semiring inherit its identities") {
  const FiniteSemiring u2 = semiring_from_matrices(2, MatrixShape::Upper);
  const Identity law = mixed_power_identity(2);
  REQUIRE(check_identity(u2, law).holds);

  // every nonempty closed subset satisfies the same law
  int closed_count = 0;
  for (unsigned mask = 1; mask < (1u << u2.size()); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < u2.size(); ++i)
      if ((mask >> i) & 1u) subset.push_back(i);
    if (!closed_under(u2, subset, Ops::both())) continue;
    ++closed_count;
    CHECK(check_identity(subsemiring(u2, subset), law).holds);
  }
  CHECK(closed_count == 62);
}
