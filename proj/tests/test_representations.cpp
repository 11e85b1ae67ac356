#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "catalan/counting.hpp"
#include "catalan/errors.hpp"
#include "catalan/representations.hpp"

using namespace catalan;

TEST_CASE("partition basics") {
  CHECK(Partition({2, 1}).to_text() == "[2,1]");
  CHECK(Partition(std::vector<int>{}).to_text() == "[]");
  CHECK(Partition({3, 3, 1}).to_text() == "[3,3,1]");
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("action matrix is one-hot by rows and multiplicative") {
  CHECK(action_matrix(parse_transformation("2344")).to_text() ==
        "0100\n0010\n0001\n0001");
  CHECK(action_matrix(parse_transformation("212")).to_text() ==
        "010\n100\n010");

  for (const auto& a : enumerate_transformations(3, MonoidClass::O))
    for (const auto& b : enumerate_transformations(3, MonoidClass::O))
      CHECK(action_matrix(compose(a, b)) ==
            action_matrix(a) * action_matrix(b));

  // extensive inputs land upper triangular
  for (const auto& a : enumerate_transformations(4, MonoidClass::C))
    CHECK(action_matrix(a).is_upper_triangular());
}

TEST_CASE("action matrix does not respect addition") {
  const Transformation a = parse_transformation("12");
  const Transformation b = parse_transformation("22");
  CHECK(add(a, b) == b);
  CHECK(action_matrix(a) + action_matrix(b) != action_matrix(add(a, b)));
}

TEST_CASE("stair matrix fills the interval from i to the image") {
  CHECK(stair_matrix(parse_transformation("1244")).to_text() ==
        "1000\n0100\n0011\n0001");
  CHECK(stair_matrix(parse_transformation("123")).to_text() ==
        "100\n010\n001");
  CHECK(stair_matrix(parse_transformation("333")).to_text() ==
        "111\n011\n001");
  CHECK_THROWS_WITH(stair_matrix(parse_transformation("132")),
                    Catch::Matchers::ContainsSubstring("not order-preserving"));
  CHECK_THROWS_WITH(stair_matrix(parse_transformation("113")),
                    Catch::Matchers::ContainsSubstring("not extensive"));
}

TEST_CASE("stair matrix is a semiring isomorphism onto the stair matrices") {
  for (int n = 1; n <= 4; ++n) {
    const auto elems = enumerate_transformations(n, MonoidClass::C);
    std::vector<BoolMatrix> images;
    for (const auto& a : elems) {
      const BoolMatrix sa = stair_matrix(a);
      CHECK(sa.is_stair_triangular());
      images.push_back(sa);
      for (const auto& b : elems) {
        CHECK(stair_matrix(compose(a, b)) == sa * stair_matrix(b));
        CHECK(stair_matrix(add(a, b)) == sa + stair_matrix(b));
      }
    }
    // bijective onto the full stair set
    std::sort(images.begin(), images.end());
    CHECK(images == enumerate_matrices(n, MatrixShape::Stair));
  }
}

TEST_CASE("unary matrix golden table for the decreasing maps of a 3-chain") {
  const std::map<std::string, std::string> expected = {
      {"111", "00\n00"}, {"112", "00\n10"}, {"113", "00\n11"},
      {"122", "10\n10"}, {"123", "10\n11"},
  };
  const auto elems = enumerate_transformations(3, MonoidClass::Cminus);
  REQUIRE(elems.size() == expected.size());
  for (const auto& a : elems)
    CHECK(unary_matrix(a).to_text() ==
          expected.at(format_transformation(a)));
}

TEST_CASE("unary matrix domain preconditions") {
  CHECK_THROWS_WITH(unary_matrix(parse_transformation("132")),
                    Catch::Matchers::ContainsSubstring("not order-preserving"));
  CHECK_THROWS_WITH(unary_matrix(parse_transformation("133")),
                    Catch::Matchers::ContainsSubstring("not decreasing"));
  CHECK_THROWS_AS(unary_matrix(parse_transformation("1")), DomainError);
}

TEST_CASE("unary matrix is an injective semiring homomorphism") {
  const auto elems = enumerate_transformations(4, MonoidClass::Cminus);
  std::vector<BoolMatrix> seen;
  for (const auto& a : elems) {
    CHECK(unary_matrix(a).is_lower_triangular());
    seen.push_back(unary_matrix(a));
    for (const auto& b : elems) {
      CHECK(unary_matrix(compose(a, b)) == unary_matrix(a) * unary_matrix(b));
      CHECK(unary_matrix(add(a, b)) == unary_matrix(a) + unary_matrix(b));
    }
  }
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("conjugated unary matrix is the antidiagonal sandwich") {
  for (const auto& a : enumerate_transformations(4, MonoidClass::Cminus)) {
    const BoolMatrix m = unary_matrix(a);
    const BoolMatrix p = BoolMatrix::antidiagonal(m.n());
    CHECK(unary_matrix_conjugated(a) == p * m * p);
    CHECK(unary_matrix_conjugated(a).is_upper_triangular());
  }
}

TEST_CASE("complement pipeline agrees with conjugating the reversed map") {
  const Transformation a = parse_transformation("1244");
  CHECK(complement_pipeline(a).to_text() == "111\n011\n000");
  CHECK(complement_pipeline(a) == unary_matrix_conjugated(bar(a)));

  for (int n = 2; n <= 5; ++n)
    for (const auto& t : enumerate_transformations(n, MonoidClass::C))
      CHECK(complement_pipeline(t) == unary_matrix_conjugated(bar(t)));

  // stages of the pipeline on the worked example
  const BoolMatrix s = stair_matrix(a);
  CHECK(s.to_text() == "1000\n0100\n0011\n0001");
  CHECK(s.negate_upper_triangle().to_text() == "0111\n0011\n0000\n0000");
  CHECK(s.negate_upper_triangle().crop_first_col_last_row() ==
        complement_pipeline(a));
}

TEST_CASE("matrix_to_partition reads row lengths bottom-up") {
  CHECK(matrix_to_partition(BoolMatrix::parse("10\n11")).to_text() == "[2,1]");
  CHECK(matrix_to_partition(BoolMatrix::parse("00\n00")).to_text() == "[]");
  CHECK(matrix_to_partition(BoolMatrix::parse("000\n100\n110")).to_text() ==
        "[2,1]");
  CHECK_THROWS_AS(matrix_to_partition(BoolMatrix::parse("101\n110\n111")),
                  MalformedMatrixError);
  CHECK_THROWS_AS(matrix_to_partition(BoolMatrix::parse("11\n00")),
                  MalformedMatrixError);
  CHECK_THROWS_AS(matrix_to_partition(BoolMatrix::parse("10\n00")),
                  MalformedMatrixError);
}

TEST_CASE("unary matrices biject with staircase partitions") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Partition> via_maps;
    for (const auto& a :
         enumerate_transformations(n + 1, MonoidClass::Cminus))
      via_maps.push_back(matrix_to_partition(unary_matrix(a)));
    std::sort(via_maps.begin(), via_maps.end());
    CHECK(std::adjacent_find(via_maps.begin(), via_maps.end()) ==
          via_maps.end());

    auto direct = enumerate_staircase_partitions(n);
    std::sort(direct.begin(), direct.end());
    CHECK(via_maps == direct);
  }
}

TEST_CASE("staircase partition enumeration order and counts") {
  std::vector<std::string> listed;
  for (const auto& p : enumerate_staircase_partitions(2))
    listed.push_back(p.to_text());
  CHECK(listed ==
        std::vector<std::string>{"[]", "[1]", "[1,1]", "[2]", "[2,1]"});

  const std::uint64_t expected[] = {2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int n = 1; n <= 8; ++n) {
    CHECK(count_staircase_partitions(n) == expected[n - 1]);
    CHECK(count_staircase_partitions(n) ==
          catalan_number(static_cast<unsigned>(n) + 1));
    if (n <= 6)
      CHECK(enumerate_staircase_partitions(n).size() == expected[n - 1]);
  }
  CHECK(count_staircase_partitions(12) == catalan_number(13));
  CHECK(count_staircase_partitions(12) == 742900);
}

TEST_CASE("staircase enumeration cap") {
  CHECK_THROWS_AS(enumerate_staircase_partitions(13), ResourceLimitError);
  CHECK(enumerate_staircase_partitions(13, true).size() == catalan_number(14));
  CHECK_THROWS_AS(enumerate_staircase_partitions(0), DomainError);
  CHECK_THROWS_AS(count_staircase_partitions(0), DomainError);
}
