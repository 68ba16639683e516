#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetapath/counting.hpp"
#include "thetapath/tableau.hpp"

using namespace thetapath;

namespace {

std::vector<std::string> texts_of(const std::vector<StandardTableau>& tableaux) {
  std::vector<std::string> texts;
  for (const StandardTableau& tableau : tableaux) texts.push_back(tableau.to_text());
  return texts;
}

}  // namespace

TEST_CASE("theta shape dimensions") {
  const ThetaShape shape(2);
  CHECK(shape.n() == 2);
  CHECK(shape.row_count() == 4);
  CHECK(shape.box_count() == 8);
  CHECK(shape.row_lengths() == std::vector<int>{4, 2, 1, 1});
  CHECK(ThetaShape(0).row_lengths() == std::vector<int>{2, 2});
  CHECK_THROWS_AS(ThetaShape(-1), std::invalid_argument);
}

TEST_CASE("the shape is its own conjugate") {
  for (int n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const ThetaShape shape(n);
    CHECK(shape.conjugate_row_lengths() == shape.row_lengths());
  }
}

TEST_CASE("validate_tableau verdicts") {
  CHECK(validate_tableau({{1, 2, 4, 5}, {3, 7}, {6}, {8}}, 2).ok());
  CHECK(validate_tableau({{1, 2}, {3, 4}}, 0).ok());

  SUBCASE("row must increase") {
    const TableauVerdict v = validate_tableau({{1, 3, 2}, {4, 5}, {6}}, 1);
    CHECK(v.violation == TableauViolation::row_not_increasing);
    CHECK(v.row == 1);
    CHECK(v.col == 3);
  }
  SUBCASE("column must increase") {
    const TableauVerdict v = validate_tableau({{1, 4, 5}, {2, 3}, {6}}, 1);
    CHECK(v.violation == TableauViolation::column_not_increasing);
    CHECK(v.row == 2);
    CHECK(v.col == 2);
  }
  SUBCASE("entries must be exactly 1..2n+4") {
    CHECK(validate_tableau({{1, 2, 2}, {3, 4}, {5}}, 1).violation ==
          TableauViolation::not_permutation);
    CHECK(validate_tableau({{1, 2, 9}, {3, 4}, {5}}, 1).violation ==
          TableauViolation::not_permutation);
  }
  SUBCASE("fillings of another shape are a different kind of error") {
    CHECK_THROWS_AS(validate_tableau({{1, 2, 3}, {4, 5}, {6}}, 2), std::invalid_argument);
    CHECK_THROWS_AS(validate_tableau({{1, 2, 3}, {4}}, 0), std::invalid_argument);
  }
}

TEST_CASE("constructors validate") {
  CHECK_NOTHROW(StandardTableau(1, {1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(StandardTableau(1, {1, 3, 2, 4, 5, 6}), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::from_rows({{1, 2, 3}, {4}}), std::invalid_argument);
  const StandardTableau t = StandardTableau::from_rows({{1, 2, 4, 5}, {3, 7}, {6}, {8}});
  CHECK(t.n() == 2);
  CHECK(t.entry(0, 3) == 5);
  CHECK(t.entry(1, 1) == 7);
  CHECK(t.rows() == std::vector<std::vector<int>>{{1, 2, 4, 5}, {3, 7}, {6}, {8}});
}

TEST_CASE("text round trips in both digit and comma form") {
  CHECK(StandardTableau::parse("1245/37/6/8").to_text() == "1245/37/6/8");
  CHECK(StandardTableau::parse("1,2,4,5/3,7/6/8").to_text() == "1245/37/6/8");
  CHECK(StandardTableau::parse("12/34").to_text() == "12/34");

  // Ten boxes force the comma form; the digit form cannot express entry 10.
  const std::string big = "1,2,3,4,5/6,7/8/9/10";
  CHECK(StandardTableau::parse(big).to_text() == big);
  CHECK_THROWS_AS(StandardTableau::parse("12345/67/8/9/10"), std::invalid_argument);

  CHECK_THROWS_AS(StandardTableau::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("12//34"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("1x/34"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("1,x/3,4"), std::invalid_argument);
  CHECK_THROWS_AS(StandardTableau::parse("132/45/6"), std::invalid_argument);
}

TEST_CASE("regions split entries into arm, leg and heart") {
  const RegionAssignment big = regions(StandardTableau::parse("1245/37/6/8"));
  CHECK(big.arm == std::vector<int>{1, 2, 4, 5});
  CHECK(big.leg == std::vector<int>{1, 3, 6, 8});
  CHECK(big.heart == 7);

  const RegionAssignment fig = regions(StandardTableau::parse("123/45/6"));
  CHECK(fig.arm == std::vector<int>{1, 2, 3});
  CHECK(fig.leg == std::vector<int>{1, 4, 6});
  CHECK(fig.heart == 5);

  const RegionAssignment tiny = regions(StandardTableau::parse("12/34"));
  CHECK(tiny.arm == std::vector<int>{1, 2});
  CHECK(tiny.leg == std::vector<int>{1, 3});
  CHECK(tiny.heart == 4);
}

TEST_CASE("region partition law over exhaustive domains") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      const RegionAssignment r = regions(tableau);
      REQUIRE(static_cast<int>(r.arm.size()) == n + 2);
      REQUIRE(static_cast<int>(r.leg.size()) == n + 2);
      REQUIRE(std::is_sorted(r.arm.begin(), r.arm.end()));
      REQUIRE(std::is_sorted(r.leg.begin(), r.leg.end()));

      std::set<int> arm(r.arm.begin(), r.arm.end());
      std::set<int> leg(r.leg.begin(), r.leg.end());
      std::set<int> overlap;
      std::set_intersection(arm.begin(), arm.end(), leg.begin(), leg.end(),
                            std::inserter(overlap, overlap.begin()));
      REQUIRE(overlap == std::set<int>{1});

      std::set<int> all(arm.begin(), arm.end());
      all.insert(leg.begin(), leg.end());
      REQUIRE(!all.count(r.heart));
      all.insert(r.heart);
      std::set<int> expected;
      for (int v = 1; v <= 2 * n + 4; ++v) expected.insert(v);
      REQUIRE(all == expected);

      // Increasingness pins 2 next to the corner, never in the heart.
      REQUIRE(r.heart != 2);
      REQUIRE((arm.count(2) || leg.count(2)));
    }
  }
}

TEST_CASE("transpose reflects across the diagonal") {
  CHECK(transpose(StandardTableau::parse("123/45/6")).to_text() == "146/25/3");
  CHECK(transpose(StandardTableau::parse("12/34")).to_text() == "13/24");
  const StandardTableau t = StandardTableau::parse("1245/37/6/8");
  CHECK(transpose(transpose(t)) == t);
}

TEST_CASE("transpose is an involution and permutes each family") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto family = enumerate_tableaux(n);
    std::set<std::string> originals;
    std::set<std::string> imaged;
    for (const StandardTableau& tableau : family) {
      REQUIRE(transpose(transpose(tableau)) == tableau);
      originals.insert(tableau.to_text());
      imaged.insert(transpose(tableau).to_text());
    }
    REQUIRE(originals == imaged);
  }
}

TEST_CASE("enumeration at the smallest sizes is pinned") {
  CHECK(texts_of(enumerate_tableaux(0)) == std::vector<std::string>{"12/34", "13/24"});
  CHECK(enumerate_tableaux(1).size() == 16);
  CHECK(enumerate_tableaux(2).size() == 90);
  CHECK(enumerate_tableaux(3).size() == 448);
}

TEST_CASE("enumeration agrees with the permutation oracle for n <= 1") {
  for (int n = 0; n <= 1; ++n) {
    CAPTURE(n);
    std::vector<std::vector<int>> flat;
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      flat.push_back(tableau.row_major());
    }
    CHECK(flat == oracle::standard_fillings(n));
  }
}

TEST_CASE("enumerated lists are sorted, duplicate-free and valid") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    const auto family = enumerate_tableaux(n);
    CHECK(std::is_sorted(family.begin(), family.end()));
    CHECK(std::adjacent_find(family.begin(), family.end()) == family.end());
    for (const StandardTableau& tableau : family) {
      REQUIRE(validate_tableau(tableau.rows(), n).ok());
    }
  }
}

TEST_CASE("enumeration refuses to exceed the cap") {
  CHECK_THROWS_AS((void)enumerate_tableaux(1, 15), resource_limit_error);
  CHECK_NOTHROW((void)enumerate_tableaux(1, 16));
  CHECK_THROWS_AS((void)enumerate_tableaux(9, 1000), resource_limit_error);
}

TEST_CASE("hook length counts") {
  CHECK(hook_length_count({2, 2}) == 2);
  CHECK(hook_length_count({3, 2, 1}) == 16);
  CHECK(hook_length_count({4, 2, 1, 1}) == 90);
  CHECK(hook_length_count({}) == 1);

  // Single-row and single-column shapes admit exactly one filling.
  for (int k = 1; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(hook_length_count({k}) == 1);
    CHECK(hook_length_count(std::vector<int>(k, 1)) == 1);
  }

  // Two equal rows give the Catalan numbers; this value needs >50 bits.
  CHECK(hook_length_count({30, 30}) == BigInt("3814986502092304"));

  CHECK_THROWS_AS((void)hook_length_count({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)hook_length_count({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)hook_length_count({-1}), std::invalid_argument);
}

TEST_CASE("hook length of the theta shape matches the closed form") {
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    CHECK(hook_length_count(ThetaShape(n).row_lengths()) == count_tableaux_closed_form(n));
  }
}

TEST_CASE("render golden files") {
  CHECK(render_tableau_text(StandardTableau::parse("1245/37/6/8")) ==
        "1 2 4 5\n"
        "3 7\n"
        "6\n"
        "8\n");
  CHECK(render_tableau_text(StandardTableau::parse("1,2,3,4,5/6,7/8/9/10")) ==
        " 1  2  3  4  5\n"
        " 6  7\n"
        " 8\n"
        " 9\n"
        "10\n");
}
