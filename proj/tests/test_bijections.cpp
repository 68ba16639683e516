#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "thetapath/bijection.hpp"
#include "thetapath/verify.hpp"

using namespace thetapath;

TEST_CASE("map names round trip and classify their domains") {
  const BijectionId all[] = {BijectionId::psi,    BijectionId::phi,  BijectionId::xi,
                             BijectionId::xi_inv, BijectionId::psi_t, BijectionId::xi_t,
                             BijectionId::psi_swapped};
  for (BijectionId id : all) {
    CAPTURE(bijection_name(id));
    CHECK(bijection_from_name(bijection_name(id)) == id);
  }
  CHECK(bijection_name(BijectionId::xi_inv) == "xi-inv");
  CHECK(!bijection_from_name("sigma").has_value());
  CHECK(!bijection_from_name("").has_value());

  CHECK(tableau_domain(BijectionId::psi));
  CHECK(tableau_domain(BijectionId::xi));
  CHECK(tableau_domain(BijectionId::psi_t));
  CHECK(tableau_domain(BijectionId::xi_t));
  CHECK(tableau_domain(BijectionId::psi_swapped));
  CHECK(!tableau_domain(BijectionId::phi));
  CHECK(!tableau_domain(BijectionId::xi_inv));
}

TEST_CASE("psi on the worked examples") {
  CHECK(psi(StandardTableau::parse("123/45/6")).word() == "ENSN");
  CHECK(psi(StandardTableau::parse("134/25/6")).word() == "EEWN");
  CHECK(psi(StandardTableau::parse("1245/37/6/8")).word() == "NEENSN");
  CHECK(psi(StandardTableau::parse("12/34")).word() == "NS");
  CHECK(psi(StandardTableau::parse("13/24")).word() == "EW");
}

TEST_CASE("phi on the worked examples") {
  CHECK(phi(LatticePath::parse("ENSN")).to_text() == "123/45/6");
  CHECK(phi(LatticePath::parse("NS")).to_text() == "12/34");
  CHECK(phi(LatticePath::parse("EW")).to_text() == "13/24");
  CHECK(phi(LatticePath::parse("NEENSN")).to_text() == "1245/37/6/8");
}

TEST_CASE("xi on the worked examples") {
  CHECK(xi(StandardTableau::parse("123/45/6")).word() == "EEWN");
  CHECK(xi(StandardTableau::parse("1245/37/6/8")).word() == "ENEEWN");
  CHECK(xi(StandardTableau::parse("12/34")).word() == "EW");
}

TEST_CASE("xi_inverse on the worked examples") {
  CHECK(xi_inverse(LatticePath::parse("EEWN")).to_text() == "123/45/6");
  CHECK(xi_inverse(LatticePath::parse("EW")).to_text() == "12/34");
  CHECK(xi_inverse(LatticePath::parse("ENEEWN")).to_text() == "1245/37/6/8");
}

TEST_CASE("transposed variants") {
  CHECK(psi_transposed(StandardTableau::parse("123/45/6")).word() == "NEWE");
  CHECK(xi_transposed(StandardTableau::parse("12/34")).word() == "NS");
}

TEST_CASE("psi_swapped produces raw words that fail validation") {
  CHECK(psi_swapped(StandardTableau::parse("134/25/6")) == "EESN");
  CHECK(psi_swapped(StandardTableau::parse("123/45/6")) == "ENWN");
  CHECK(psi_swapped(StandardTableau::parse("12/34")) == "NW");

  const PathVerdict v = validate_path("EESN", 1);
  CHECK(v.violation == PathViolation::leaves_quadrant);
  CHECK(v.step_index == 3);
  CHECK(trace_positions("EES").back() == Point{2, -1});

  CHECK(validate_path("ENWN", 1).violation == PathViolation::wrong_endpoint);
  CHECK(validate_path("NW", 0).violation == PathViolation::leaves_quadrant);
}

TEST_CASE("the reference table is reproduced pair by pair") {
  for (const auto& [tableau_text, word] : figure1_fixture()) {
    CAPTURE(tableau_text);
    CHECK(psi(StandardTableau::parse(std::string(tableau_text))).word() == word);
  }
}

TEST_CASE("round trips hold exhaustively") {
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      REQUIRE(phi(psi(tableau)) == tableau);
      REQUIRE(xi_inverse(xi(tableau)) == tableau);
    }
    for (const LatticePath& path : enumerate_paths(n)) {
      REQUIRE(psi(phi(path)) == path);
      REQUIRE(xi(xi_inverse(path)) == path);
    }
  }
}

TEST_CASE("xi_inverse equals the brute-force lookup inverse") {
  // The lookup inverse is assembled from the forward map alone, so it cannot
  // share a mistake with the case analysis in xi_inverse.
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    std::map<std::string, StandardTableau> lookup;
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      lookup.emplace(xi(tableau).word(), tableau);
    }
    for (const LatticePath& path : enumerate_paths(n)) {
      const auto it = lookup.find(path.word());
      REQUIRE(it != lookup.end());
      REQUIRE(xi_inverse(path) == it->second);
    }
  }
}

TEST_CASE("images are valid, distinct and fill the codomain") {
  for (int n = 0; n <= 3; ++n) {
    CAPTURE(n);
    std::set<std::string> targets;
    for (const LatticePath& path : enumerate_paths(n)) targets.insert(path.word());
    for (auto map : {psi, xi, psi_transposed, xi_transposed}) {
      std::set<std::string> images;
      for (const StandardTableau& tableau : enumerate_tableaux(n)) {
        const LatticePath image = map(tableau);
        REQUIRE(validate_path(image.word(), n).ok());
        images.insert(image.word());
      }
      REQUIRE(images == targets);
    }
  }
}

TEST_CASE("psi and xi are different maps at every size") {
  CHECK(psi(StandardTableau::parse("12/34")).word() == "NS");
  CHECK(xi(StandardTableau::parse("12/34")).word() == "EW");
  for (int n = 0; n <= 4; ++n) {
    CAPTURE(n);
    bool differ = false;
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      if (psi(tableau) != xi(tableau)) {
        differ = true;
        break;
      }
    }
    CHECK(differ);
  }
}

TEST_CASE("apply_map dispatches and rejects wrong domains") {
  const StandardTableau tableau = StandardTableau::parse("123/45/6");
  const LatticePath path = LatticePath::parse("ENSN");

  CHECK(std::get<LatticePath>(apply_map(BijectionId::psi, tableau)).word() == "ENSN");
  CHECK(std::get<StandardTableau>(apply_map(BijectionId::phi, path)).to_text() == "123/45/6");
  CHECK(std::get<LatticePath>(apply_map(BijectionId::xi, tableau)).word() == "EEWN");
  CHECK(std::get<StandardTableau>(apply_map(BijectionId::xi_inv, LatticePath::parse("EEWN")))
            .to_text() == "123/45/6");
  CHECK(std::get<LatticePath>(apply_map(BijectionId::psi_t, tableau)).word() == "NEWE");
  CHECK(std::get<LatticePath>(apply_map(BijectionId::xi_t, StandardTableau::parse("12/34")))
            .word() == "NS");
  CHECK(std::get<StepWord>(apply_map(BijectionId::psi_swapped, tableau)) == "ENWN");

  CHECK_THROWS_AS((void)apply_map(BijectionId::psi, MapInput(path)), std::invalid_argument);
  CHECK_THROWS_AS((void)apply_map(BijectionId::phi, MapInput(tableau)), std::invalid_argument);
}

TEST_CASE("every psi image prepares its backward step") {
  for (int n = 0; n <= 4; ++n) {
    for (const StandardTableau& tableau : enumerate_tableaux(n)) {
      const std::string word = psi(tableau).word();
      const int j = backward_step_index(word);
      const char needed = word[j - 1] == 'S' ? 'N' : 'E';
      REQUIRE(word.substr(0, j - 1).find(needed) != std::string::npos);
    }
  }
}
