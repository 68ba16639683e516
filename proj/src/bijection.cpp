#include "thetapath/bijection.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetapath {

std::string_view bijection_name(BijectionId id) {
  switch (id) {
    case BijectionId::psi: return "psi";
    case BijectionId::phi: return "phi";
    case BijectionId::xi: return "xi";
    case BijectionId::xi_inv: return "xi-inv";
    case BijectionId::psi_t: return "psi-t";
    case BijectionId::xi_t: return "xi-t";
    case BijectionId::psi_swapped: return "psi-swapped";
  }
  throw std::logic_error("unreachable bijection id");
}

std::optional<BijectionId> bijection_from_name(std::string_view name) {
  for (BijectionId id : {BijectionId::psi, BijectionId::phi, BijectionId::xi, BijectionId::xi_inv,
                         BijectionId::psi_t, BijectionId::xi_t, BijectionId::psi_swapped}) {
    if (name == bijection_name(id)) return id;
  }
  return std::nullopt;
}

bool tableau_domain(BijectionId id) {
  return id != BijectionId::phi && id != BijectionId::xi_inv;
}

namespace {

// Membership flags per entry value; entry 1 is in both arm and leg, the
// heart entry in neither.
struct RegionLookup {
  std::vector<bool> in_arm;
  std::vector<bool> in_leg;
  int heart = 0;

  explicit RegionLookup(const StandardTableau& tableau)
      : in_arm(tableau.shape().box_count() + 1, false),
        in_leg(tableau.shape().box_count() + 1, false) {
    const RegionAssignment r = regions(tableau);
    for (int v : r.arm) in_arm[v] = true;
    for (int v : r.leg) in_leg[v] = true;
    heart = r.heart;
  }
};

StepWord psi_word(const StandardTableau& tableau, bool swap_backward_cases) {
  const RegionLookup look(tableau);
  const int total = tableau.shape().box_count();
  StepWord word;
  word.reserve(total - 2);
  for (int v = 3; v <= total; ++v) {
    if (v == look.heart) {
      const bool two_in_arm = look.in_arm[2];
      word += (two_in_arm != swap_backward_cases) ? 'S' : 'W';
    } else if (look.in_arm[v]) {
      word += 'E';
    } else {
      word += 'N';
    }
  }
  return word;
}

// Shared tail of phi and xi_inverse: assemble the tableau from its regions.
StandardTableau tableau_from_regions(std::vector<int> arm, std::vector<int> leg, int heart) {
  std::sort(arm.begin(), arm.end());
  std::sort(leg.begin(), leg.end());
  std::vector<std::vector<int>> rows;
  rows.push_back(std::move(arm));
  rows.push_back({leg[1], heart});
  for (std::size_t i = 2; i < leg.size(); ++i) rows.push_back({leg[i]});
  return StandardTableau::from_rows(rows);
}

}  // namespace

LatticePath psi(const StandardTableau& tableau) {
  return LatticePath(psi_word(tableau, false), tableau.n());
}

StepWord psi_swapped(const StandardTableau& tableau) { return psi_word(tableau, true); }

StandardTableau phi(const LatticePath& path) {
  const StepWord& word = path.word();
  const int j = path.backward_step_index();
  std::vector<int> arm = {1};
  std::vector<int> leg = {1};
  (word[j - 1] == 'S' ? arm : leg).push_back(2);
  for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
    if (i == j) continue;
    (word[i - 1] == 'E' ? arm : leg).push_back(i + 2);
  }
  return tableau_from_regions(std::move(arm), std::move(leg), j + 2);
}

LatticePath xi(const StandardTableau& tableau) {
  const RegionLookup look(tableau);
  const int heart = look.heart;
  const int steps = tableau.shape().box_count() - 2;
  StepWord word;
  word.reserve(steps);
  for (int i = 1; i <= steps; ++i) {
    if (i + 2 < heart) {
      word += look.in_arm[i + 1] ? 'E' : 'N';
    } else if (i + 2 == heart) {
      word += look.in_arm[i + 1] ? 'S' : 'W';
    } else {
      word += look.in_arm[i + 2] ? 'E' : 'N';
    }
  }
  return LatticePath(word, tableau.n());
}

StandardTableau xi_inverse(const LatticePath& path) {
  const StepWord& word = path.word();
  const int j = path.backward_step_index();
  std::vector<int> arm = {1};
  std::vector<int> leg = {1};
  for (int i = 1; i <= static_cast<int>(word.size()); ++i) {
    if (i < j) {
      (word[i - 1] == 'E' ? arm : leg).push_back(i + 1);
    } else if (i == j) {
      (word[i - 1] == 'S' ? arm : leg).push_back(j + 1);
    } else {
      (word[i - 1] == 'E' ? arm : leg).push_back(i + 2);
    }
  }
  return tableau_from_regions(std::move(arm), std::move(leg), j + 2);
}

LatticePath psi_transposed(const StandardTableau& tableau) { return psi(transpose(tableau)); }

LatticePath xi_transposed(const StandardTableau& tableau) { return xi(transpose(tableau)); }

MapOutput apply_map(BijectionId id, const MapInput& object) {
  const bool have_tableau = std::holds_alternative<StandardTableau>(object);
  if (tableau_domain(id) != have_tableau) {
    throw std::invalid_argument(std::string("map ") + std::string(bijection_name(id)) +
                                " expects a " + (tableau_domain(id) ? "tableau" : "path"));
  }
  switch (id) {
    case BijectionId::psi: return psi(std::get<StandardTableau>(object));
    case BijectionId::phi: return phi(std::get<LatticePath>(object));
    case BijectionId::xi: return xi(std::get<StandardTableau>(object));
    case BijectionId::xi_inv: return xi_inverse(std::get<LatticePath>(object));
    case BijectionId::psi_t: return psi_transposed(std::get<StandardTableau>(object));
    case BijectionId::xi_t: return xi_transposed(std::get<StandardTableau>(object));
    case BijectionId::psi_swapped: return psi_swapped(std::get<StandardTableau>(object));
  }
  throw std::logic_error("unreachable bijection id");
}

}  // namespace thetapath
