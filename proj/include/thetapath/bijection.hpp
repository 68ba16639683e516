#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "thetapath/path.hpp"
#include "thetapath/tableau.hpp"

namespace thetapath {

// The named maps between SYT(theta(n)) and P_n. psi_t and xi_t first
// transpose the tableau; psi_swapped exchanges the S and W cases of psi and
// exists to fail validation.
enum class BijectionId { psi, phi, xi, xi_inv, psi_t, xi_t, psi_swapped };

// CLI spelling: psi, phi, xi, xi-inv, psi-t, xi-t, psi-swapped.
std::string_view bijection_name(BijectionId id);
std::optional<BijectionId> bijection_from_name(std::string_view name);

// True when the map consumes tableaux (psi, xi, psi_t, xi_t, psi_swapped),
// false when it consumes paths (phi, xi_inv).
bool tableau_domain(BijectionId id);

// Step i is read off the position of entry i+2: E for arm, N for leg; the
// heart entry gives the single backward step, S when 2 lies in the arm and
// W when 2 lies in the leg.
LatticePath psi(const StandardTableau& tableau);

// Inverse of psi: entry 1 in the corner, i+2 into the arm for p_i = E and
// into the leg for p_i = N, the backward step j placing j+2 in the heart,
// and 2 joining the arm for S, the leg for W.
StandardTableau phi(const LatticePath& path);

// Second map, fundamentally distinct from psi: with H the heart entry,
// steps before the backward one are read off entry i+1, steps after it off
// entry i+2, and the backward step sits at i = H-2 with its type decided by
// the region of H-1.
LatticePath xi(const StandardTableau& tableau);

// Inverse of xi, obtained by reversing its case analysis around the
// backward step index j: H = j+2 goes to the heart, entries i+1 (i < j) and
// i+2 (i > j) are placed by step direction, and j+1 joins the arm for S,
// the leg for W. Certified against a brute-force lookup inverse in the test
// suite before being trusted.
StandardTableau xi_inverse(const LatticePath& path);

LatticePath psi_transposed(const StandardTableau& tableau);  // psi after transpose
LatticePath xi_transposed(const StandardTableau& tableau);   // xi after transpose

// psi with the S and W cases exchanged. Returns the raw word: the point of
// this variant is that it generally leaves the first quadrant, so the
// result is deliberately not a LatticePath.
StepWord psi_swapped(const StandardTableau& tableau);

using MapInput = std::variant<StandardTableau, LatticePath>;
using MapOutput = std::variant<StandardTableau, LatticePath, StepWord>;

// Dispatch by id. Throws std::invalid_argument when the object kind does
// not match the map's domain.
MapOutput apply_map(BijectionId id, const MapInput& object);

}  // namespace thetapath
